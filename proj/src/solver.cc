#include <rainbow/solver.hh>
#include <rainbow/parallel.hh>
#include <rainbow/rainbow_check.hh>
#include <rainbow/steiner.hh>

#include <algorithm>
#include <atomic>
#include <queue>
#include <stdexcept>
#include <string>

using std::optional;
using std::to_string;
using std::vector;

namespace rainbow
{
    namespace
    {
        auto check_solvable(const Graph & g, int k) -> void
        {
            if (k != 2 && k != 3)
                throw std::invalid_argument("k must be 2 or 3, got " + to_string(k));
            if (g.size() < k)
                throw GraphError("graph needs at least " + to_string(k) + " vertices");
            if (! is_connected(g))
                throw GraphError("graph is not connected");
        }

        struct Prefix
        {
            vector<Color> colors;   // per order position
            int max_used;
        };

        class PaletteSearch
        {
            private:
                const Graph & _g;
                const int _k;
                const int _palette;
                const vector<EdgeIndex> & _order;
                const int _step;
                const long long _budget;
                std::atomic<long long> & _nodes;
                std::atomic<bool> & _aborted;

            public:
                PaletteSearch(const Graph & g, int k, int palette, const vector<EdgeIndex> & order,
                        long long budget, std::atomic<long long> & nodes, std::atomic<bool> & aborted) :
                    _g(g), _k(k), _palette(palette), _order(order),
                    _step(std::max(1, (g.edge_count() + 3) / 4)),
                    _budget(budget), _nodes(nodes), _aborted(aborted)
                {
                }

                // Colours the edge at position `depth` may take, respecting canonicity and
                // leaving enough edges to introduce every remaining palette colour.
                auto candidates(int depth, int max_used) const -> vector<Color>
                {
                    vector<Color> result;
                    const int m = _g.edge_count();
                    for (Color col = 0 ; col <= std::min(max_used + 1, _palette - 1) ; ++col) {
                        int still_missing = _palette - 1 - std::max(max_used, col);
                        if (still_missing > m - depth - 1)
                            continue;
                        result.push_back(col);
                    }
                    return result;
                }

                auto prefixes(int depth_limit) const -> vector<Prefix>
                {
                    vector<Prefix> level{ Prefix{ {}, -1 } };
                    for (int depth = 0 ; depth < depth_limit ; ++depth) {
                        vector<Prefix> next;
                        for (auto & p : level)
                            for (auto col : candidates(depth, p.max_used)) {
                                Prefix q = p;
                                q.colors.push_back(col);
                                q.max_used = std::max(p.max_used, col);
                                next.push_back(std::move(q));
                            }
                        level = std::move(next);
                    }
                    return level;
                }

                // Depth-first search below a prefix. Returns the first complete valid
                // colouring in lexicographic order, or nothing. `stop` is polled so that
                // workers behind an earlier success can give up.
                template <typename Stop_>
                auto run(const Prefix & prefix, Stop_ && stop) const -> optional<vector<Color>>
                {
                    const int m = _g.edge_count();
                    vector<Color> colors(m, detail::wildcard);
                    for (int d = 0 ; d < static_cast<int>(prefix.colors.size()) ; ++d)
                        colors[_order[d]] = prefix.colors[d];

                    auto search = [&] (auto & self, int depth, int max_used) -> bool {
                        if (depth == m)
                            return detail::check_colors(_g, colors, _k).ok;

                        for (auto col : candidates(depth, max_used)) {
                            if (_aborted.load(std::memory_order_relaxed) || stop())
                                return false;
                            if (++_nodes > _budget) {
                                _aborted = true;
                                return false;
                            }

                            colors[_order[depth]] = col;
                            bool viable = true;
                            if ((depth + 1) % _step == 0 && depth + 1 < m)
                                viable = detail::check_colors(_g, colors, _k).ok;
                            if (viable && self(self, depth + 1, std::max(max_used, col)))
                                return true;
                        }
                        colors[_order[depth]] = detail::wildcard;
                        return false;
                    };

                    if (search(search, static_cast<int>(prefix.colors.size()), prefix.max_used))
                        return colors;
                    return std::nullopt;
                }
        };

        struct LevelOutcome
        {
            optional<vector<Color>> witness;
            bool complete;   // false if the budget ran out before the level was settled
        };

        auto search_palette(const Graph & g, int k, int palette, const vector<EdgeIndex> & order,
                const SolveOptions & options, std::atomic<long long> & nodes) -> LevelOutcome
        {
            std::atomic<bool> aborted{ false };
            PaletteSearch search(g, k, palette, order, options.budget, nodes, aborted);

            if (options.jobs <= 1) {
                auto found = search.run(Prefix{ {}, -1 }, [] { return false; });
                return LevelOutcome{ found, found.has_value() || ! aborted.load() };
            }

            // Split into canonical prefixes; the lowest-indexed prefix holding a
            // solution gives the same witness as the sequential search.
            int depth = 0;
            vector<Prefix> work = search.prefixes(0);
            while (depth < g.edge_count() && static_cast<int>(work.size()) < 4 * options.jobs)
                work = search.prefixes(++depth);

            const int count = static_cast<int>(work.size());
            std::atomic<int> best{ count };
            vector<optional<vector<Color>>> found(count);
            parallel_for(count, options.jobs, [&] (int i) {
                if (best.load() < i)
                    return;
                found[i] = search.run(work[i], [&] { return best.load(std::memory_order_relaxed) < i; });
                if (found[i]) {
                    int seen = best.load();
                    while (i < seen && ! best.compare_exchange_weak(seen, i))
                        ;
                }
            });

            int winner = best.load();
            if (winner < count)
                return LevelOutcome{ found[winner], true };
            return LevelOutcome{ std::nullopt, ! aborted.load() };
        }
    }

    auto lower_bound(const Graph & g, int k) -> int
    {
        check_solvable(g, k);
        return k == 2 ? diameter(g) : sdiam3(g);
    }

    auto bfs_edge_order(const Graph & g) -> vector<EdgeIndex>
    {
        vector<EdgeIndex> order;
        vector<char> placed(g.edge_count(), 0), seen(g.size(), 0);
        for (Vertex root = 0 ; root < g.size() ; ++root) {
            if (seen[root])
                continue;
            std::queue<Vertex> queue;
            queue.push(root);
            seen[root] = 1;
            while (! queue.empty()) {
                Vertex v = queue.front();
                queue.pop();
                for (auto & inc : g.incident(v)) {
                    if (! placed[inc.edge]) {
                        placed[inc.edge] = 1;
                        order.push_back(inc.edge);
                    }
                    if (! seen[inc.neighbour]) {
                        seen[inc.neighbour] = 1;
                        queue.push(inc.neighbour);
                    }
                }
            }
        }
        return order;
    }

    auto rx_exact(const Graph & g, int k, const SolveOptions & options) -> SolveResult
    {
        check_solvable(g, k);
        const int lb = lower_bound(g, k);
        if (lb > max_palette_limit)
            throw GraphError("lower bound " + to_string(lb) + " exceeds the supported palette of " + to_string(max_palette_limit));

        EdgeColoring best = distinct_coloring(g);
        if (options.upper_hint) {
            validate_coloring(g, *options.upper_hint);
            if (! detail::check_colors(g, options.upper_hint->colors, k, options.jobs).ok)
                throw GraphError("upper hint is not a valid colouring");
            if (options.upper_hint->colors_used() < best.colors_used())
                best = *options.upper_hint;
        }
        const int known_upper = best.colors_used();

        auto order = bfs_edge_order(g);
        std::atomic<long long> nodes{ 0 };

        for (int palette = lb ; palette < known_upper ; ++palette) {
            if (palette > max_palette_limit)
                return SolveResult{ SolveStatus::budget_exhausted, known_upper, palette, known_upper, best, nodes.load(), lb };

            auto outcome = search_palette(g, k, palette, order, options, nodes);
            if (outcome.witness) {
                EdgeColoring witness{ {}, palette };
                witness.colors.resize(g.edge_count());
                for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
                    witness.colors[e] = (*outcome.witness)[e];
                return SolveResult{ SolveStatus::exact, palette, palette, palette, witness, nodes.load(), lb };
            }
            if (! outcome.complete)
                return SolveResult{ SolveStatus::budget_exhausted, known_upper, palette, known_upper, best, std::min(nodes.load(), options.budget), lb };
        }

        return SolveResult{ SolveStatus::exact, known_upper, known_upper, known_upper, best, nodes.load(), lb };
    }
}
