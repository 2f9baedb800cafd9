#include <rainbow/rainbow_check.hh>
#include <rainbow/parallel.hh>

#include <algorithm>
#include <atomic>
#include <deque>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

using std::optional;
using std::span;
using std::to_string;
using std::vector;

namespace rainbow
{
    namespace
    {
        using Family = vector<ColorSet>;

        auto check_options(const Graph & g, const EdgeColoring & c, const CheckOptions & options) -> void
        {
            if (options.palette_limit < 1 || options.palette_limit > max_palette_limit)
                throw std::invalid_argument("palette limit must lie in [1," + to_string(max_palette_limit) + "]");
            validate_coloring(g, c);
            if (c.palette_size > options.palette_limit)
                throw GraphError("palette " + to_string(c.palette_size) + " exceeds the configured limit " + to_string(options.palette_limit));
        }

        auto check_triple(const Graph & g, const Triple & s) -> void
        {
            for (auto v : s)
                if (v < 0 || v >= g.size())
                    throw GraphError("vertex " + to_string(v) + " out of range");
            if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
                throw GraphError("vertex set must contain three distinct vertices");
        }

        // Inserts s unless a member is a subset of it; drops members that are supersets.
        auto antichain_insert(Family & family, ColorSet s) -> bool
        {
            for (auto & m : family)
                if (m.subset_of(s))
                    return false;
            std::erase_if(family, [&] (const ColorSet & m) { return s.subset_of(m); });
            family.push_back(s);
            return true;
        }

        auto order_family(Family & family) -> void
        {
            std::sort(family.begin(), family.end(), [] (const ColorSet & a, const ColorSet & b) {
                if (a.size() != b.size())
                    return a.size() < b.size();
                return a.bits() < b.bits();
            });
        }

        struct Choice
        {
            ColorSet a, b, c;
        };

        // First pairwise-disjoint choice, scanning members in family order.
        auto disjoint_choice(const Family & fa, const Family & fb, const Family & fc) -> optional<Choice>
        {
            for (auto & a : fa)
                for (auto & b : fb) {
                    if (! a.disjoint(b))
                        continue;
                    auto ab = a.united(b);
                    for (auto & c : fc)
                        if (ab.disjoint(c))
                            return Choice{ a, b, c };
                }
            return std::nullopt;
        }

        struct CenterChoice
        {
            Vertex center;
            Choice sets;
        };

        auto triple_center(const vector<vector<Family>> & reach, const Triple & s) -> optional<CenterChoice>
        {
            for (Vertex v = 0 ; v < static_cast<Vertex>(reach.size()) ; ++v) {
                auto & fa = reach[v][s[0]];
                auto & fb = reach[v][s[1]];
                auto & fc = reach[v][s[2]];
                if (fa.empty() || fb.empty() || fc.empty())
                    continue;
                if (auto choice = disjoint_choice(fa, fb, fc))
                    return CenterChoice{ v, *choice };
            }
            return std::nullopt;
        }

        auto all_reach(const Graph & g, span<const Color> colors, int jobs) -> vector<vector<Family>>
        {
            vector<vector<Family>> reach(g.size());
            parallel_for(g.size(), jobs, [&] (int v) { reach[v] = detail::reach_colors(g, colors, v); });
            return reach;
        }

        // Simple rainbow path from `from` to `to` using only colours in `allowed`.
        auto path_within(const Graph & g, span<const Color> colors, Vertex from, Vertex to, ColorSet allowed) -> vector<EdgeIndex>
        {
            vector<EdgeIndex> path;
            vector<char> on_path(g.size(), 0);
            auto search = [&] (auto & self, Vertex v, ColorSet used) -> bool {
                if (v == to)
                    return true;
                on_path[v] = 1;
                for (auto & inc : g.incident(v)) {
                    if (on_path[inc.neighbour])
                        continue;
                    Color col = colors[inc.edge];
                    if (col >= 0 && (! allowed.contains(col) || used.contains(col)))
                        continue;
                    path.push_back(inc.edge);
                    if (self(self, inc.neighbour, col >= 0 ? used.with(col) : used))
                        return true;
                    path.pop_back();
                }
                on_path[v] = 0;
                return false;
            };
            if (! search(search, from, ColorSet{ }))
                throw std::logic_error("reach family member is not realisable by a path");
            return path;
        }
    }

    namespace detail
    {
        auto reach_colors(const Graph & g, span<const Color> colors, Vertex source) -> vector<Family>
        {
            vector<Family> family(g.size());
            std::deque<std::pair<Vertex, ColorSet>> queue;
            family[source].push_back(ColorSet{ });
            queue.emplace_back(source, ColorSet{ });

            // 0-1 BFS on cardinality; wildcard edges add no colour.
            while (! queue.empty()) {
                auto [v, used] = queue.front();
                queue.pop_front();
                if (std::find(family[v].begin(), family[v].end(), used) == family[v].end())
                    continue;

                for (auto & inc : g.incident(v)) {
                    Color col = colors[inc.edge];
                    if (col >= 0 && used.contains(col))
                        continue;
                    auto next = col >= 0 ? used.with(col) : used;
                    if (antichain_insert(family[inc.neighbour], next)) {
                        if (col >= 0)
                            queue.emplace_back(inc.neighbour, next);
                        else
                            queue.emplace_front(inc.neighbour, next);
                    }
                }
            }

            for (auto & f : family)
                order_family(f);
            return family;
        }

        auto check_colors(const Graph & g, span<const Color> colors, int k, int jobs) -> Verdict
        {
            if (k != 2 && k != 3)
                throw std::invalid_argument("k must be 2 or 3, got " + to_string(k));

            const int n = g.size();
            if (n < k)
                return Verdict{ };

            auto reach = all_reach(g, colors, jobs);

            if (k == 2) {
                for (Vertex a = 0 ; a < n ; ++a)
                    for (Vertex b = a + 1 ; b < n ; ++b)
                        if (reach[a][b].empty())
                            return Verdict{ false, { a, b } };
                return Verdict{ };
            }

            // Chunks by smallest vertex; the lowest failing chunk wins.
            std::atomic<int> lowest_failure{ n };
            vector<optional<Triple>> failure(n);
            parallel_for(n, jobs, [&] (int a) {
                for (Vertex b = a + 1 ; b < n ; ++b)
                    for (Vertex c = b + 1 ; c < n ; ++c) {
                        if (lowest_failure.load() < a)
                            return;
                        Triple s{ a, b, c };
                        if (! triple_center(reach, s)) {
                            failure[a] = s;
                            int seen = lowest_failure.load();
                            while (a < seen && ! lowest_failure.compare_exchange_weak(seen, a))
                                ;
                            return;
                        }
                    }
            });

            for (auto & f : failure)
                if (f)
                    return Verdict{ false, { (*f)[0], (*f)[1], (*f)[2] } };
            return Verdict{ };
        }
    }

    auto rainbow_reach(const Graph & g, const EdgeColoring & c, Vertex source, const CheckOptions & options) -> ReachFamily
    {
        check_options(g, c, options);
        if (source < 0 || source >= g.size())
            throw GraphError("source " + to_string(source) + " out of range");
        return ReachFamily{ source, detail::reach_colors(g, c.colors, source) };
    }

    auto find_rainbow_tree(const Graph & g, const EdgeColoring & c, const Triple & s, const CheckOptions & options)
        -> optional<vector<EdgeIndex>>
    {
        check_options(g, c, options);
        check_triple(g, s);

        auto reach = all_reach(g, c.colors, options.jobs);
        auto hit = triple_center(reach, s);
        if (! hit)
            return std::nullopt;

        std::set<EdgeIndex> united;
        const ColorSet sets[3] = { hit->sets.a, hit->sets.b, hit->sets.c };
        for (int i = 0 ; i < 3 ; ++i)
            for (auto e : path_within(g, c.colors, hit->center, s[i], sets[i]))
                united.insert(e);

        // The union has pairwise distinct colours and is connected; return a BFS
        // spanning tree of it rooted at the centre.
        vector<char> seen(g.size(), 0);
        vector<EdgeIndex> tree;
        std::queue<Vertex> queue;
        queue.push(hit->center);
        seen[hit->center] = 1;
        while (! queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (auto & inc : g.incident(v))
                if (united.count(inc.edge) && ! seen[inc.neighbour]) {
                    seen[inc.neighbour] = 1;
                    tree.push_back(inc.edge);
                    queue.push(inc.neighbour);
                }
        }
        std::sort(tree.begin(), tree.end());
        return tree;
    }

    auto has_rainbow_tree(const Graph & g, const EdgeColoring & c, const Triple & s, const CheckOptions & options) -> bool
    {
        check_options(g, c, options);
        check_triple(g, s);
        return triple_center(all_reach(g, c.colors, options.jobs), s).has_value();
    }

    auto is_k_rainbow(const Graph & g, const EdgeColoring & c, int k, const CheckOptions & options) -> Verdict
    {
        if (k != 2 && k != 3)
            throw std::invalid_argument("k must be 2 or 3, got " + to_string(k));
        check_options(g, c, options);
        return detail::check_colors(g, c.colors, k, options.jobs);
    }
}
