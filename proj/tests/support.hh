// Test-only helpers: brute-force oracles that deliberately avoid the library's
// algorithms, plus graph enumeration and random sampling.
#ifndef RAINBOW_TESTS_SUPPORT_HH
#define RAINBOW_TESTS_SUPPORT_HH

#include <rainbow/coloring.hh>
#include <rainbow/graph.hh>
#include <rainbow/rainbow_check.hh>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace rainbow::test
{
    inline auto make_graph(int n, std::vector<std::pair<Vertex, Vertex>> pairs) -> Graph
    {
        return Graph(n, pairs);
    }

    inline auto path(int n) -> Graph
    {
        std::vector<std::pair<Vertex, Vertex>> p;
        for (int v = 0 ; v + 1 < n ; ++v)
            p.emplace_back(v, v + 1);
        return Graph(n, p);
    }

    inline auto cycle(int n) -> Graph
    {
        std::vector<std::pair<Vertex, Vertex>> p;
        for (int v = 0 ; v < n ; ++v)
            p.emplace_back(v, (v + 1) % n);
        return Graph(n, p);
    }

    inline auto complete(int n) -> Graph
    {
        std::vector<std::pair<Vertex, Vertex>> p;
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                p.emplace_back(a, b);
        return Graph(n, p);
    }

    inline auto coloring(std::vector<Color> colors) -> EdgeColoring
    {
        int palette = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
        return EdgeColoring{ std::move(colors), palette };
    }

    /// Connectivity of the subgraph induced by a vertex mask.
    inline auto induced_connected(const Graph & g, unsigned mask) -> bool
    {
        if (mask == 0)
            return false;
        int start = __builtin_ctz(mask);
        unsigned seen = 1u << start, frontier = seen;
        while (frontier) {
            unsigned next = 0;
            for (int v = 0 ; v < g.size() ; ++v)
                if (frontier & (1u << v))
                    for (auto w : g.neighbours(v))
                        if ((mask & (1u << w)) && ! (seen & (1u << w)))
                            next |= 1u << w;
            seen |= next;
            frontier = next;
        }
        return seen == mask;
    }

    /// Minimum tree size containing s: a tree on vertex set U has |U| - 1 edges and
    /// exists iff G[U] is connected, so minimise over vertex subsets.
    inline auto brute_steiner(const Graph & g, const std::array<Vertex, 3> & s) -> int
    {
        unsigned must = (1u << s[0]) | (1u << s[1]) | (1u << s[2]);
        int best = 1 << 30;
        for (unsigned mask = 0 ; mask < (1u << g.size()) ; ++mask)
            if ((mask & must) == must && induced_connected(g, mask))
                best = std::min(best, __builtin_popcount(mask) - 1);
        return best;
    }

    /// Unbounded union-find over edge subsets.
    inline auto is_tree_edges(const Graph & g, const std::vector<EdgeIndex> & edges, unsigned & vertex_mask) -> bool
    {
        std::vector<int> parent(g.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int (int)> find = [&] (int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        vertex_mask = 0;
        for (auto e : edges) {
            auto [u, v] = g.edge(e);
            vertex_mask |= (1u << u) | (1u << v);
            int a = find(u), b = find(v);
            if (a == b)
                return false;
            parent[a] = b;
        }
        return static_cast<int>(edges.size()) == __builtin_popcount(vertex_mask) - 1;
    }

    /// Every edge subset of size <= palette with pairwise distinct colours that
    /// forms a tree; returns the vertex masks of all such trees.
    inline auto brute_rainbow_tree_masks(const Graph & g, const EdgeColoring & c) -> std::set<unsigned>
    {
        std::set<unsigned> masks;
        std::vector<EdgeIndex> chosen;
        std::vector<char> used(std::max(c.palette_size, 1), 0);
        const int limit = std::min(c.palette_size, g.size() - 1);
        std::function<void (int)> rec = [&] (int from) {
            if (! chosen.empty()) {
                unsigned mask;
                if (is_tree_edges(g, chosen, mask))
                    masks.insert(mask);
            }
            if (static_cast<int>(chosen.size()) == limit)
                return;
            for (int e = from ; e < g.edge_count() ; ++e) {
                if (used[c[e]])
                    continue;
                used[c[e]] = 1;
                chosen.push_back(e);
                rec(e + 1);
                chosen.pop_back();
                used[c[e]] = 0;
            }
        };
        rec(0);
        return masks;
    }

    inline auto brute_has_rainbow_tree(const std::set<unsigned> & masks, const std::array<Vertex, 3> & s) -> bool
    {
        unsigned need = (1u << s[0]) | (1u << s[1]) | (1u << s[2]);
        for (auto m : masks)
            if ((m & need) == need)
                return true;
        return false;
    }

    /// Brute-force k-rainbow check (k = 2 or 3) via rainbow tree enumeration.
    inline auto brute_is_k_rainbow(const Graph & g, const EdgeColoring & c, int k) -> bool
    {
        auto masks = brute_rainbow_tree_masks(g, c);
        const int n = g.size();
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b) {
                if (k == 2) {
                    unsigned need = (1u << a) | (1u << b);
                    if (std::none_of(masks.begin(), masks.end(), [&] (unsigned m) { return (m & need) == need; }))
                        return false;
                    continue;
                }
                for (int d = b + 1 ; d < n ; ++d)
                    if (! brute_has_rainbow_tree(masks, { a, b, d }))
                        return false;
            }
        return true;
    }

    /// Colour sets of all simple rainbow paths from s to t, reduced to the
    /// inclusion-minimal ones and sorted by (size, bits).
    inline auto brute_minimal_path_sets(const Graph & g, const EdgeColoring & c, Vertex s, Vertex t) -> std::vector<std::uint64_t>
    {
        std::set<std::uint64_t> all;
        std::vector<char> on(g.size(), 0);
        std::function<void (Vertex, std::uint64_t)> rec = [&] (Vertex v, std::uint64_t used) {
            if (v == t) {
                all.insert(used);
                return;
            }
            on[v] = 1;
            for (auto & inc : g.incident(v)) {
                std::uint64_t bit = std::uint64_t{ 1 } << c[inc.edge];
                if (on[inc.neighbour] || (used & bit))
                    continue;
                rec(inc.neighbour, used | bit);
            }
            on[v] = 0;
        };
        rec(s, 0);

        std::vector<std::uint64_t> minimal;
        for (auto x : all)
            if (std::none_of(all.begin(), all.end(), [&] (std::uint64_t y) { return y != x && (y & ~x) == 0; }))
                minimal.push_back(x);
        std::sort(minimal.begin(), minimal.end(), [] (std::uint64_t a, std::uint64_t b) {
            int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            return pa != pb ? pa < pb : a < b;
        });
        return minimal;
    }

    /// Every labelled connected graph on n vertices (n <= 6).
    inline auto all_connected_graphs(int n) -> std::vector<Graph>
    {
        std::vector<std::pair<Vertex, Vertex>> slots;
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                slots.emplace_back(a, b);

        std::vector<Graph> result;
        for (unsigned mask = 0 ; mask < (1u << slots.size()) ; ++mask) {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (std::size_t i = 0 ; i < slots.size() ; ++i)
                if (mask & (1u << i))
                    pairs.push_back(slots[i]);
            Graph g(n, pairs);
            if (induced_connected(g, (1u << n) - 1))
                result.push_back(g);
        }
        return result;
    }

    /// Every labelled graph on n vertices, connected or not.
    inline auto all_graphs(int n) -> std::vector<Graph>
    {
        std::vector<std::pair<Vertex, Vertex>> slots;
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                slots.emplace_back(a, b);

        std::vector<Graph> result;
        for (unsigned mask = 0 ; mask < (1u << slots.size()) ; ++mask) {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (std::size_t i = 0 ; i < slots.size() ; ++i)
                if (mask & (1u << i))
                    pairs.push_back(slots[i]);
            result.emplace_back(n, pairs);
        }
        return result;
    }

    /// Minimum palette p <= max_palette such that some colouring (of all p^m,
    /// no symmetry reduction) passes `valid`; 0 if none does.
    template <typename Valid_>
    auto brute_min_palette(const Graph & g, int max_palette, Valid_ && valid) -> int
    {
        const int m = g.edge_count();
        for (int p = 1 ; p <= max_palette ; ++p) {
            EdgeColoring c{ std::vector<Color>(m, 0), p };
            while (true) {
                if (valid(c))
                    return p;
                int i = 0;
                while (i < m && ++c.colors[i] == p)
                    c.colors[i++] = 0;
                if (i == m)
                    break;
            }
        }
        return 0;
    }

    inline auto relabel(const Graph & g, const std::vector<Vertex> & perm) -> Graph
    {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (auto & e : g.edges())
            pairs.emplace_back(perm[e.u], perm[e.v]);
        return Graph(g.size(), pairs);
    }

    inline auto count_failing_triples(const Graph & g, const EdgeColoring & c) -> int
    {
        int bad = 0;
        for (Vertex a = 0 ; a < g.size() ; ++a)
            for (Vertex b = a + 1 ; b < g.size() ; ++b)
                for (Vertex d = b + 1 ; d < g.size() ; ++d)
                    if (! has_rainbow_tree(g, c, { a, b, d }))
                        ++bad;
        return bad;
    }

    /// Hill climbing on the number of triples without a rainbow tree. Used to
    /// exhibit colourings on instances too large for the exact solver.
    inline auto local_search_3_rainbow(const Graph & g, int palette, int iterations, std::mt19937_64 & rng)
        -> std::optional<EdgeColoring>
    {
        EdgeColoring c{ { }, palette };
        std::uniform_int_distribution<int> colour(0, palette - 1);
        std::uniform_int_distribution<int> edge(0, g.edge_count() - 1);
        for (int e = 0 ; e < g.edge_count() ; ++e)
            c.colors.push_back(colour(rng));
        int bad = count_failing_triples(g, c);
        for (int i = 0 ; i < iterations && bad > 0 ; ++i) {
            auto next = c;
            next.colors[edge(rng)] = colour(rng);
            int next_bad = count_failing_triples(g, next);
            if (next_bad <= bad)
                c = std::move(next), bad = next_bad;
        }
        if (bad > 0)
            return std::nullopt;
        return c;
    }

    inline auto random_coloring(const Graph & g, int palette, std::mt19937_64 & rng) -> EdgeColoring
    {
        EdgeColoring c{ {}, palette };
        std::uniform_int_distribution<int> pick(0, palette - 1);
        for (int e = 0 ; e < g.edge_count() ; ++e)
            c.colors.push_back(pick(rng));
        return c;
    }
}

#endif
