#include <rainbow/graph.hh>

#include <algorithm>
#include <queue>
#include <set>

using std::pair;
using std::span;
using std::to_string;
using std::vector;

namespace rainbow
{
    namespace
    {
        auto pair_text(Vertex a, Vertex b) -> std::string
        {
            return "(" + to_string(a) + "," + to_string(b) + ")";
        }
    }

    Graph::Graph(int n, span<const pair<Vertex, Vertex>> pairs) :
        _n(n),
        _adjacency(n < 0 ? 0 : n)
    {
        if (n < 0)
            throw GraphError("negative vertex count " + to_string(n));

        std::set<pair<Vertex, Vertex>> seen;
        for (auto [a, b] : pairs) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw GraphError("edge " + pair_text(a, b) + " has an endpoint outside [0," + to_string(n) + ")");
            if (a == b)
                throw GraphError("self-loop " + pair_text(a, b));
            Edge e{ std::min(a, b), std::max(a, b) };
            if (! seen.emplace(e.u, e.v).second)
                continue;
            EdgeIndex idx = static_cast<EdgeIndex>(_edges.size());
            _edges.push_back(e);
            _adjacency[e.u].push_back({ e.v, idx });
            _adjacency[e.v].push_back({ e.u, idx });
        }

        for (auto & inc : _adjacency)
            std::sort(inc.begin(), inc.end(), [] (const Incidence & x, const Incidence & y) { return x.neighbour < y.neighbour; });
    }

    Graph::Graph(int n, std::initializer_list<pair<Vertex, Vertex>> pairs) :
        Graph(n, span<const pair<Vertex, Vertex>>(pairs.begin(), pairs.size()))
    {
    }

    auto Graph::neighbours(Vertex v) const -> vector<Vertex>
    {
        vector<Vertex> result;
        for (auto & inc : incident(v))
            result.push_back(inc.neighbour);
        return result;
    }

    auto Graph::find_edge(Vertex a, Vertex b) const -> std::optional<EdgeIndex>
    {
        if (a < 0 || a >= _n || b < 0 || b >= _n)
            return std::nullopt;
        auto & inc = _adjacency[a];
        auto it = std::lower_bound(inc.begin(), inc.end(), b, [] (const Incidence & x, Vertex t) { return x.neighbour < t; });
        if (it != inc.end() && it->neighbour == b)
            return it->edge;
        return std::nullopt;
    }

    auto Graph::is_complete() const -> bool
    {
        return static_cast<long>(_edges.size()) == static_cast<long>(_n) * (_n - 1) / 2;
    }

    auto build_graph(int n, span<const pair<Vertex, Vertex>> pairs) -> Graph
    {
        return Graph(n, pairs);
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.size() == 0)
            return false;

        vector<char> seen(g.size(), 0);
        std::queue<Vertex> queue;
        queue.push(0);
        seen[0] = 1;
        int reached = 1;
        while (! queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (auto & inc : g.incident(v))
                if (! seen[inc.neighbour]) {
                    seen[inc.neighbour] = 1;
                    ++reached;
                    queue.push(inc.neighbour);
                }
        }
        return reached == g.size();
    }

    namespace
    {
        struct ProductBuilder
        {
            ProductVertexMap map;
            vector<pair<Vertex, Vertex>> pairs;
            vector<ProductEdgeClass> classes;

            auto add(Vertex a, Vertex b, ProductEdgeClass c) -> void
            {
                pairs.emplace_back(a, b);
                classes.push_back(c);
            }

            auto add_cartesian_edges(const Graph & g, const Graph & h) -> void
            {
                for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
                    for (Vertex j = 0 ; j < h.size() ; ++j)
                        add(map.forward(g.edge(e).u, j), map.forward(g.edge(e).v, j), { EdgeClassKind::g_layer, e, j });

                for (Vertex i = 0 ; i < g.size() ; ++i)
                    for (EdgeIndex f = 0 ; f < h.edge_count() ; ++f)
                        add(map.forward(i, h.edge(f).u), map.forward(i, h.edge(f).v), { EdgeClassKind::h_layer, f, i });
            }

            auto finish() -> Product
            {
                return Product{ Graph(map.g_size() * map.h_size(), pairs), map, std::move(classes) };
            }
        };
    }

    auto cartesian_product(const Graph & g, const Graph & h) -> Product
    {
        ProductBuilder b{ ProductVertexMap(g.size(), h.size()), {}, {} };
        b.add_cartesian_edges(g, h);
        return b.finish();
    }

    auto strong_product(const Graph & g, const Graph & h) -> Product
    {
        ProductBuilder b{ ProductVertexMap(g.size(), h.size()), {}, {} };
        b.add_cartesian_edges(g, h);
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
            for (EdgeIndex f = 0 ; f < h.edge_count() ; ++f) {
                auto [gu, gv] = g.edge(e);
                auto [hu, hv] = h.edge(f);
                b.add(b.map.forward(gu, hu), b.map.forward(gv, hv), { EdgeClassKind::cross, e, -1, hu, hv });
                b.add(b.map.forward(gu, hv), b.map.forward(gv, hu), { EdgeClassKind::cross, e, -1, hv, hu });
            }
        return b.finish();
    }

    auto lexicographic_product(const Graph & g, const Graph & h) -> Product
    {
        ProductBuilder b{ ProductVertexMap(g.size(), h.size()), {}, {} };
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
            for (Vertex a = 0 ; a < h.size() ; ++a)
                for (Vertex c = 0 ; c < h.size() ; ++c)
                    b.add(b.map.forward(g.edge(e).u, a), b.map.forward(g.edge(e).v, c), { EdgeClassKind::cross, e, -1, a, c });

        for (Vertex i = 0 ; i < g.size() ; ++i)
            for (EdgeIndex f = 0 ; f < h.edge_count() ; ++f)
                b.add(b.map.forward(i, h.edge(f).u), b.map.forward(i, h.edge(f).v), { EdgeClassKind::h_layer, f, i });
        return b.finish();
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        vector<pair<Vertex, Vertex>> pairs;
        for (auto & e : g.edges())
            pairs.emplace_back(e.u, e.v);
        for (auto & e : h.edges())
            pairs.emplace_back(e.u + g.size(), e.v + g.size());
        for (Vertex a = 0 ; a < g.size() ; ++a)
            for (Vertex b = 0 ; b < h.size() ; ++b)
                pairs.emplace_back(a, b + g.size());
        return Graph(g.size() + h.size(), pairs);
    }

    auto split_vertex(const Graph & g, const SplitSpec & spec) -> DerivedGraph
    {
        const Vertex v = spec.vertex;
        if (v < 0 || v >= g.size())
            throw GraphError("split vertex " + to_string(v) + " out of range");

        std::set<Vertex> first(spec.first.begin(), spec.first.end()), second(spec.second.begin(), spec.second.end());
        if (first.size() != spec.first.size() || second.size() != spec.second.size())
            throw GraphError("split neighbour lists contain duplicates");
        for (auto x : first)
            if (second.count(x))
                throw GraphError("split neighbour " + to_string(x) + " appears in both parts");

        auto nbrs = g.neighbours(v);
        std::set<Vertex> both(first);
        both.insert(second.begin(), second.end());
        if (both != std::set<Vertex>(nbrs.begin(), nbrs.end()))
            throw GraphError("split parts do not partition the neighbourhood of " + to_string(v));

        const Vertex v2 = g.size();
        vector<pair<Vertex, Vertex>> pairs;
        vector<EdgeIndex> origin;
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
            auto [a, b] = g.edge(e);
            if (a == v && second.count(b))
                a = v2;
            else if (b == v && second.count(a))
                b = v2;
            pairs.emplace_back(a, b);
            origin.push_back(e);
        }
        pairs.emplace_back(v, v2);
        origin.push_back(fresh_edge);

        return DerivedGraph{ Graph(g.size() + 1, pairs), std::move(origin), v2 };
    }

    auto subdivide_edge(const Graph & g, EdgeIndex e) -> DerivedGraph
    {
        if (e < 0 || e >= g.edge_count())
            throw GraphError("edge index " + to_string(e) + " out of range");

        auto [u, v] = g.edge(e);
        SplitSpec spec{ v, {}, { u } };
        for (auto w : g.neighbours(v))
            if (w != u)
                spec.first.push_back(w);
        return split_vertex(g, spec);
    }
}
