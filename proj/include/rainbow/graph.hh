#ifndef RAINBOW_GRAPH_HH
#define RAINBOW_GRAPH_HH

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow
{
    using Vertex = int;
    using EdgeIndex = int;

    /// Raised when an input violates a structural precondition (bad endpoint,
    /// self-loop, invalid split, out-of-range edge index, ...).
    class GraphError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    struct Edge
    {
        Vertex u;
        Vertex v;

        auto other(Vertex x) const -> Vertex { return x == u ? v : u; }
        auto operator== (const Edge &) const -> bool = default;
    };

    struct Incidence
    {
        Vertex neighbour;
        EdgeIndex edge;
    };

    /**
     * Simple undirected graph on vertices 0..n-1 with a stable, indexed edge
     * list. Edges are stored normalised (u < v). Immutable once built.
     */
    class Graph
    {
        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Incidence>> _adjacency;

        public:
            Graph() = default;

            /// Builds from a pair list. Duplicates are dropped (first occurrence
            /// keeps its index); self-loops and out-of-range endpoints throw.
            Graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
            Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

            auto size() const -> int { return _n; }
            auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto edge(EdgeIndex e) const -> const Edge & { return _edges.at(e); }

            /// Incident edges of v, sorted by neighbour id.
            auto incident(Vertex v) const -> const std::vector<Incidence> & { return _adjacency.at(v); }
            auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency.at(v).size()); }
            auto neighbours(Vertex v) const -> std::vector<Vertex>;

            auto adjacent(Vertex a, Vertex b) const -> bool { return find_edge(a, b).has_value(); }
            auto find_edge(Vertex a, Vertex b) const -> std::optional<EdgeIndex>;

            auto is_complete() const -> bool;

            auto operator== (const Graph & other) const -> bool
            {
                return _n == other._n && _edges == other._edges;
            }
    };

    auto build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs) -> Graph;

    /// A single vertex counts as connected; the empty graph does not.
    auto is_connected(const Graph & g) -> bool;

    /**
     * Coordinates of product vertices. Product vertex id is i * n_h + j for
     * operand vertices i of G and j of H.
     */
    class ProductVertexMap
    {
        private:
            int _n_g = 0;
            int _n_h = 0;

        public:
            ProductVertexMap() = default;
            ProductVertexMap(int n_g, int n_h) : _n_g(n_g), _n_h(n_h) { }

            auto g_size() const -> int { return _n_g; }
            auto h_size() const -> int { return _n_h; }
            auto forward(Vertex i, Vertex j) const -> Vertex { return i * _n_h + j; }
            auto backward(Vertex v) const -> std::pair<Vertex, Vertex> { return { v / _n_h, v % _n_h }; }
    };

    enum class EdgeClassKind
    {
        g_layer,
        h_layer,
        cross
    };

    /**
     * Provenance of a product edge.
     *
     * g_layer: the edge lies in copy G_layer and corresponds to G-edge operand_edge.
     * h_layer: the edge lies in copy H_layer and corresponds to H-edge operand_edge.
     * cross: both coordinates change along G-edge operand_edge; h_at_u / h_at_v are
     * the H coordinates at the G-edge's u and v endpoints (they may coincide for the
     * lexicographic product).
     */
    struct ProductEdgeClass
    {
        EdgeClassKind kind;
        EdgeIndex operand_edge;
        Vertex layer = -1;
        Vertex h_at_u = -1;
        Vertex h_at_v = -1;
    };

    struct Product
    {
        Graph graph;
        ProductVertexMap vertices;
        std::vector<ProductEdgeClass> edge_classes;
    };

    auto cartesian_product(const Graph & g, const Graph & h) -> Product;
    auto strong_product(const Graph & g, const Graph & h) -> Product;
    auto lexicographic_product(const Graph & g, const Graph & h) -> Product;

    /// G's vertices keep their ids, H's are shifted by |V(G)|. Edge order: G's,
    /// then H's, then join edges (g-major).
    auto join(const Graph & g, const Graph & h) -> Graph;

    struct SplitSpec
    {
        Vertex vertex;
        std::vector<Vertex> first;   // neighbours kept by v1 (which reuses v's id)
        std::vector<Vertex> second;  // neighbours moved to the new vertex v2
    };

    inline constexpr EdgeIndex fresh_edge = -1;

    /// edge_origin[e] is the source edge index in the original graph, or fresh_edge.
    struct DerivedGraph
    {
        Graph graph;
        std::vector<EdgeIndex> edge_origin;
        Vertex new_vertex;
    };

    /// v2 gets id n; surviving edges keep their indices and the v1v2 edge is
    /// appended last.
    auto split_vertex(const Graph & g, const SplitSpec & spec) -> DerivedGraph;

    /// Splits endpoint v of e = uv with second = {u}: the u-x edge keeps e's
    /// index, the x-v edge is fresh.
    auto subdivide_edge(const Graph & g, EdgeIndex e) -> DerivedGraph;
}

#endif
