#ifndef RAINBOW_STEINER_HH
#define RAINBOW_STEINER_HH

#include <rainbow/graph.hh>

#include <array>
#include <limits>
#include <vector>

namespace rainbow
{
    using Triple = std::array<Vertex, 3>;

    /// Hop counts between all vertex pairs; unreachable pairs hold infinity.
    class DistanceMatrix
    {
        private:
            int _n = 0;
            std::vector<int> _d;

        public:
            static constexpr int infinity = std::numeric_limits<int>::max();

            DistanceMatrix() = default;
            explicit DistanceMatrix(int n) : _n(n), _d(static_cast<std::size_t>(n) * n, infinity) { }

            auto size() const -> int { return _n; }
            auto operator() (Vertex a, Vertex b) const -> int { return _d[static_cast<std::size_t>(a) * _n + b]; }
            auto at(Vertex a, Vertex b) -> int & { return _d[static_cast<std::size_t>(a) * _n + b]; }
    };

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

    /// Throws GraphError on a disconnected graph.
    auto diameter(const Graph & g) -> int;

    struct SteinerResult
    {
        int value;
        std::vector<EdgeIndex> witness;   // sorted edge indices of one minimum tree
        Vertex center;                     // median vertex realising it
    };

    /// Minimum tree size over all trees containing the three vertices. A minimum
    /// tree on three terminals is a path or a spider, so the value is the minimum
    /// over centres v of d(v,a) + d(v,b) + d(v,c). Ties go to the smallest centre;
    /// the witness is cut from a BFS tree with smallest-id parents.
    auto steiner_distance_3(const Graph & g, const Triple & s) -> SteinerResult;
    auto steiner_distance_3(const Graph & g, const DistanceMatrix & d, const Triple & s) -> SteinerResult;

    /// Steiner distance value only, from a precomputed matrix.
    auto steiner_value_3(const DistanceMatrix & d, const Triple & s) -> int;

    struct TripleDistance
    {
        Triple triple;
        int d;
    };

    /// Every triple a < b < c in lexicographic order with its Steiner distance.
    auto all_triple_distances(const Graph & g, int jobs = 1) -> std::vector<TripleDistance>;

    /// Maximum Steiner distance over all 3-sets. Requires a connected graph with
    /// at least three vertices.
    auto sdiam3(const Graph & g, int jobs = 1) -> int;
}

#endif
