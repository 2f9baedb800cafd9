#ifndef RAINBOW_SOLVER_HH
#define RAINBOW_SOLVER_HH

#include <rainbow/coloring.hh>
#include <rainbow/graph.hh>

#include <optional>
#include <vector>

namespace rainbow
{
    inline constexpr long long default_node_budget = 100'000'000;

    struct SolveOptions
    {
        long long budget = default_node_budget;
        int jobs = 1;

        /// A known-valid colouring (e.g. from a construction). It caps the search
        /// and is reported as the upper end when the budget runs out.
        std::optional<EdgeColoring> upper_hint;
    };

    enum class SolveStatus
    {
        exact,
        budget_exhausted
    };

    struct SolveResult
    {
        SolveStatus status;
        int value;                   // the index when exact, otherwise equal to upper
        int lower;                   // every palette below this is proven infeasible
        int upper;                   // colours used by the witness
        EdgeColoring witness;        // verified colouring with `upper` colours
        long long nodes_explored;
        int lower_bound_used;

        auto exact() const -> bool { return status == SolveStatus::exact; }
    };

    /// diam(g) for k = 2, sdiam3(g) for k = 3.
    auto lower_bound(const Graph & g, int k) -> int;

    /// Edges in the order a BFS from vertex 0 first meets them, neighbours ascending.
    auto bfs_edge_order(const Graph & g) -> std::vector<EdgeIndex>;

    /**
     * Exact rx_k for k in {2, 3} by iterative deepening over the palette size,
     * starting at lower_bound. Each level enumerates canonical colourings (colour
     * t+1 appears only after colour t) that use every palette colour, pruning
     * with the optimistic checker every ceil(m/4) assignments.
     *
     * The result never overstates exactness: running out of budget gives an
     * interval [lower, upper] with the best verified colouring known.
     */
    auto rx_exact(const Graph & g, int k, const SolveOptions & options = { }) -> SolveResult;
}

#endif
