#ifndef RAINBOW_CONSTRUCTIONS_HH
#define RAINBOW_CONSTRUCTIONS_HH

#include <rainbow/coloring.hh>
#include <rainbow/families.hh>
#include <rainbow/graph.hh>
#include <rainbow/rainbow_check.hh>

#include <optional>
#include <string>
#include <vector>

namespace rainbow
{
    /// An operand colouring or graph does not meet a construction's precondition.
    class ConstructionError : public GraphError
    {
        public:
            using GraphError::GraphError;
    };

    /// Both operands are complete, so the derived graph is complete and its
    /// index comes from the complete-graph formula instead of a construction.
    class RoutedCase : public ConstructionError
    {
        public:
            OracleEntry entry;
            int order;   // vertex count of the complete derived graph

            RoutedCase(const std::string & what, OracleEntry e, int n) :
                ConstructionError(what), entry(std::move(e)), order(n) { }
    };

    struct ConstructionReport
    {
        std::string operation;
        Graph derived_graph;
        EdgeColoring coloring;
        int colors_used = 0;
        int claimed_bound = 0;
        Verdict verified;

        /// min(claimed_bound, known family bound) where a family bound applies.
        std::optional<int> best_known_bound;

        /// sdiam3 of the derived graph when requested; equal to colors_used it
        /// certifies the colouring optimal.
        std::optional<int> certified_lower;

        /// Product coordinates, when the derived graph is a product.
        std::optional<ProductVertexMap> coordinates;

        auto certified_exact() const -> bool
        {
            return verified.ok && certified_lower && *certified_lower == colors_used;
        }
    };

    /// Fills certified_lower with sdiam3 of the derived graph.
    auto attach_sdiam3_certificate(ConstructionReport & report, int jobs = 1) -> void;

    /**
     * Layer edges copy their operand edge's colour; H's colours are shifted past
     * G's palette. Both operand colourings must be 3-rainbow (rainbow-connected
     * for operands with fewer than three vertices).
     */
    auto cartesian_coloring(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch,
            const CheckOptions & options = { }) -> ConstructionReport;

    /// P_{n_1} x ... x P_{n_k}, each path coloured all-distinct, with the sdiam3
    /// certificate attached.
    auto grid_coloring(const std::vector<int> & dims, const CheckOptions & options = { }) -> ConstructionReport;

    /// Cartesian skeleton as above; every diagonal edge takes colour 0.
    auto strong_coloring(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch,
            const CheckOptions & options = { }) -> ConstructionReport;

    /// G[K_2] for non-complete G: the two copies of G copy cg, every other edge
    /// gets one fresh colour.
    auto lex_coloring_h2(const Graph & g, const EdgeColoring & cg, const CheckOptions & options = { }) -> ConstructionReport;

    /**
     * G[H] with |V(H)| >= 3 and not both complete. Copies of G copy cg; an edge
     * (g1,h1)(g2,h2) with h1 != h2 gets (cg(g1g2) + 1) mod p where cg uses
     * exactly the colours 0..p-1; copies of H copy the rainbow colouring ch_rc
     * shifted past p.
     */
    auto lex_coloring_general(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch_rc,
            const CheckOptions & options = { }) -> ConstructionReport;

    /// Picks lex_coloring_h2 when |V(H)| = 2, lex_coloring_general otherwise.
    /// ch must be rainbow-connected.
    auto lex_coloring(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch,
            const CheckOptions & options = { }) -> ConstructionReport;

    /**
     * G v H with |V(G)| = s <= |V(H)| = t, both connected, not both complete.
     *
     * s = 1: ch is 3-rainbow; join edges take one fresh colour.
     * s = 2: ch is rainbow-connected with rc colours; join edges at the i-th
     *        G vertex take rc + i, the G edge takes rc + 2.
     * s >= 3: cg and ch are 3-rainbow and share colours 0..c1-1 with
     *        c1 = max(palettes); join edges take c1.
     */
    auto join_coloring(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch,
            const CheckOptions & options = { }) -> ConstructionReport;

    /// Split edges inherit their source colour; v1v2 takes a fresh colour.
    auto split_coloring(const Graph & g, const EdgeColoring & cg, const SplitSpec & spec,
            const CheckOptions & options = { }) -> ConstructionReport;

    /// The edge keeping e's index inherits cg(e); the other half is fresh.
    auto subdivision_coloring(const Graph & g, const EdgeColoring & cg, EdgeIndex e,
            const CheckOptions & options = { }) -> ConstructionReport;
}

#endif
