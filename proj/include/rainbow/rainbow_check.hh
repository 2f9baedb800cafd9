#ifndef RAINBOW_RAINBOW_CHECK_HH
#define RAINBOW_RAINBOW_CHECK_HH

#include <rainbow/coloring.hh>
#include <rainbow/graph.hh>
#include <rainbow/steiner.hh>

#include <optional>
#include <span>
#include <vector>

namespace rainbow
{
    struct CheckOptions
    {
        int jobs = 1;
        int palette_limit = default_palette_limit;   // may be widened up to max_palette_limit
    };

    /**
     * For one source, the inclusion-minimal colour sets of rainbow paths to
     * every target. Members of each per-target family form an antichain and
     * are ordered by cardinality, then by bit pattern. The source itself maps
     * to { {} }.
     */
    struct ReachFamily
    {
        Vertex source;
        std::vector<std::vector<ColorSet>> minimal;

        auto to(Vertex t) const -> const std::vector<ColorSet> & { return minimal[t]; }
    };

    auto rainbow_reach(const Graph & g, const EdgeColoring & c, Vertex source, const CheckOptions & options = { }) -> ReachFamily;

    auto has_rainbow_tree(const Graph & g, const EdgeColoring & c, const Triple & s, const CheckOptions & options = { }) -> bool;

    /// Edge set of a rainbow tree containing s, if one exists. Centres are tried
    /// in ascending order and family members by increasing cardinality.
    auto find_rainbow_tree(const Graph & g, const EdgeColoring & c, const Triple & s, const CheckOptions & options = { })
        -> std::optional<std::vector<EdgeIndex>>;

    struct Verdict
    {
        bool ok = true;
        std::vector<Vertex> failing;   // lexicographically first bad k-set, empty when ok

        auto operator== (const Verdict &) const -> bool = default;
    };

    /// k must be 2 or 3 (throws std::invalid_argument otherwise).
    auto is_k_rainbow(const Graph & g, const EdgeColoring & c, int k, const CheckOptions & options = { }) -> Verdict;

    namespace detail
    {
        inline constexpr Color wildcard = -1;

        /// As is_k_rainbow, but entries equal to wildcard are treated as edges that
        /// each carry a unique colour outside the palette. This is the optimistic
        /// relaxation used to prune partial colourings.
        auto check_colors(const Graph & g, std::span<const Color> colors, int k, int jobs = 1) -> Verdict;

        auto reach_colors(const Graph & g, std::span<const Color> colors, Vertex source) -> std::vector<std::vector<ColorSet>>;
    }
}

#endif
