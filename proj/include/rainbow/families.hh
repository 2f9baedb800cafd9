#ifndef RAINBOW_FAMILIES_HH
#define RAINBOW_FAMILIES_HH

#include <rainbow/coloring.hh>
#include <rainbow/graph.hh>

#include <cstdint>
#include <optional>
#include <string>

namespace rainbow
{
    enum class FamilyKind
    {
        path,
        cycle,
        complete,
        complete_bipartite,
        star,
        empty
    };

    /// n is the vertex count for every kind except complete_bipartite, which
    /// uses s and t. A star on n vertices is K_{1,n-1}.
    struct FamilySpec
    {
        FamilyKind kind;
        int n = 0;
        int s = 0;
        int t = 0;

        static auto path(int n) -> FamilySpec { return { FamilyKind::path, n }; }
        static auto cycle(int n) -> FamilySpec { return { FamilyKind::cycle, n }; }
        static auto complete(int n) -> FamilySpec { return { FamilyKind::complete, n }; }
        static auto complete_bipartite(int s, int t) -> FamilySpec { return { FamilyKind::complete_bipartite, 0, s, t }; }
        static auto star(int n) -> FamilySpec { return { FamilyKind::star, n }; }
        static auto empty(int n) -> FamilySpec { return { FamilyKind::empty, n }; }
    };

    auto family_name(FamilyKind kind) -> std::string;
    auto parse_family_kind(const std::string & name) -> FamilyKind;

    /// Paths and cycles are numbered along the sequence; bipartite sides are
    /// contiguous (s side first); the star centre is vertex 0.
    auto generate(const FamilySpec & spec) -> Graph;

    /// Connected graph on n vertices: a random spanning tree plus each other pair
    /// with probability p, under a random relabelling.
    auto random_connected(int n, double p, std::uint64_t seed) -> Graph;

    struct OracleEntry
    {
        int lower;
        int upper;
        std::string provenance;     // e.g. "cycle-formula"
        bool oracle_only = false;   // exact by citation but beyond desk-scale solving
        std::string note;           // metadata that is recorded, never asserted

        auto exact() const -> bool { return lower == upper; }
    };

    /// Known rx_3 value or bound for the family; nullopt when no covered
    /// statement applies.
    auto oracle_rx3(const FamilySpec & spec) -> std::optional<OracleEntry>;

    /// A verified k-rainbow colouring of the family graph: all-distinct for
    /// trees, otherwise the exact solver's witness. nullopt if the solver's
    /// budget runs out before an exact answer.
    auto oracle_coloring(const FamilySpec & spec, int k, long long budget = 10'000'000) -> std::optional<EdgeColoring>;
}

#endif
