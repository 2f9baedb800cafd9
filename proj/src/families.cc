#include <rainbow/families.hh>
#include <rainbow/solver.hh>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace rainbow
{
    auto family_name(FamilyKind kind) -> string
    {
        switch (kind) {
            case FamilyKind::path:               return "path";
            case FamilyKind::cycle:              return "cycle";
            case FamilyKind::complete:           return "complete";
            case FamilyKind::complete_bipartite: return "complete_bipartite";
            case FamilyKind::star:               return "star";
            case FamilyKind::empty:              return "empty";
        }
        throw std::logic_error("unknown family kind");
    }

    auto parse_family_kind(const string & name) -> FamilyKind
    {
        for (auto kind : { FamilyKind::path, FamilyKind::cycle, FamilyKind::complete,
                FamilyKind::complete_bipartite, FamilyKind::star, FamilyKind::empty })
            if (family_name(kind) == name)
                return kind;
        throw GraphError("unknown family '" + name + "'");
    }

    auto generate(const FamilySpec & spec) -> Graph
    {
        vector<pair<Vertex, Vertex>> pairs;
        auto need = [] (bool ok, const string & what) {
            if (! ok)
                throw GraphError("invalid family parameters: " + what);
        };

        switch (spec.kind) {
            case FamilyKind::path:
                need(spec.n >= 1, "path needs n >= 1");
                for (Vertex v = 0 ; v + 1 < spec.n ; ++v)
                    pairs.emplace_back(v, v + 1);
                return Graph(spec.n, pairs);

            case FamilyKind::cycle:
                need(spec.n >= 3, "cycle needs n >= 3");
                for (Vertex v = 0 ; v < spec.n ; ++v)
                    pairs.emplace_back(v, (v + 1) % spec.n);
                return Graph(spec.n, pairs);

            case FamilyKind::complete:
                need(spec.n >= 1, "complete graph needs n >= 1");
                for (Vertex a = 0 ; a < spec.n ; ++a)
                    for (Vertex b = a + 1 ; b < spec.n ; ++b)
                        pairs.emplace_back(a, b);
                return Graph(spec.n, pairs);

            case FamilyKind::complete_bipartite:
                need(spec.s >= 1 && spec.t >= 1, "complete bipartite graph needs s, t >= 1");
                for (Vertex a = 0 ; a < spec.s ; ++a)
                    for (Vertex b = 0 ; b < spec.t ; ++b)
                        pairs.emplace_back(a, spec.s + b);
                return Graph(spec.s + spec.t, pairs);

            case FamilyKind::star:
                need(spec.n >= 2, "star needs n >= 2");
                for (Vertex v = 1 ; v < spec.n ; ++v)
                    pairs.emplace_back(0, v);
                return Graph(spec.n, pairs);

            case FamilyKind::empty:
                need(spec.n >= 1, "empty graph needs n >= 1");
                return Graph(spec.n, pairs);
        }
        throw std::logic_error("unknown family kind");
    }

    auto random_connected(int n, double p, std::uint64_t seed) -> Graph
    {
        if (n < 1)
            throw GraphError("random graph needs n >= 1");

        std::mt19937_64 rng(seed);
        vector<Vertex> label(n);
        std::iota(label.begin(), label.end(), 0);
        std::shuffle(label.begin(), label.end(), rng);

        vector<vector<char>> present(n, vector<char>(n, 0));
        for (Vertex v = 1 ; v < n ; ++v) {
            Vertex parent = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
            present[parent][v] = present[v][parent] = 1;
        }
        std::bernoulli_distribution extra(p);
        for (Vertex a = 0 ; a < n ; ++a)
            for (Vertex b = a + 1 ; b < n ; ++b)
                if (! present[a][b] && extra(rng))
                    present[a][b] = present[b][a] = 1;

        vector<pair<Vertex, Vertex>> pairs;
        for (Vertex a = 0 ; a < n ; ++a)
            for (Vertex b = a + 1 ; b < n ; ++b)
                if (present[a][b])
                    pairs.emplace_back(std::min(label[a], label[b]), std::max(label[a], label[b]));
        std::sort(pairs.begin(), pairs.end());
        return Graph(n, pairs);
    }

    namespace
    {
        auto exact(int value, const string & provenance) -> OracleEntry
        {
            return OracleEntry{ value, value, provenance, false, {} };
        }

        auto binomial2(long long k) -> long long
        {
            return k * (k - 1) / 2;
        }

        auto k2t_entry(int t) -> optional<OracleEntry>
        {
            if (t < 2)
                return std::nullopt;
            if (t == 2)
                return exact(2, "k2t-table");
            if (t <= 4)
                return exact(3, "k2t-table");
            if (t <= 8)
                return exact(4, "k2t-table");
            if (t <= 20)
                return exact(5, "k2t-table");

            // Binomial rows, first match after the explicit rows above.
            for (long long k = 6 ; ; ++k)
                if (binomial2(k - 1) + 1 <= t && t <= binomial2(k)) {
                    auto entry = exact(static_cast<int>(k), "k2t-binomial-rows");
                    entry.oracle_only = true;
                    return entry;
                }
        }

        auto kst_entry(int s, int t) -> optional<OracleEntry>
        {
            if (s > t)
                std::swap(s, t);
            if (s == 1)
                return t >= 2 ? optional(exact(t, "tree-formula")) : std::nullopt;
            if (s == 2)
                return k2t_entry(t);
            if (s == t)
                return exact(3, "krr-regular");

            OracleEntry entry{ 3, std::min(6, s + t - 3), "kst-upper-bound", false, {} };
            // 2 * 6^s, saturating
            long long threshold = 2;
            for (int i = 0 ; i < s && threshold <= t ; ++i)
                threshold *= 6;
            if (t >= threshold)
                entry.note = "tightness regime t >= 2*6^s: value 6 claimed, not verified";
            return entry;
        }
    }

    auto oracle_rx3(const FamilySpec & spec) -> optional<OracleEntry>
    {
        switch (spec.kind) {
            case FamilyKind::path:
            case FamilyKind::star:
                if (spec.n >= 3)
                    return exact(spec.n - 1, "tree-formula");
                return std::nullopt;

            case FamilyKind::cycle:
                if (spec.n == 3)
                    return exact(2, "cycle-formula");
                if (spec.n >= 4)
                    return exact(spec.n - 2, "cycle-formula");
                return std::nullopt;

            case FamilyKind::complete:
                if (spec.n >= 3 && spec.n <= 5)
                    return exact(2, "complete-formula");
                if (spec.n >= 6)
                    return exact(3, "complete-formula");
                return std::nullopt;

            case FamilyKind::complete_bipartite:
                if (spec.s < 1 || spec.t < 1)
                    return std::nullopt;
                return kst_entry(spec.s, spec.t);

            case FamilyKind::empty:
                return std::nullopt;
        }
        return std::nullopt;
    }

    auto oracle_coloring(const FamilySpec & spec, int k, long long budget) -> optional<EdgeColoring>
    {
        auto g = generate(spec);
        bool tree = is_connected(g) && g.edge_count() == g.size() - 1;
        if (tree)
            return distinct_coloring(g);

        SolveOptions options;
        options.budget = budget;
        auto result = rx_exact(g, k, options);
        if (! result.exact())
            return std::nullopt;
        return result.witness;
    }
}
