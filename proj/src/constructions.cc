#include <rainbow/constructions.hh>
#include <rainbow/steiner.hh>

#include <algorithm>
#include <string>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace rainbow
{
    namespace
    {
        enum class Requirement
        {
            rainbow_connected,
            three_rainbow
        };

        // Three-rainbow operands with fewer than three vertices are held to the
        // rainbow-connected condition, which the three-set condition implies.
        auto require_operand(const Graph & g, const EdgeColoring & c, Requirement req, const string & name,
                const CheckOptions & options) -> void
        {
            try {
                validate_coloring(g, c);
            }
            catch (const GraphError & e) {
                throw ConstructionError(name + ": " + e.what());
            }

            auto check = [&] (int k) {
                auto verdict = is_k_rainbow(g, c, k, options);
                if (! verdict.ok) {
                    string set;
                    for (auto v : verdict.failing)
                        set += (set.empty() ? "" : ",") + to_string(v);
                    throw ConstructionError(name + " colouring is not " + to_string(k) + "-rainbow, fails on {" + set + "}");
                }
            };
            check(2);
            if (req == Requirement::three_rainbow)
                check(3);
        }

        auto finish(string operation, Graph derived, EdgeColoring coloring, int claimed, const CheckOptions & options)
            -> ConstructionReport
        {
            ConstructionReport report;
            report.operation = std::move(operation);
            report.verified = is_k_rainbow(derived, coloring, 3, options);
            report.colors_used = coloring.colors_used();
            report.claimed_bound = claimed;
            report.derived_graph = std::move(derived);
            report.coloring = std::move(coloring);
            return report;
        }

        auto complete_route(const string & operation, int order) -> RoutedCase
        {
            auto entry = oracle_rx3(FamilySpec::complete(order));
            if (! entry)
                entry = OracleEntry{ 1, 1, "single-edge", false, {} };
            return RoutedCase(operation + ": both operands complete, derived graph is K_" + to_string(order), *entry, order);
        }

        auto product_coloring(const Product & p, const EdgeColoring & cg, const EdgeColoring & ch) -> EdgeColoring
        {
            EdgeColoring c{ {}, cg.palette_size + ch.palette_size };
            for (auto & cls : p.edge_classes) {
                switch (cls.kind) {
                    case EdgeClassKind::g_layer: c.colors.push_back(cg[cls.operand_edge]); break;
                    case EdgeClassKind::h_layer: c.colors.push_back(cg.palette_size + ch[cls.operand_edge]); break;
                    case EdgeClassKind::cross:   c.colors.push_back(0); break;
                }
            }
            return c;
        }

        auto require_connected(const Graph & g, const string & name) -> void
        {
            if (! is_connected(g))
                throw ConstructionError(name + " must be connected");
        }
    }

    auto attach_sdiam3_certificate(ConstructionReport & report, int jobs) -> void
    {
        if (report.derived_graph.size() >= 3 && is_connected(report.derived_graph))
            report.certified_lower = sdiam3(report.derived_graph, jobs);
    }

    auto cartesian_coloring(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch,
            const CheckOptions & options) -> ConstructionReport
    {
        require_connected(g, "G");
        require_connected(h, "H");
        require_operand(g, cg, Requirement::three_rainbow, "G", options);
        require_operand(h, ch, Requirement::three_rainbow, "H", options);

        auto p = cartesian_product(g, h);
        auto report = finish("cartesian", p.graph, product_coloring(p, cg, ch), cg.palette_size + ch.palette_size, options);
        report.coordinates = p.vertices;
        return report;
    }

    auto grid_coloring(const vector<int> & dims, const CheckOptions & options) -> ConstructionReport
    {
        if (dims.empty())
            throw ConstructionError("grid needs at least one dimension");
        for (auto d : dims)
            if (d < 2)
                throw ConstructionError("grid dimensions must be at least 2, got " + to_string(d));

        Graph current = generate(FamilySpec::path(dims.front()));
        EdgeColoring colors = distinct_coloring(current);
        optional<ProductVertexMap> coords;
        for (std::size_t i = 1 ; i < dims.size() ; ++i) {
            auto factor = generate(FamilySpec::path(dims[i]));
            auto p = cartesian_product(current, factor);
            colors = product_coloring(p, colors, distinct_coloring(factor));
            current = p.graph;
            coords = p.vertices;
        }

        int claimed = 0;
        for (auto d : dims)
            claimed += d - 1;

        auto report = finish("grid", current, colors, claimed, options);
        report.coordinates = coords;
        attach_sdiam3_certificate(report, options.jobs);
        return report;
    }

    auto strong_coloring(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch,
            const CheckOptions & options) -> ConstructionReport
    {
        require_connected(g, "G");
        require_connected(h, "H");
        require_operand(g, cg, Requirement::three_rainbow, "G", options);
        require_operand(h, ch, Requirement::three_rainbow, "H", options);

        auto p = strong_product(g, h);
        auto report = finish("strong", p.graph, product_coloring(p, cg, ch), cg.palette_size + ch.palette_size, options);
        report.coordinates = p.vertices;
        return report;
    }

    auto lex_coloring_h2(const Graph & g, const EdgeColoring & cg, const CheckOptions & options) -> ConstructionReport
    {
        if (g.size() < 2)
            throw ConstructionError("lex: G needs at least two vertices");
        require_connected(g, "G");
        if (g.is_complete())
            throw complete_route("lex", 2 * g.size());
        require_operand(g, cg, Requirement::three_rainbow, "G", options);

        auto p = lexicographic_product(g, generate(FamilySpec::complete(2)));
        const Color fresh = cg.palette_size;
        EdgeColoring c{ {}, cg.palette_size + 1 };
        for (auto & cls : p.edge_classes) {
            if (cls.kind == EdgeClassKind::cross && cls.h_at_u == cls.h_at_v)
                c.colors.push_back(cg[cls.operand_edge]);
            else
                c.colors.push_back(fresh);
        }

        auto report = finish("lex", p.graph, c, cg.palette_size + 1, options);
        report.coordinates = p.vertices;
        return report;
    }

    auto lex_coloring_general(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch_rc,
            const CheckOptions & options) -> ConstructionReport
    {
        if (g.size() < 2)
            throw ConstructionError("lex: G needs at least two vertices");
        if (h.size() < 3)
            throw ConstructionError("lex: general rule needs |V(H)| >= 3; use the two-vertex rule");
        require_connected(g, "G");
        require_connected(h, "H");
        if (g.is_complete() && h.is_complete())
            throw complete_route("lex", g.size() * h.size());
        require_operand(g, cg, Requirement::three_rainbow, "G", options);
        require_operand(h, ch_rc, Requirement::rainbow_connected, "H", options);

        const int p = cg.palette_size;
        if (cg.colors_used() != p)
            throw ConstructionError("lex: G colouring must use exactly the colours 0.." + to_string(p - 1));

        auto product = lexicographic_product(g, h);
        EdgeColoring c{ {}, p + ch_rc.palette_size };
        for (auto & cls : product.edge_classes) {
            if (cls.kind == EdgeClassKind::h_layer)
                c.colors.push_back(p + ch_rc[cls.operand_edge]);
            else if (cls.h_at_u == cls.h_at_v)
                c.colors.push_back(cg[cls.operand_edge]);
            else
                c.colors.push_back((cg[cls.operand_edge] + 1) % p);
        }

        auto report = finish("lex", product.graph, c, p + ch_rc.palette_size, options);
        report.coordinates = product.vertices;
        return report;
    }

    auto lex_coloring(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch,
            const CheckOptions & options) -> ConstructionReport
    {
        if (h.size() == 2) {
            require_connected(h, "H");
            return lex_coloring_h2(g, cg, options);
        }
        return lex_coloring_general(g, cg, h, ch, options);
    }

    auto join_coloring(const Graph & g, const EdgeColoring & cg, const Graph & h, const EdgeColoring & ch,
            const CheckOptions & options) -> ConstructionReport
    {
        const int s = g.size(), t = h.size();
        if (s < 1 || s > t)
            throw ConstructionError("join: need 1 <= |V(G)| <= |V(H)|, got " + to_string(s) + " and " + to_string(t));
        require_connected(g, "G");
        require_connected(h, "H");
        if (g.is_complete() && h.is_complete())
            throw complete_route("join", s + t);

        auto derived = join(g, h);
        EdgeColoring c;
        int claimed = 0;

        if (s == 1) {
            require_operand(h, ch, Requirement::three_rainbow, "H", options);
            const Color fresh = ch.palette_size;
            c.palette_size = fresh + 1;
            c.colors = ch.colors;
            c.colors.resize(derived.edge_count(), fresh);
            claimed = fresh + 1;
        }
        else if (s == 2) {
            if (g.edge_count() != 1)
                throw ConstructionError("join: two-vertex side must carry its edge");
            require_operand(h, ch, Requirement::rainbow_connected, "H", options);
            const int rc = ch.palette_size;
            c.palette_size = rc + 3;
            c.colors.push_back(rc + 2);
            c.colors.insert(c.colors.end(), ch.colors.begin(), ch.colors.end());
            for (Vertex a = 0 ; a < s ; ++a)
                for (Vertex b = 0 ; b < t ; ++b)
                    c.colors.push_back(rc + a);
            claimed = rc + 3;
        }
        else {
            require_operand(g, cg, Requirement::three_rainbow, "G", options);
            require_operand(h, ch, Requirement::three_rainbow, "H", options);
            const int c1 = std::max(cg.palette_size, ch.palette_size);
            c.palette_size = c1 + 1;
            c.colors = cg.colors;
            c.colors.insert(c.colors.end(), ch.colors.begin(), ch.colors.end());
            c.colors.resize(derived.edge_count(), c1);
            claimed = c1 + 1;
        }

        auto report = finish("join", derived, c, claimed, options);
        if (auto family = oracle_rx3(FamilySpec::complete_bipartite(s, t)))
            report.best_known_bound = std::min(claimed, family->upper);
        return report;
    }

    auto split_coloring(const Graph & g, const EdgeColoring & cg, const SplitSpec & spec,
            const CheckOptions & options) -> ConstructionReport
    {
        require_connected(g, "G");
        require_operand(g, cg, Requirement::three_rainbow, "G", options);

        DerivedGraph d = [&] {
            try {
                return split_vertex(g, spec);
            }
            catch (const ConstructionError &) {
                throw;
            }
            catch (const GraphError & e) {
                throw ConstructionError(string("split: ") + e.what());
            }
        }();

        EdgeColoring c{ {}, cg.palette_size + 1 };
        for (auto origin : d.edge_origin)
            c.colors.push_back(origin == fresh_edge ? cg.palette_size : cg[origin]);
        return finish("split", d.graph, c, cg.palette_size + 1, options);
    }

    auto subdivision_coloring(const Graph & g, const EdgeColoring & cg, EdgeIndex e,
            const CheckOptions & options) -> ConstructionReport
    {
        require_connected(g, "G");
        require_operand(g, cg, Requirement::three_rainbow, "G", options);
        if (e < 0 || e >= g.edge_count())
            throw ConstructionError("subdivide: edge index " + to_string(e) + " out of range");

        auto d = subdivide_edge(g, e);
        EdgeColoring c{ {}, cg.palette_size + 1 };
        for (auto origin : d.edge_origin)
            c.colors.push_back(origin == fresh_edge ? cg.palette_size : cg[origin]);
        return finish("subdiv", d.graph, c, cg.palette_size + 1, options);
    }
}
