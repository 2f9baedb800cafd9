#include <rainbow/io.hh>

#include <array>
#include <fstream>
#include <sstream>

using nlohmann::json;
using std::string;

namespace rainbow
{
    auto graph_to_json(const Graph & g) -> json
    {
        json edges = json::array();
        for (auto & e : g.edges())
            edges.push_back({ e.u, e.v });
        return json{ { "n", g.size() }, { "edges", edges } };
    }

    auto graph_from_json(const json & j) -> Graph
    {
        try {
            int n = j.at("n").get<int>();
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (auto & e : j.at("edges")) {
                if (! e.is_array() || e.size() != 2)
                    throw GraphError("edge entries must be [u,v] pairs");
                pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            return Graph(n, pairs);
        }
        catch (const json::exception & e) {
            throw GraphError(string("malformed graph json: ") + e.what());
        }
    }

    auto coloring_to_json(const EdgeColoring & c) -> json
    {
        return json{ { "palette", c.palette_size }, { "colors", c.colors } };
    }

    auto coloring_from_json(const json & j) -> EdgeColoring
    {
        try {
            return EdgeColoring{ j.at("colors").get<std::vector<Color>>(), j.at("palette").get<int>() };
        }
        catch (const json::exception & e) {
            throw GraphError(string("malformed coloring json: ") + e.what());
        }
    }

    auto verdict_to_json(const Verdict & v) -> json
    {
        json j{ { "ok", v.ok } };
        j["failing"] = v.ok ? json(nullptr) : json(v.failing);
        return j;
    }

    auto report_to_json(const ConstructionReport & r) -> json
    {
        json j{
            { "operation", r.operation },
            { "colors_used", r.colors_used },
            { "claimed_bound", r.claimed_bound },
            { "ok", r.verified.ok },
            { "failing", r.verified.ok ? json(nullptr) : json(r.verified.failing) }
        };
        if (r.best_known_bound)
            j["best_known_bound"] = *r.best_known_bound;
        if (r.certified_lower) {
            j["sdiam3"] = *r.certified_lower;
            j["certified_exact"] = r.certified_exact();
        }
        return j;
    }

    auto solve_result_to_json(const SolveResult & r) -> json
    {
        json j{
            { "exact", r.exact() },
            { "lower", r.lower },
            { "upper", r.upper },
            { "lower_bound_used", r.lower_bound_used },
            { "nodes_explored", r.nodes_explored }
        };
        j["value"] = r.exact() ? json(r.value) : json(nullptr);
        return j;
    }

    auto oracle_to_json(const FamilySpec & spec, const std::optional<OracleEntry> & e) -> json
    {
        json family{ { "kind", family_name(spec.kind) } };
        if (spec.kind == FamilyKind::complete_bipartite) {
            family["s"] = spec.s;
            family["t"] = spec.t;
        }
        else
            family["n"] = spec.n;

        if (! e)
            return json{ { "family", family }, { "oracle", nullptr } };

        json j{
            { "family", family },
            { "lower", e->lower },
            { "upper", e->upper },
            { "provenance", e->provenance },
            { "oracle_only", e->oracle_only }
        };
        j["value"] = e->exact() ? json(e->lower) : json(nullptr);
        if (! e->note.empty())
            j["note"] = e->note;
        return j;
    }

    auto read_json_file(const string & path) -> json
    {
        std::ifstream in(path);
        if (! in)
            throw GraphError("cannot open '" + path + "'");
        try {
            return json::parse(in);
        }
        catch (const json::exception & e) {
            throw GraphError("cannot parse '" + path + "': " + e.what());
        }
    }

    auto write_json_file(const string & path, const json & j) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw GraphError("cannot write '" + path + "'");
        out << j.dump(2) << '\n';
    }

    auto write_dot(std::ostream & out, const Graph & g, const EdgeColoring * coloring, const ProductVertexMap * coords) -> void
    {
        static constexpr std::array<const char *, 12> palette = {
            "red", "blue", "forestgreen", "orange", "purple", "brown",
            "deeppink", "cyan4", "gold3", "gray40", "navy", "olivedrab"
        };

        out << "graph G {\n";
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            out << "  " << v;
            if (coords) {
                auto [i, j] = coords->backward(v);
                out << " [label=\"(" << i << "," << j << ")\"]";
            }
            out << ";\n";
        }
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
            out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
            if (coloring) {
                Color c = (*coloring)[e];
                out << " [label=\"" << c << "\", color=\"" << palette[c % palette.size()] << "\"]";
            }
            out << ";\n";
        }
        out << "}\n";
    }
}
