#include "cli.hh"

#include <rainbow/constructions.hh>
#include <rainbow/families.hh>
#include <rainbow/io.hh>
#include <rainbow/solver.hh>
#include <rainbow/steiner.hh>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace rainbow::cli
{
    namespace
    {
        struct BudgetExhausted : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct Common
        {
            int jobs = 1;
            string manifest;
            string dot;
        };

        class Session
        {
            public:
                RunManifest manifest;

                auto read_graph(const string & path) -> Graph
                {
                    return graph_from_json(read_input(path));
                }

                auto read_coloring(const string & path) -> EdgeColoring
                {
                    return coloring_from_json(read_input(path));
                }

                auto write(const string & path, const json & j) -> void
                {
                    write_json_file(path, j);
                    manifest.outputs.push_back(path);
                }

                auto write_dot_file(const string & path, const Graph & g, const EdgeColoring * c,
                        const ProductVertexMap * coords) -> void
                {
                    std::ofstream out(path);
                    if (! out)
                        throw GraphError("cannot write '" + path + "'");
                    write_dot(out, g, c, coords);
                    manifest.outputs.push_back(path);
                }

            private:
                auto read_input(const string & path) -> json
                {
                    auto j = read_json_file(path);
                    manifest.inputs.emplace_back(path, sha256_file(path));
                    return j;
                }
        };

        auto add_common(CLI::App * sub, Common & common, bool dot) -> void
        {
            sub->add_option("--jobs", common.jobs, "worker threads for checker and solver")->check(CLI::PositiveNumber);
            sub->add_option("--manifest", common.manifest, "write a run manifest JSON");
            if (dot)
                sub->add_option("--dot", common.dot, "write a DOT rendering with edges coloured by palette index");
        }

        auto parameters_of(const CLI::App * sub) -> json
        {
            json params = json::object();
            for (auto * opt : sub->get_options()) {
                if (opt->count() == 0 || opt->get_single_name() == "help")
                    continue;
                auto & results = opt->results();
                if (results.size() == 1)
                    params[opt->get_single_name()] = results.front();
                else
                    params[opt->get_single_name()] = results;
            }
            return params;
        }

        auto family_spec(const string & family, int n, int s, int t) -> FamilySpec
        {
            auto kind = parse_family_kind(family);
            if (kind == FamilyKind::complete_bipartite)
                return FamilySpec::complete_bipartite(s, t);
            return FamilySpec{ kind, n, 0, 0 };
        }

        // Operand colourings not supplied on the command line come from the solver.
        auto operand_coloring(Session & session, const Graph & g, const string & path, int k, long long budget, int jobs)
            -> EdgeColoring
        {
            if (! path.empty()) {
                auto c = session.read_coloring(path);
                validate_coloring(g, c);
                return c;
            }
            if (g.edge_count() == 0)
                return EdgeColoring{ {}, 0 };
            SolveOptions options;
            options.budget = budget;
            options.jobs = jobs;
            auto result = rx_exact(g, std::min(k, g.size()), options);
            if (! result.exact())
                throw BudgetExhausted("solver budget exhausted while colouring an operand");
            return result.witness;
        }

        auto cmd_gen(Session & session, const string & family, int n, int s, int t, double p,
                optional<std::uint64_t> seed, const string & out_path, const Common & common, std::ostream & out) -> int
        {
            Graph g = [&] {
                if (family == "random") {
                    if (! seed)
                        throw GraphError("--family random needs --seed");
                    if (p < 0.0 || p > 1.0)
                        throw GraphError("--p must lie in [0,1]");
                    return random_connected(n, p, *seed);
                }
                return generate(family_spec(family, n, s, t));
            }();

            session.write(out_path, graph_to_json(g));
            if (! common.dot.empty())
                session.write_dot_file(common.dot, g, nullptr, nullptr);
            out << json{ { "n", g.size() }, { "m", g.edge_count() }, { "output", out_path } }.dump() << '\n';
            return exit_ok;
        }

        auto cmd_product(Session & session, const string & kind, const string & g_path, const string & h_path,
                const string & out_path, const Common & common, std::ostream & out) -> int
        {
            auto g = session.read_graph(g_path);
            auto h = session.read_graph(h_path);

            Graph derived;
            optional<ProductVertexMap> coords;
            if (kind == "join")
                derived = join(g, h);
            else {
                auto p = kind == "cartesian" ? cartesian_product(g, h)
                    : kind == "strong" ? strong_product(g, h)
                    : lexicographic_product(g, h);
                derived = p.graph;
                coords = p.vertices;
            }

            session.write(out_path, graph_to_json(derived));
            if (! common.dot.empty())
                session.write_dot_file(common.dot, derived, nullptr, coords ? &*coords : nullptr);
            out << json{ { "kind", kind }, { "n", derived.size() }, { "m", derived.edge_count() }, { "output", out_path } }.dump() << '\n';
            return exit_ok;
        }

        struct ColorArgs
        {
            string op, g, cg, h, ch;
            int vertex = -1;
            vector<int> first, second;
            int edge = -1;
            vector<int> dims;
            string out_graph, out_coloring, out_report;
            long long budget = default_node_budget;
        };

        auto cmd_color(Session & session, const ColorArgs & a, const Common & common, std::ostream & out) -> int
        {
            CheckOptions check;
            check.jobs = common.jobs;

            auto need = [] (const string & value, const string & flag, const string & op) {
                if (value.empty())
                    throw GraphError("--op " + op + " needs " + flag);
            };
            auto colour = [&] (const Graph & g, const string & path, int k) {
                return operand_coloring(session, g, path, k, a.budget, common.jobs);
            };

            ConstructionReport report;
            try {
                if (a.op == "grid") {
                    if (a.dims.empty())
                        throw GraphError("--op grid needs --dims");
                    report = grid_coloring(a.dims, check);
                }
                else if (a.op == "split" || a.op == "subdiv") {
                    need(a.g, "--g", a.op);
                    auto g = session.read_graph(a.g);
                    auto cg = colour(g, a.cg, 3);
                    if (a.op == "subdiv") {
                        if (a.edge < 0)
                            throw GraphError("--op subdiv needs --edge");
                        report = subdivision_coloring(g, cg, a.edge, check);
                    }
                    else {
                        if (a.vertex < 0 || a.vertex >= g.size())
                            throw GraphError("--op split needs a valid --vertex");
                        SplitSpec spec{ a.vertex, a.first, a.second };
                        if (a.second.empty())
                            for (auto w : g.neighbours(a.vertex))
                                if (std::find(a.first.begin(), a.first.end(), w) == a.first.end())
                                    spec.second.push_back(w);
                        report = split_coloring(g, cg, spec, check);
                    }
                }
                else {
                    need(a.g, "--g", a.op);
                    need(a.h, "--h", a.op);
                    auto g = session.read_graph(a.g);
                    auto h = session.read_graph(a.h);

                    if (a.op == "cartesian" || a.op == "strong") {
                        auto cg = colour(g, a.cg, 3);
                        auto ch = colour(h, a.ch, 3);
                        report = a.op == "cartesian" ? cartesian_coloring(g, cg, h, ch, check) : strong_coloring(g, cg, h, ch, check);
                    }
                    else if (a.op == "lex") {
                        auto cg = colour(g, a.cg, 3);
                        auto ch = h.size() == 2 ? EdgeColoring{ {}, 0 } : colour(h, a.ch, 2);
                        report = lex_coloring(g, cg, h, ch, check);
                    }
                    else {
                        const int s = g.size();
                        auto cg = s >= 3 ? colour(g, a.cg, 3) : EdgeColoring{ vector<Color>(g.edge_count(), 0), g.edge_count() > 0 ? 1 : 0 };
                        auto ch = colour(h, a.ch, s == 2 ? 2 : 3);
                        report = join_coloring(g, cg, h, ch, check);
                    }
                }
            }
            catch (const RoutedCase & routed) {
                json j{
                    { "operation", a.op },
                    { "routed", true },
                    { "reason", routed.what() },
                    { "order", routed.order },
                    { "lower", routed.entry.lower },
                    { "upper", routed.entry.upper },
                    { "provenance", routed.entry.provenance }
                };
                if (! a.out_report.empty())
                    session.write(a.out_report, j);
                out << j.dump() << '\n';
                return exit_ok;
            }

            auto j = report_to_json(report);
            if (! a.out_graph.empty())
                session.write(a.out_graph, graph_to_json(report.derived_graph));
            if (! a.out_coloring.empty())
                session.write(a.out_coloring, coloring_to_json(report.coloring));
            if (! a.out_report.empty())
                session.write(a.out_report, j);
            if (! common.dot.empty())
                session.write_dot_file(common.dot, report.derived_graph, &report.coloring,
                        report.coordinates ? &*report.coordinates : nullptr);

            out << j.dump() << '\n';
            return report.verified.ok ? exit_ok : exit_verification_failed;
        }

        auto cmd_verify(Session & session, const string & g_path, const string & c_path, int k,
                const Common & common, std::ostream & out) -> int
        {
            auto g = session.read_graph(g_path);
            auto c = session.read_coloring(c_path);
            CheckOptions check;
            check.jobs = common.jobs;
            check.palette_limit = max_palette_limit;
            auto verdict = is_k_rainbow(g, c, k, check);

            auto j = verdict_to_json(verdict);
            j["k"] = k;
            j["colors_used"] = c.colors_used();
            if (! common.dot.empty())
                session.write_dot_file(common.dot, g, &c, nullptr);
            out << j.dump() << '\n';
            return verdict.ok ? exit_ok : exit_verification_failed;
        }

        auto cmd_solve(Session & session, const string & g_path, int k, long long budget, const string & hint,
                const string & witness_path, const Common & common, std::ostream & out) -> int
        {
            auto g = session.read_graph(g_path);
            SolveOptions options;
            options.budget = budget;
            options.jobs = common.jobs;
            if (! hint.empty())
                options.upper_hint = session.read_coloring(hint);

            auto result = rx_exact(g, k, options);
            auto j = solve_result_to_json(result);
            j["k"] = k;
            // The best known colouring is still useful when the budget runs out.
            if (! witness_path.empty())
                session.write(witness_path, coloring_to_json(result.witness));
            if (! common.dot.empty())
                session.write_dot_file(common.dot, g, &result.witness, nullptr);
            out << j.dump() << '\n';
            return result.exact() ? exit_ok : exit_budget_exhausted;
        }

        auto cmd_sdiam(Session & session, const string & g_path, bool per_triple, const string & out_path,
                const Common & common, std::ostream & out) -> int
        {
            auto g = session.read_graph(g_path);
            auto value = sdiam3(g, common.jobs);

            if (per_triple || ! out_path.empty()) {
                json records = json::array();
                for (auto & t : all_triple_distances(g, common.jobs))
                    records.push_back(json{ { "triple", t.triple }, { "d", t.d } });
                if (per_triple)
                    for (auto & r : records)
                        out << r.dump() << '\n';
                if (! out_path.empty())
                    session.write(out_path, json{ { "sdiam3", value }, { "triples", records } });
            }
            out << json{ { "sdiam3", value } }.dump() << '\n';
            return exit_ok;
        }

        auto cmd_oracle(Session & session, const string & family, int n, int s, int t, int k, long long budget,
                const string & coloring_path, std::ostream & out) -> int
        {
            auto spec = family_spec(family, n, s, t);
            auto entry = oracle_rx3(spec);
            auto j = oracle_to_json(spec, entry);
            if (! coloring_path.empty()) {
                auto c = oracle_coloring(spec, k, budget);
                if (! c)
                    throw BudgetExhausted("solver budget exhausted while building the family colouring");
                session.write(coloring_path, coloring_to_json(*c));
            }
            out << j.dump() << '\n';
            return exit_ok;
        }

        auto error_line(const string & kind, const string & message) -> string
        {
            return json{ { "error", kind }, { "message", message } }.dump();
        }
    }

    auto manifest_to_json(const RunManifest & m) -> json
    {
        json inputs = json::array();
        for (auto & [path, digest] : m.inputs)
            inputs.push_back(json{ { "path", path }, { "sha256", digest } });
        return json{
            { "command", m.command },
            { "inputs", inputs },
            { "parameters", m.parameters },
            { "outputs", m.outputs },
            { "wall_seconds", m.wall_seconds }
        };
    }

    auto sha256_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw GraphError("cannot open '" + path + "'");
        string bytes{ std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>() };

        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256 failed");

        std::ostringstream hex;
        for (unsigned int i = 0 ; i < length ; ++i)
            hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
        return hex.str();
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        auto started = std::chrono::steady_clock::now();

        CLI::App app{ "Rainbow colourings of graph operations: generate, combine, colour, verify, solve" };
        app.name("rainbow");
        // -h would collide with the --h operand flag
        app.set_help_flag("--help", "print this help and exit");
        app.require_subcommand(1);

        Common common;
        string family, g_path, h_path, c_path, out_path, kind, witness_path, hint_path;
        int n = 0, s = 0, t = 0, k = 3;
        double p = 0.3;
        optional<std::uint64_t> seed;
        long long budget = default_node_budget;
        bool per_triple = false;
        ColorArgs color_args;

        auto * gen = app.add_subcommand("gen", "generate a family graph or a random connected graph");
        gen->add_option("--family", family, "path, cycle, complete, complete_bipartite, star, empty or random")->required();
        gen->add_option("--n", n, "number of vertices");
        gen->add_option("--s", s, "first side of complete_bipartite");
        gen->add_option("--t", t, "second side of complete_bipartite");
        gen->add_option("--p", p, "extra edge probability for random graphs");
        gen->add_option("--seed", seed, "seed for random graphs");
        gen->add_option("-o,--out", out_path, "graph JSON output")->required();
        add_common(gen, common, true);

        auto * product = app.add_subcommand("product", "build a graph product or join");
        product->add_option("--kind", kind)->required()->check(CLI::IsMember({ "cartesian", "strong", "lex", "join" }));
        product->add_option("--g", g_path, "first operand graph JSON")->required();
        product->add_option("--h", h_path, "second operand graph JSON")->required();
        product->add_option("-o,--out", out_path, "graph JSON output")->required();
        add_common(product, common, true);

        auto * color = app.add_subcommand("color", "colour a derived graph from operand colourings and verify it");
        color->add_option("--op", color_args.op)->required()
            ->check(CLI::IsMember({ "cartesian", "strong", "lex", "join", "split", "subdiv", "grid" }));
        color->add_option("--g", color_args.g, "first operand graph JSON");
        color->add_option("--cg", color_args.cg, "colouring of G (solved when omitted)");
        color->add_option("--h", color_args.h, "second operand graph JSON");
        color->add_option("--ch", color_args.ch, "colouring of H (solved when omitted)");
        color->add_option("--vertex", color_args.vertex, "vertex to split");
        color->add_option("--first", color_args.first, "neighbours kept by the split vertex")->delimiter(',');
        color->add_option("--second", color_args.second, "neighbours moved to the new vertex")->delimiter(',');
        color->add_option("--edge", color_args.edge, "edge index to subdivide");
        color->add_option("--dims", color_args.dims, "path orders of a grid, e.g. 4,3")->delimiter(',');
        color->add_option("-o,--out-graph", color_args.out_graph, "derived graph JSON output");
        color->add_option("--out-coloring", color_args.out_coloring, "derived colouring JSON output");
        color->add_option("--out-report", color_args.out_report, "report JSON output");
        color->add_option("--budget", color_args.budget, "solver node budget for omitted operand colourings")->check(CLI::PositiveNumber);
        add_common(color, common, true);

        auto * verify = app.add_subcommand("verify", "check whether a colouring is k-rainbow");
        verify->add_option("--graph", g_path, "graph JSON")->required();
        verify->add_option("--coloring", c_path, "colouring JSON")->required();
        verify->add_option("--k", k, "2 or 3 (default 3)")->check(CLI::IsMember({ 2, 3 }));
        add_common(verify, common, true);

        auto * solve = app.add_subcommand("solve", "compute rx_k exactly");
        solve->add_option("--graph", g_path, "graph JSON")->required();
        solve->add_option("--k", k, "2 or 3 (default 3)")->check(CLI::IsMember({ 2, 3 }));
        solve->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);
        solve->add_option("--hint", hint_path, "known valid colouring used as the initial upper bound");
        solve->add_option("--emit-witness", witness_path, "write the optimal (or best known) colouring");
        add_common(solve, common, true);

        auto * sdiam = app.add_subcommand("sdiam", "3-Steiner diameter and per-triple Steiner distances");
        sdiam->add_option("--graph", g_path, "graph JSON")->required();
        sdiam->add_flag("--per-triple", per_triple, "print one record per triple");
        sdiam->add_option("-o,--out", out_path, "write all triple records to a JSON file");
        add_common(sdiam, common, false);

        auto * oracle = app.add_subcommand("oracle", "known rx_3 values for graph families");
        oracle->add_option("--family", family, "path, cycle, complete, complete_bipartite, star or empty")->required();
        oracle->add_option("--n", n, "number of vertices");
        oracle->add_option("--s", s, "first side of complete_bipartite");
        oracle->add_option("--t", t, "second side of complete_bipartite");
        oracle->add_option("--k", k, "index for --emit-coloring")->check(CLI::IsMember({ 2, 3 }));
        oracle->add_option("--budget", budget, "solver node budget for --emit-coloring")->check(CLI::PositiveNumber);
        oracle->add_option("--emit-coloring", c_path, "write a k-rainbow colouring of the family graph");
        add_common(oracle, common, false);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << error_line("usage", e.what()) << '\n';
            return exit_input_error;
        }

        auto * chosen = app.get_subcommands().front();
        Session session;
        session.manifest.command = chosen->get_name();
        session.manifest.parameters = parameters_of(chosen);

        int code = exit_ok;
        try {
            if (chosen == gen)
                code = cmd_gen(session, family, n, s, t, p, seed, out_path, common, out);
            else if (chosen == product)
                code = cmd_product(session, kind, g_path, h_path, out_path, common, out);
            else if (chosen == color)
                code = cmd_color(session, color_args, common, out);
            else if (chosen == verify)
                code = cmd_verify(session, g_path, c_path, k, common, out);
            else if (chosen == solve)
                code = cmd_solve(session, g_path, k, budget, hint_path, witness_path, common, out);
            else if (chosen == sdiam)
                code = cmd_sdiam(session, g_path, per_triple, out_path, common, out);
            else
                code = cmd_oracle(session, family, n, s, t, k, budget, c_path, out);
        }
        catch (const BudgetExhausted & e) {
            err << error_line("budget_exhausted", e.what()) << '\n';
            code = exit_budget_exhausted;
        }
        catch (const ConstructionError & e) {
            err << error_line("precondition", e.what()) << '\n';
            code = exit_input_error;
        }
        catch (const std::invalid_argument & e) {
            // GraphError and the k-range checks
            err << error_line("input", e.what()) << '\n';
            code = exit_input_error;
        }
        catch (const json::exception & e) {
            err << error_line("input", e.what()) << '\n';
            code = exit_input_error;
        }

        if (! common.manifest.empty()) {
            session.manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            session.manifest.outputs.push_back(common.manifest);
            try {
                write_json_file(common.manifest, manifest_to_json(session.manifest));
            }
            catch (const GraphError & e) {
                err << error_line("output", e.what()) << '\n';
                if (code == exit_ok)
                    code = exit_input_error;
            }
        }
        return code;
    }
}
