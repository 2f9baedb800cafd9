#ifndef RAINBOW_IO_HH
#define RAINBOW_IO_HH

#include <rainbow/coloring.hh>
#include <rainbow/constructions.hh>
#include <rainbow/families.hh>
#include <rainbow/graph.hh>
#include <rainbow/rainbow_check.hh>
#include <rainbow/solver.hh>

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace rainbow
{
    /// {"n": <int>, "edges": [[u,v], ...]}; file order defines edge indices.
    auto graph_to_json(const Graph & g) -> nlohmann::json;
    auto graph_from_json(const nlohmann::json & j) -> Graph;

    /// {"palette": p, "colors": [c_0, ..., c_{m-1}]}
    auto coloring_to_json(const EdgeColoring & c) -> nlohmann::json;
    auto coloring_from_json(const nlohmann::json & j) -> EdgeColoring;

    /// {"ok": bool, "failing": [a,b,c] | null}
    auto verdict_to_json(const Verdict & v) -> nlohmann::json;

    /// {"colors_used", "claimed_bound", "ok", "failing", ...}
    auto report_to_json(const ConstructionReport & r) -> nlohmann::json;

    auto solve_result_to_json(const SolveResult & r) -> nlohmann::json;
    auto oracle_to_json(const FamilySpec & spec, const std::optional<OracleEntry> & e) -> nlohmann::json;

    /// Throws GraphError when the file is missing or does not parse.
    auto read_json_file(const std::string & path) -> nlohmann::json;

    /// Pretty-printed with a trailing newline; key order is fixed by the json type.
    auto write_json_file(const std::string & path, const nlohmann::json & j) -> void;

    /// Undirected DOT. Vertices are labelled "(i,j)" when coordinates are given;
    /// edges carry their colour index as label and a colour from a fixed cycle.
    auto write_dot(std::ostream & out, const Graph & g, const EdgeColoring * coloring = nullptr,
            const ProductVertexMap * coords = nullptr) -> void;
}

#endif
