#ifndef RAINBOW_TOOLS_CLI_HH
#define RAINBOW_TOOLS_CLI_HH

#include <json.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace rainbow::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_verification_failed = 2,
        exit_budget_exhausted = 3,
        exit_input_error = 4
    };

    /// Written by --manifest. Inputs carry a SHA-256 of their bytes so reruns
    /// can be compared; wall time is the only field expected to vary.
    struct RunManifest
    {
        std::string command;
        std::vector<std::pair<std::string, std::string>> inputs;     // path, digest
        nlohmann::json parameters = nlohmann::json::object();
        std::vector<std::string> outputs;
        double wall_seconds = 0.0;
    };

    auto manifest_to_json(const RunManifest & m) -> nlohmann::json;

    auto sha256_file(const std::string & path) -> std::string;

    /// args excludes the program name. Results go to out, errors to err as a
    /// single JSON line.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
