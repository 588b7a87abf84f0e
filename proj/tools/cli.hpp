#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hsilab::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kPrecondition = 3,
    kConformance = 4,
    kCounterexample = 5,
};

[[nodiscard]] std::string sha256_hex(std::string_view bytes);

struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    std::string version{kVersion};
    double wall_seconds = 0;
    std::vector<std::pair<std::string, std::string>> input_hashes;   // name, sha256
    std::vector<std::pair<std::string, std::string>> output_hashes;  // name, sha256
    int exit_code = 0;
};

void to_json(nlohmann::json& j, const RunManifest& m);

/// Runs the command line (args excludes the program name). Primary output goes to `out`,
/// human-readable summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hsilab::cli
