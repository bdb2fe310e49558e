#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace crysalite::cli {

enum class Format { Table, Json, Csv };

struct RunConfig {
    std::string subcommand;  // "analyze", "verify <check>", "report certificate"
    std::uint32_t prime = 0;
    std::vector<std::string> vars;
    std::string poly;
    int n_max = 0;
    std::optional<int> w_max;
    Format format = Format::Json;
};

/// Exit status: 0 success, 1 a required hypothesis fails (or a verification
/// mismatches), 2 malformed input.
constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 1;
constexpr int kExitInput = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crysalite::cli
