#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace pbes::cli {

enum class Command { Refine, Solve, Dot, Oracle, Validate };

struct RunConfig {
    Command command = Command::Solve;
    std::string input;
    std::optional<std::string> query;
    std::size_t max_sweeps = 100;
    std::size_t max_states = 10000;
    std::int64_t max_component = 1000;
    std::optional<std::string> dot_path;
    bool highlight_good_cycles = false;
    bool proof_graph_only = false;
    std::optional<std::string> graph_path;
    std::optional<std::string> witness_path;
    std::optional<std::string> output_path;
};

inline constexpr int exit_conclusive = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_unknown = 2;

/// Runs one command. Returns 0 for a conclusive result, 2 for unknown or
/// capped, 1 on error (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace pbes::cli
