#pragma once

#include "bdim/formulas.hpp"
#include "bdim/generators.hpp"
#include "bdim/solvers.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bdim::cli {

inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr std::string_view report_schema = "bdim-report/1";

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_input = 3,
    exit_verification = 4,
    exit_parameters = 5,
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
    {
    }
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

// Edge list ("n m" then m lines "u v", '#' comments) or {"n": .., "edges": ..};
// chosen by the first non-comment, non-blank character.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string write_edge_list(const Graph& g);
std::string write_graph_json(const Graph& g);

struct Report {
    std::string input;
    std::string parameter; // dim, adim, dimk, bdim, enum-min
    int k = 0;
    int value = 0;
    std::string witness_kind; // "set" or "broadcast"
    std::vector<int> witness; // vertex ids, or the full value vector
    std::optional<std::vector<std::vector<int>>> all_witnesses;
    double elapsed_ms = 0.0;
    std::map<std::string, long long> stats;
    std::optional<BoundReport> bounds;
    std::string version = std::string(tool_version);

    friend bool operator==(const Report&, const Report&) = default;
};

// Re-validates the witness against g; throws std::logic_error if it fails.
Report make_report(const Graph& g, std::string input, const SolverResult& result, double elapsed_ms);
Report make_enumeration_report(const Graph& g, std::string input, const EnumerationResult& result, double elapsed_ms);

std::string serialize(const Report& r);
Report parse_report(std::string_view text);
std::string render_text(const Report& r);

struct VerifyOptions {
    int max_order = 5;
    std::uint64_t seed = 1;
    int samples = 0; // seeded random graphs per order just above max_order
    int threads = 1;
};

struct CheckFailure {
    std::string check;
    std::string message;
    std::string graph; // edge list reproducer
    std::uint64_t seed = 0;
};

struct SuiteResult {
    std::string suite;
    long long checks = 0;
    std::vector<CheckFailure> failures;
    [[nodiscard]] bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& verify_suites();
// Runs one suite, or every suite for "all". Unknown ids throw std::invalid_argument.
std::vector<SuiteResult> run_verify(std::string_view suite, const VerifyOptions& options);

struct BenchRow {
    std::string family;
    std::string parameter;
    int order = 0;
    int value = 0;
    double elapsed_ms = 0.0;
    long long candidates = 0;
};

std::vector<BenchRow> run_bench(int threads);

// Full command-line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bdim::cli
