#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hhineq/bound_report.hpp"
#include "hhineq/function_spec.hpp"
#include "hhineq/hfunction.hpp"

namespace hhineq::suite {

/// Row identifiers in report order.
inline const std::vector<std::string> kAllTheorems = {"L1",  "L2",  "T5-left", "T5-right",
                                                      "T6",  "T7",  "T8",      "T9",
                                                      "T10", "T11", "T12",     "T13",
                                                      "T15", "T16"};

struct SuiteConfig {
    std::vector<std::string> theorems = kAllTheorems;
    /// Corpus ids; empty selects the whole corpus.
    std::vector<std::string> functions;
    std::vector<std::string> h = {"identity", "constant-one", "power:0.5"};
    int intervals_per_function = 20;
    /// Explicit intervals replace the random draw when present.
    std::optional<std::vector<std::pair<double, double>>> intervals;
    std::vector<double> q = {1.0, 1.5, 2.0, 3.0};
    double tolerance = 1e-9;
    std::string format = "json";
    std::string out;
    int threads = 1;
    std::uint64_t seed = 20240601;
    int grid = 33;
    /// Test hook: multiplies every T6-T13 bound before the comparison.
    double debug_bound_scale = 1.0;
};

struct SuiteSummary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;

    friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::vector<BoundReport> rows;
    SuiteSummary summary;

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// Accepts "T5", "5", "L1", ... and returns the canonical row ids it covers.
std::vector<std::string> expand_theorem(std::string_view token);

/// Parses a JSON document mirroring SuiteConfig; absent fields keep their
/// defaults. Throws ConfigError.
SuiteConfig parse_config(std::string_view json_text);
SuiteConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError for an invalid config.
void validate_config(const SuiteConfig& config);

/// Position of a row id in kAllTheorems.
int theorem_rank(std::string_view theorem);

/// Evaluates one row id ("L1", "T5-left", "T6", ..., "T16") the way the
/// suite does. `q` is required by T7-T9 and T11-T13 and ignored otherwise.
BoundReport evaluate_row(std::string_view theorem, const FunctionSpec& fs, const HFunction& h,
                         double a, double b, std::optional<double> q, const BoundOptions& options);

SuiteSummary tally(const std::vector<BoundReport>& rows);

/// Validates the selected corpus claims, then evaluates every row. Throws
/// CorpusIntegrityError when a claim fails.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace hhineq::suite
