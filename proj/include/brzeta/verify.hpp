#pragma once

// Cross-check suites: each compares two or more independent computations of
// the same quantity and reports the first disagreeing coefficient.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brzeta/series.hpp"

namespace brzeta::verify {

struct Mismatch {
    std::string where;    // configuration being checked
    std::string monomial; // coefficient position
    std::string expected;
    std::string actual;
};

struct SuiteInfo {
    unsigned id;
    std::string name;
    std::string summary;
};

struct SuiteResult {
    unsigned id = 0;
    std::string name;
    std::size_t checks = 0;             // configurations compared
    std::optional<Mismatch> mismatch;   // first disagreement
    std::string error;                  // engine exception, if one escaped

    bool passed() const { return !mismatch && error.empty(); }
};

struct SuiteOptions {
    /// Overrides the suite's size parameter (degree bound, or n_max for rossmann).
    std::optional<std::uint64_t> max;
    std::uint64_t seed = 1729;
};

const std::vector<SuiteInfo>& suites();

/// Throws SchemaError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});
std::vector<SuiteResult> run_all(const SuiteOptions& options = {});

/// Coefficient-wise comparison over alphabets of the same size, up to the
/// smaller bound; names positions with the expected series' labels.
std::optional<Mismatch> compare(const std::string& where, const TruncatedSeries& expected,
                                const TruncatedSeries& actual);
std::optional<Mismatch> compare(const std::string& where, const std::vector<Integer>& expected,
                                const std::vector<Integer>& actual, std::string_view index_name = "n");

nlohmann::json to_json(const SuiteResult& result);
std::string to_line(const SuiteResult& result);

} // namespace brzeta::verify
