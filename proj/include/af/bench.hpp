#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "af/cuts.hpp"
#include "af/framework.hpp"
#include "af/semantics.hpp"
#include "af/splitting.hpp"

namespace af {

enum class Method { direct = 0, split_ho = 1, split_bc = 2 };

std::string_view method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);

struct SolveConfig {
    SearchStrategy strategy;
    std::optional<ArgId> cut_start;
    Orientation orientation = Orientation::literal;
    bool parallel = false;
};

struct SolveOutcome {
    std::vector<Labeling> labelings;
    std::optional<Cut> cut;  // split methods only
    int discarded = 0;
};

/// Direct enumeration or the full cut + split + enumerate pipeline.
SolveOutcome run_method(const Framework& f, Method method, const SolveConfig& config = {},
                        const Deadline* deadline = nullptr);

struct Measurement {
    std::string instance;
    int n = 0;
    long long m = 0;
    std::optional<std::uint64_t> seed;
    Method method = Method::direct;
    std::optional<int> k;
    std::int64_t elapsed_ms = 0;
    std::int64_t elapsed_ns = 0;  // raw reading behind elapsed_ms
    bool censored = false;
    int labeling_count = 0;  // -1 when censored
};

/// One timed run under a wall-clock budget. Budget exhaustion abandons the
/// run and records it censored at the limit; sub-millisecond runs report
/// elapsed_ms = 0.
Measurement time_solve(const Framework& f, Method method, std::int64_t limit_ms,
                       const SolveConfig& config = {});

/// Signed percentage 100*(t_base - t_method)/t_base rounded half away from
/// zero; empty when t_base is 0. 100 means a gain above 99.5%.
std::optional<int> gain_percent(std::int64_t t_base, std::int64_t t_method);

struct MethodSummary {
    double avg_ms = 0;        // censored runs enter at the limit value
    bool censored = false;    // some contributing measurement was censored
    std::optional<int> value_gain;  // gain of the averages vs direct
    std::optional<int> mean_gain;   // average of per-instance gains vs direct
};

struct SummaryRow {
    std::string af_type;  // "n/m"
    int n = 0;
    long long m = 0;
    std::array<std::optional<MethodSummary>, 3> methods;  // indexed by Method

    const std::optional<MethodSummary>& of(Method method) const {
        return methods[static_cast<std::size_t>(method)];
    }
};

/// Per-af_type averages plus both gain statistics (they diverge; both are
/// reported). Groups without direct measurements are kept but get no gains;
/// a warning goes to stderr.
std::vector<SummaryRow> aggregate(std::span<const Measurement> measurements);

struct Report {
    std::string table;  // aligned text, censored averages prefixed ">"
    std::string csv;    // raw fields, censored as its own column
};

Report render_report(std::span<const SummaryRow> rows);

/// Raw per-measurement CSV:
/// instance,n,m,seed,method,cut_algo,k,elapsed_ms,censored,labeling_count
std::string measurements_csv(std::span<const Measurement> measurements);

}  // namespace af
