#include "af/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

namespace af {

namespace {

constexpr std::array<std::string_view, 3> kMethodNames = {"direct", "split-ho", "split-bc"};

std::optional<int> gain_of_averages(double avg_base, double avg_method) {
    if (avg_base <= 0) return std::nullopt;
    return static_cast<int>(std::llround(100.0 * (avg_base - avg_method) / avg_base));
}

}  // namespace

std::string_view method_name(Method method) {
    return kMethodNames[static_cast<std::size_t>(method)];
}

std::optional<Method> method_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kMethodNames.size(); ++i)
        if (kMethodNames[i] == name) return static_cast<Method>(i);
    return std::nullopt;
}

SolveOutcome run_method(const Framework& f, Method method, const SolveConfig& config,
                        const Deadline* deadline) {
    SolveOutcome out;
    if (method == Method::direct) {
        out.labelings = enumerate_stable(f, config.strategy, deadline);
        return out;
    }
    CutRequest request;
    request.algo = method == Method::split_ho ? CutAlgo::hao_orlin : CutAlgo::balanced;
    request.start = config.cut_start;
    request.orientation = config.orientation;
    Cut cut = compute_cut(f, request);

    SplitOptions options;
    options.strategy = config.strategy;
    options.parallel = config.parallel;
    options.deadline = deadline;
    SplitResult split = split_enumerate_stable(f, cut, options);
    out.labelings = std::move(split.combined);
    out.cut = std::move(split.cut);
    out.discarded = split.discarded;
    return out;
}

Measurement time_solve(const Framework& f, Method method, std::int64_t limit_ms,
                       const SolveConfig& config) {
    Measurement m;
    m.n = f.size();
    m.m = static_cast<long long>(f.attack_count());
    m.method = method;
    m.seed = config.strategy.seed;

    Deadline deadline{std::chrono::steady_clock::now() + std::chrono::milliseconds(limit_ms)};
    auto begin = std::chrono::steady_clock::now();
    try {
        SolveOutcome outcome = run_method(f, method, config, &deadline);
        auto end = std::chrono::steady_clock::now();
        m.elapsed_ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count();
        m.elapsed_ms = m.elapsed_ns / 1'000'000;  // below 1 ms reports as 0
        m.labeling_count = static_cast<int>(outcome.labelings.size());
        if (outcome.cut) m.k = outcome.cut->k;
    } catch (const TimeoutError&) {
        m.censored = true;
        m.elapsed_ms = limit_ms;
        m.elapsed_ns = limit_ms * 1'000'000;
        m.labeling_count = -1;  // abandoned before the count was known
    }
    return m;
}

std::optional<int> gain_percent(std::int64_t t_base, std::int64_t t_method) {
    if (t_base <= 0) return std::nullopt;
    return static_cast<int>(
        std::llround(100.0 * static_cast<double>(t_base - t_method) / static_cast<double>(t_base)));
}

std::vector<SummaryRow> aggregate(std::span<const Measurement> measurements) {
    std::map<std::pair<int, long long>, std::vector<const Measurement*>> groups;
    for (const Measurement& m : measurements) groups[{m.n, m.m}].push_back(&m);

    std::vector<SummaryRow> rows;
    for (const auto& [key, group] : groups) {
        SummaryRow row;
        row.n = key.first;
        row.m = key.second;
        row.af_type = std::to_string(key.first) + "/" + std::to_string(key.second);

        // instance -> per-method elapsed, for the per-instance gain statistic
        std::map<std::string, std::array<std::optional<std::int64_t>, 3>> by_instance;
        std::array<std::vector<const Measurement*>, 3> by_method;
        for (const Measurement* m : group) {
            by_method[static_cast<std::size_t>(m->method)].push_back(m);
            by_instance[m->instance][static_cast<std::size_t>(m->method)] = m->elapsed_ms;
        }

        std::optional<double> direct_avg;
        for (std::size_t mi = 0; mi < by_method.size(); ++mi) {
            const auto& ms = by_method[mi];
            if (ms.empty()) continue;
            MethodSummary summary;
            double total = 0;
            for (const Measurement* m : ms) {
                total += static_cast<double>(m->elapsed_ms);
                summary.censored = summary.censored || m->censored;
            }
            summary.avg_ms = total / static_cast<double>(ms.size());
            row.methods[mi] = summary;
        }
        if (row.of(Method::direct)) direct_avg = row.of(Method::direct)->avg_ms;
        if (!direct_avg)
            std::cerr << "aggregate: group " << row.af_type
                      << " has no direct measurements; gains skipped\n";

        for (Method method : {Method::split_ho, Method::split_bc}) {
            auto& summary = row.methods[static_cast<std::size_t>(method)];
            if (!summary || !direct_avg) continue;
            summary->value_gain = gain_of_averages(*direct_avg, summary->avg_ms);
            long long gain_total = 0;
            int gain_count = 0;
            for (const auto& [instance, per_method] : by_instance) {
                const auto& base = per_method[static_cast<std::size_t>(Method::direct)];
                const auto& timed = per_method[static_cast<std::size_t>(method)];
                if (!base || !timed) continue;
                if (auto gain = gain_percent(*base, *timed)) {
                    gain_total += *gain;
                    ++gain_count;
                }
            }
            if (gain_count > 0)
                summary->mean_gain = static_cast<int>(
                    std::llround(static_cast<double>(gain_total) / gain_count));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string cell_ms(const std::optional<MethodSummary>& summary) {
    if (!summary) return "";
    std::string text = std::to_string(std::llround(summary->avg_ms));
    return summary->censored ? "> " + text : text;
}

std::string cell_gain(const std::optional<MethodSummary>& summary) {
    if (!summary || !summary->mean_gain) return "";
    return std::to_string(*summary->mean_gain);
}

}  // namespace

Report render_report(std::span<const SummaryRow> rows) {
    const std::array<std::string, 6> header = {"AF type", "w/o spl. [ms]", "HO [ms]",
                                               "gain [%]", "BC [ms]",      "gain [%]"};
    std::vector<std::array<std::string, 6>> cells;
    for (const SummaryRow& row : rows)
        cells.push_back({row.af_type, cell_ms(row.of(Method::direct)),
                         cell_ms(row.of(Method::split_ho)), cell_gain(row.of(Method::split_ho)),
                         cell_ms(row.of(Method::split_bc)), cell_gain(row.of(Method::split_bc))});

    std::array<std::size_t, 6> width;
    for (std::size_t c = 0; c < 6; ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }

    std::ostringstream table;
    auto emit = [&](const std::array<std::string, 6>& row) {
        for (std::size_t c = 0; c < 6; ++c) {
            if (c > 0) table << " | ";
            table << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        table << "\n";
    };
    emit(header);
    for (const auto& row : cells) emit(row);

    std::ostringstream csv;
    csv << "af_type,method,avg_ms,censored,value_gain_pct,mean_gain_pct\n";
    for (const SummaryRow& row : rows) {
        for (Method method : {Method::direct, Method::split_ho, Method::split_bc}) {
            const auto& summary = row.of(method);
            if (!summary) continue;
            csv << row.af_type << "," << method_name(method) << ","
                << std::llround(summary->avg_ms) << "," << (summary->censored ? "true" : "false")
                << ",";
            if (summary->value_gain) csv << *summary->value_gain;
            csv << ",";
            if (summary->mean_gain) csv << *summary->mean_gain;
            csv << "\n";
        }
    }
    return {table.str(), csv.str()};
}

std::string measurements_csv(std::span<const Measurement> measurements) {
    std::ostringstream csv;
    csv << "instance,n,m,seed,method,cut_algo,k,elapsed_ms,censored,labeling_count\n";
    for (const Measurement& m : measurements) {
        csv << m.instance << "," << m.n << "," << m.m << ",";
        if (m.seed) csv << *m.seed;
        csv << "," << method_name(m.method) << ",";
        if (m.method == Method::split_ho) csv << "ho";
        if (m.method == Method::split_bc) csv << "bc";
        csv << ",";
        if (m.k) csv << *m.k;
        csv << "," << m.elapsed_ms << "," << (m.censored ? "true" : "false") << ","
            << m.labeling_count << "\n";
    }
    return csv.str();
}

}  // namespace af
