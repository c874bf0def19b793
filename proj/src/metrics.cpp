#include "intershell/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "intershell/errors.hpp"
#include "intershell/solver.hpp"
#include "intershell/textio.hpp"

namespace intershell {

namespace {

std::int64_t quantize_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must be in [0, 1], got " + format_double(alpha));
    return std::llround(alpha * static_cast<double>(Weights::kScale));
}

}  // namespace

Weights::Weights(double alpha) : alpha_scaled_(quantize_alpha(alpha)) {}

Weights::Weights(double alpha, double beta) : alpha_scaled_(quantize_alpha(alpha)) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta must be in [0, 1], got " + format_double(beta));
    if (std::abs(alpha + beta - 1.0) > 1e-12)
        throw std::invalid_argument("alpha + beta must equal 1 within 1e-12, got " + format_double(alpha + beta));
}

int delta_isl(const PathRecord& p, const PathRecord& q) {
    return std::abs(p.dxa - q.dxa) + std::abs(p.dya - q.dya) + std::abs(p.dxb - q.dxb) +
           std::abs(p.dyb - q.dyb);
}

double irc(const PathRecord& p_t, const PathRecord& p_prev, const Weights& w) {
    return static_cast<double>(w.irc_scaled(p_t.dist, delta_isl(p_t, p_prev))) / Weights::kScale;
}

double switching_rate(int delta, int prev_total_hops) {
    if (prev_total_hops < 0) throw std::invalid_argument("prev_total_hops must be >= 0");
    if (prev_total_hops == 0)
        return delta == 0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(delta) / prev_total_hops;
}

std::int64_t cumulative_irc_scaled(const std::vector<PathRecord>& records, const Weights& w) {
    if (records.empty()) throw std::invalid_argument("record sequence must be non-empty");
    std::int64_t total = w.alpha_scaled() * records[0].dist;
    for (size_t t = 1; t < records.size(); ++t)
        total += w.irc_scaled(records[t].dist, delta_isl(records[t], records[t - 1]));
    return total;
}

double MetricSeries::mean_switching_rate() const {
    double sum = 0.0;
    int count = 0;
    for (size_t t = 1; t < per_slot_switching_rate.size(); ++t) {
        if (std::isnan(per_slot_switching_rate[t])) continue;
        sum += per_slot_switching_rate[t];
        ++count;
    }
    return count > 0 ? sum / count : 0.0;
}

MetricSeries summarize(const RouteSolution& solution) {
    const auto& records = solution.records;
    if (records.empty()) throw std::invalid_argument("solution must cover at least one slot");

    MetricSeries series;
    const size_t n = records.size();
    series.per_slot_hops.resize(n);
    series.per_slot_delta_isl.assign(n, 0);
    series.per_slot_switching_rate.assign(n, 0.0);

    for (size_t t = 0; t < n; ++t) {
        series.per_slot_hops[t] = records[t].dist;
        series.cumulative_distance += records[t].dist;
        series.gs_load[records[t].gs_id] += 1;
        if (t > 0) {
            series.per_slot_delta_isl[t] = delta_isl(records[t], records[t - 1]);
            series.per_slot_switching_rate[t] =
                switching_rate(series.per_slot_delta_isl[t], series.per_slot_hops[t - 1]);
        }
    }
    series.cumulative_irc_scaled = cumulative_irc_scaled(records, solution.weights);
    series.cumulative_irc = static_cast<double>(series.cumulative_irc_scaled) / Weights::kScale;
    return series;
}

double gs_load_variance(const std::map<int, long long>& loads, int n_stations) {
    if (n_stations < 1) throw std::invalid_argument("n_stations must be >= 1");
    if (static_cast<int>(loads.size()) > n_stations)
        throw std::invalid_argument("more load entries than stations");
    long long total = 0;
    for (const auto& [gs_id, count] : loads) {
        if (count < 0) throw std::invalid_argument("load counts must be >= 0");
        total += count;
    }
    const double mean = static_cast<double>(total) / n_stations;
    double acc = 0.0;
    for (const auto& [gs_id, count] : loads) {
        const double d = static_cast<double>(count) - mean;
        acc += d * d;
    }
    acc += static_cast<double>(n_stations - static_cast<int>(loads.size())) * mean * mean;
    return acc / n_stations;
}

}  // namespace intershell
