#ifndef INTERSHELL_METRICS_HPP
#define INTERSHELL_METRICS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "intershell/pathcalc.hpp"

namespace intershell {

struct RouteSolution;  // solver.hpp

// Hop-count / switching-cost weight pair with alpha + beta = 1. Alpha is
// quantized to units of 1e-9 at construction so that every cost the solver
// and the metrics accumulate is an exact integer multiple of 1e-9: tie
// detection and optimality comparisons never see floating-point drift.
class Weights {
public:
    static constexpr std::int64_t kScale = 1'000'000'000;

    explicit Weights(double alpha);
    Weights(double alpha, double beta);

    double alpha() const { return static_cast<double>(alpha_scaled_) / kScale; }
    double beta() const { return static_cast<double>(kScale - alpha_scaled_) / kScale; }
    std::int64_t alpha_scaled() const { return alpha_scaled_; }
    std::int64_t beta_scaled() const { return kScale - alpha_scaled_; }

    // alpha*dist + beta*delta in integer 1e-9 units
    std::int64_t irc_scaled(int dist, int delta) const {
        return alpha_scaled_ * dist + (kScale - alpha_scaled_) * delta;
    }

    bool operator==(const Weights&) const = default;

private:
    std::int64_t alpha_scaled_;
};

// Summed absolute change of the four hop components between the paths of
// consecutive slots.
int delta_isl(const PathRecord& p, const PathRecord& q);

// alpha * dist(p_t) + beta * delta_isl(p_t, p_prev)
double irc(const PathRecord& p_t, const PathRecord& p_prev, const Weights& w);

// delta / prev_total_hops; 0/0 is 0, d/0 with d > 0 is NaN (undefined-rate
// sentinel, excluded from averages).
double switching_rate(int delta, int prev_total_hops);

// Exact cumulative cost of a record sequence: alpha*dist[0] then the IRC of
// every consecutive transition, in 1e-9 units.
std::int64_t cumulative_irc_scaled(const std::vector<PathRecord>& records, const Weights& w);

struct MetricSeries {
    std::vector<int> per_slot_hops;
    std::vector<int> per_slot_delta_isl;          // [0] = 0
    std::vector<double> per_slot_switching_rate;  // [0] = 0
    long long cumulative_distance = 0;
    double cumulative_irc = 0.0;
    std::int64_t cumulative_irc_scaled = 0;
    std::map<int, long long> gs_load;

    // mean over slots 1..T-1, NaN sentinels excluded; 0 when nothing qualifies
    double mean_switching_rate() const;
};

MetricSeries summarize(const RouteSolution& solution);

// Population variance of per-station selection counts over n_stations
// stations; stations absent from `loads` count as 0.
double gs_load_variance(const std::map<int, long long>& loads, int n_stations);

}  // namespace intershell

#endif
