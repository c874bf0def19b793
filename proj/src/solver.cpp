#include "intershell/solver.hpp"

#include <algorithm>
#include <limits>

#include "intershell/errors.hpp"

namespace intershell {

namespace {

constexpr std::int64_t kInfCost = std::numeric_limits<std::int64_t>::max();

void check_routing_data(const RoutingData& routing_data) {
    if (routing_data.empty()) throw UnroutableError("routing data covers no slots");
    for (size_t t = 0; t < routing_data.size(); ++t)
        if (routing_data[t].empty())
            throw UnroutableError("no candidate ground station", static_cast<int>(t));
}

RouteSolution make_solution(std::string strategy, const RoutingData& routing_data,
                            const std::vector<int>& choice_per_slot, const Weights& w) {
    RouteSolution sol;
    sol.strategy = std::move(strategy);
    sol.weights = w;
    sol.gs_sequence.reserve(choice_per_slot.size());
    sol.records.reserve(choice_per_slot.size());
    for (size_t t = 0; t < choice_per_slot.size(); ++t) {
        const PathRecord& rec = routing_data[t][static_cast<size_t>(choice_per_slot[t])];
        sol.gs_sequence.push_back(rec.gs_id);
        sol.records.push_back(rec);
    }
    sol.cumulative_irc_scaled = cumulative_irc_scaled(sol.records, w);
    sol.cumulative_irc = static_cast<double>(sol.cumulative_irc_scaled) / Weights::kScale;
    return sol;
}

}  // namespace

DpTables dp_irc_tables(const RoutingData& routing_data, const Weights& w) {
    check_routing_data(routing_data);
    const size_t n_slots = routing_data.size();

    DpTables tables;
    tables.cost.resize(n_slots);
    tables.prev.resize(n_slots);
    for (size_t t = 0; t < n_slots; ++t) {
        tables.cost[t].assign(routing_data[t].size(), kInfCost);
        tables.prev[t].assign(routing_data[t].size(), -1);
    }

    for (size_t i = 0; i < routing_data[0].size(); ++i)
        tables.cost[0][i] = w.alpha_scaled() * routing_data[0][i].dist;

    for (size_t j = 1; j < n_slots; ++j) {
        const SlotRecords& cur = routing_data[j];
        const SlotRecords& prev_slot = routing_data[j - 1];
        for (size_t i = 0; i < cur.size(); ++i) {
            std::int64_t best = kInfCost;
            int best_prev = -1;
            for (size_t k = 0; k < prev_slot.size(); ++k) {
                const std::int64_t c =
                    tables.cost[j - 1][k] + w.irc_scaled(cur[i].dist, delta_isl(cur[i], prev_slot[k]));
                if (c < best) {
                    best = c;
                    best_prev = static_cast<int>(k);
                }
            }
            tables.cost[j][i] = best;
            tables.prev[j][i] = best_prev;
        }
    }
    return tables;
}

RouteSolution dp_irc_solve(const RoutingData& routing_data, const Weights& w) {
    const DpTables tables = dp_irc_tables(routing_data, w);
    const size_t n_slots = routing_data.size();

    const auto& last = tables.cost[n_slots - 1];
    int m = static_cast<int>(std::min_element(last.begin(), last.end()) - last.begin());

    std::vector<int> choice(n_slots, -1);
    for (size_t j = n_slots; j-- > 0;) {
        choice[j] = m;
        m = tables.prev[j][static_cast<size_t>(m)];
    }

    RouteSolution sol = make_solution("dp-irc", routing_data, choice, w);
    sol.cumulative_irc_scaled = last[static_cast<size_t>(choice[n_slots - 1])];
    sol.cumulative_irc = static_cast<double>(sol.cumulative_irc_scaled) / Weights::kScale;
    return sol;
}

RouteSolution brute_force_solve(const RoutingData& routing_data, const Weights& w,
                                std::uint64_t enumeration_cap) {
    check_routing_data(routing_data);
    const size_t n_slots = routing_data.size();

    std::uint64_t total = 1;
    for (const auto& slot : routing_data) {
        if (total > enumeration_cap / slot.size())
            throw OracleTooLargeError("sequence count exceeds enumeration cap of " +
                                      std::to_string(enumeration_cap));
        total *= slot.size();
    }

    std::vector<int> idx(n_slots, 0);
    std::vector<int> best_idx;
    std::int64_t best_cost = kInfCost;

    for (std::uint64_t seq = 0; seq < total; ++seq) {
        std::int64_t cost = w.alpha_scaled() * routing_data[0][static_cast<size_t>(idx[0])].dist;
        for (size_t t = 1; t < n_slots; ++t) {
            const PathRecord& cur = routing_data[t][static_cast<size_t>(idx[t])];
            const PathRecord& prev = routing_data[t - 1][static_cast<size_t>(idx[t - 1])];
            cost += w.irc_scaled(cur.dist, delta_isl(cur, prev));
        }
        if (cost < best_cost) {
            best_cost = cost;
            best_idx = idx;
        }
        // odometer, last slot fastest: sequences appear in lexicographic order
        for (size_t t = n_slots; t-- > 0;) {
            if (++idx[t] < static_cast<int>(routing_data[t].size())) break;
            idx[t] = 0;
        }
    }

    RouteSolution sol = make_solution("brute-force", routing_data, best_idx, w);
    return sol;
}

}  // namespace intershell
