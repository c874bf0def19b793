#include "intershell/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "intershell/errors.hpp"

namespace intershell {

namespace {

void check_routing_data(const RoutingData& routing_data) {
    if (routing_data.empty()) throw UnroutableError("routing data covers no slots");
    for (size_t t = 0; t < routing_data.size(); ++t)
        if (routing_data[t].empty())
            throw UnroutableError("no candidate ground station", static_cast<int>(t));
}

// records are gs_id-ascending, so the first minimum is the lowest gs_id
size_t min_dist_index(const SlotRecords& slot) {
    size_t best = 0;
    for (size_t i = 1; i < slot.size(); ++i)
        if (slot[i].dist < slot[best].dist) best = i;
    return best;
}

RouteSolution finish(std::string strategy, std::vector<PathRecord> records, const Weights& w) {
    RouteSolution sol;
    sol.strategy = std::move(strategy);
    sol.weights = w;
    sol.records = std::move(records);
    sol.gs_sequence.reserve(sol.records.size());
    for (const auto& rec : sol.records) sol.gs_sequence.push_back(rec.gs_id);
    sol.cumulative_irc_scaled = cumulative_irc_scaled(sol.records, w);
    sol.cumulative_irc = static_cast<double>(sol.cumulative_irc_scaled) / Weights::kScale;
    return sol;
}

}  // namespace

RouteSolution min_hop_route(const RoutingData& routing_data, const Weights& w) {
    check_routing_data(routing_data);
    std::vector<PathRecord> records;
    records.reserve(routing_data.size());
    for (const auto& slot : routing_data) records.push_back(slot[min_dist_index(slot)]);
    return finish("min-hop", std::move(records), w);
}

double path_similarity(const PathRecord& p, const PathRecord& q) {
    const int m = std::max(p.dist, q.dist);
    if (m == 0) return 1.0;
    const double sim = 1.0 - static_cast<double>(delta_isl(p, q)) / m;
    return std::clamp(sim, 0.0, 1.0);
}

RouteSolution adaptive_route(const RoutingData& routing_data, const Weights& w,
                             double similarity_threshold) {
    if (!(similarity_threshold >= 0.0 && similarity_threshold <= 1.0))
        throw std::invalid_argument("similarity_threshold must be in [0, 1]");
    check_routing_data(routing_data);

    std::vector<PathRecord> records;
    records.reserve(routing_data.size());
    records.push_back(routing_data[0][min_dist_index(routing_data[0])]);

    for (size_t t = 1; t < routing_data.size(); ++t) {
        const SlotRecords& slot = routing_data[t];
        const PathRecord& prev = records.back();
        const PathRecord* chosen = nullptr;
        for (const auto& rec : slot) {
            if (path_similarity(rec, prev) < similarity_threshold) continue;
            if (!chosen || rec.dist < chosen->dist) chosen = &rec;
        }
        if (!chosen) chosen = &slot[min_dist_index(slot)];  // threshold failed: shortest path
        records.push_back(*chosen);
    }
    return finish("adaptive", std::move(records), w);
}

}  // namespace intershell
