#include "intershell/pathcalc.hpp"

#include "intershell/errors.hpp"

namespace intershell {

SlotRecords compute_slot_records(int src, int dst, const std::map<int, GslEntry>& slot_links,
                                 const ShellConfig& shell_a, const ShellConfig& shell_b) {
    index_to_grid(src, shell_a);  // range checks up front
    index_to_grid(dst, shell_b);

    SlotRecords records;
    for (const auto& [gs_id, entry] : slot_links) {
        if (!entry.fully_linked()) continue;
        const HopComponents a = hop_components(src, *entry.sat_a, shell_a);
        const HopComponents b = hop_components(dst, *entry.sat_b, shell_b);
        records.push_back({gs_id, a.x, a.y, b.x, b.y, a.total() + b.total()});
    }
    if (records.empty())
        throw UnroutableError("no ground station holds links to both shells");
    return records;
}

RoutingData build_routing_data(int src, int dst, const GslTrace& trace, const ShellConfig& shell_a,
                               const ShellConfig& shell_b) {
    RoutingData data;
    data.reserve(static_cast<size_t>(trace.n_slots));
    for (int t = 0; t < trace.n_slots; ++t) {
        try {
            data.push_back(compute_slot_records(src, dst, trace.links_at(t), shell_a, shell_b));
        } catch (const UnroutableError&) {
            throw UnroutableError("no ground station holds links to both shells", t);
        }
    }
    return data;
}

}  // namespace intershell
