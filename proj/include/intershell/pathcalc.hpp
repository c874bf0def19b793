#ifndef INTERSHELL_PATHCALC_HPP
#define INTERSHELL_PATHCALC_HPP

#include <map>
#include <vector>

#include "intershell/grid.hpp"
#include "intershell/scenario.hpp"

namespace intershell {

// Hop decomposition of the inter-shell path src -> e^A -> (ground) -> e^B -> dst
// through one ground station at one time slot. The ground segment itself
// contributes no hops.
struct PathRecord {
    int gs_id = 0;
    int dxa = 0;  // inter-orbit hops, shell A
    int dya = 0;  // intra-orbit hops, shell A
    int dxb = 0;  // inter-orbit hops, shell B
    int dyb = 0;  // intra-orbit hops, shell B
    int dist = 0;

    bool operator==(const PathRecord&) const = default;
};

using SlotRecords = std::vector<PathRecord>;
using RoutingData = std::vector<SlotRecords>;

// One record per fully linked ground station, ascending gs_id. Throws
// UnroutableError when no station holds links in both shells.
SlotRecords compute_slot_records(int src, int dst, const std::map<int, GslEntry>& slot_links,
                                 const ShellConfig& shell_a, const ShellConfig& shell_b);

// compute_slot_records over every slot of the trace; the slot index is
// attached to any unroutable error.
RoutingData build_routing_data(int src, int dst, const GslTrace& trace, const ShellConfig& shell_a,
                               const ShellConfig& shell_b);

}  // namespace intershell

#endif
