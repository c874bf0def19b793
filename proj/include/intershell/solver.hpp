#ifndef INTERSHELL_SOLVER_HPP
#define INTERSHELL_SOLVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "intershell/metrics.hpp"
#include "intershell/pathcalc.hpp"

namespace intershell {

struct RouteSolution {
    std::string strategy;
    std::vector<int> gs_sequence;      // chosen gs_id per slot
    std::vector<PathRecord> records;   // records[t].gs_id == gs_sequence[t]
    double cumulative_irc = 0.0;
    std::int64_t cumulative_irc_scaled = 0;  // exact, units of 1/Weights::kScale
    Weights weights{0.5};
};

// Slot-major cost/backpointer tables of the dynamic program. cost[j][i] is
// the cheapest cumulative cost (1e-9 units) of any length-(j+1) ground
// station sequence ending at candidate i of slot j; prev[j][i] is the
// candidate index in slot j-1 that achieved it (-1 in slot 0).
struct DpTables {
    std::vector<std::vector<std::int64_t>> cost;
    std::vector<std::vector<int>> prev;
};

DpTables dp_irc_tables(const RoutingData& routing_data, const Weights& w);

// Globally optimal ground station sequence under the cumulative IRC.
// Strict-< updates: ties keep the earliest-indexed predecessor and the
// earliest-indexed final state, so runs are reproducible.
RouteSolution dp_irc_solve(const RoutingData& routing_data, const Weights& w);

// Exhaustive oracle: enumerates every sequence (lexicographic order, first
// minimum kept, i.e. ties go to the lexicographically smallest sequence).
// Throws OracleTooLargeError when the sequence count exceeds the cap.
RouteSolution brute_force_solve(const RoutingData& routing_data, const Weights& w,
                                std::uint64_t enumeration_cap = 1'000'000);

}  // namespace intershell

#endif
