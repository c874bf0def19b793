#ifndef INTERSHELL_BASELINES_HPP
#define INTERSHELL_BASELINES_HPP

#include "intershell/solver.hpp"

namespace intershell {

// Fewest-hop record independently per slot (lowest gs_id on ties). Weights
// only enter the post-hoc cumulative IRC used for comparisons.
RouteSolution min_hop_route(const RoutingData& routing_data, const Weights& w);

// 1 - delta_isl(p, q) / max(dist(p), dist(q)), clamped to [0, 1]; 1 when
// both dists are 0.
double path_similarity(const PathRecord& p, const PathRecord& q);

// Greedy stability baseline: keeps to candidates at least
// similarity_threshold similar to the previous choice, falling back to the
// plain shortest path when none qualifies.
RouteSolution adaptive_route(const RoutingData& routing_data, const Weights& w,
                             double similarity_threshold = 0.6);

}  // namespace intershell

#endif
