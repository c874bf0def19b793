#ifndef INTERSHELL_EXPERIMENTS_HPP
#define INTERSHELL_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intershell/baselines.hpp"
#include "intershell/metrics.hpp"
#include "intershell/scenario.hpp"
#include "intershell/solver.hpp"

namespace intershell {

struct PairSampling {
    int count = 0;
    std::uint64_t seed = 0;
};

// A multi-pair, multi-strategy experiment over one scenario (generated or
// ingested trace), optionally repeated on sampled ground-station subsets.
struct Campaign {
    std::optional<ScenarioConfig> scenario;            // generator-backed campaigns
    std::optional<std::filesystem::path> trace_path;   // trace-backed campaigns
    ShellConfig shell_a;
    ShellConfig shell_b;
    std::vector<std::pair<int, int>> pairs;            // resolved (src in A, dst in B)
    std::optional<PairSampling> pair_sampling;         // provenance when pairs were sampled
    std::vector<std::string> strategies;               // canonical {dp-irc, min-hop, adaptive}
    Weights weights{0.5};
    double similarity_threshold = 0.6;
    std::vector<int> gs_subset_sizes;                  // empty: full station set only
    std::uint64_t subset_seed = 0;
};

Campaign load_campaign(const std::filesystem::path& path);
Campaign parse_campaign(const std::string& text, const std::filesystem::path& base_dir);

// Deterministic uniform sample of k ids without replacement, ascending;
// k == |gs_ids| returns the list unchanged.
std::vector<int> subset_ground_stations(const std::vector<int>& gs_ids, int k, std::uint64_t seed);

std::vector<std::pair<int, int>> sample_pairs(int count, std::uint64_t seed, const ShellConfig& shell_a,
                                              const ShellConfig& shell_b);

struct CellResult {
    int pair_id = 0;
    int src = 0;
    int dst = 0;
    std::string strategy;
    int gs_count = 0;
    RouteSolution solution;
    MetricSeries series;
};

struct AggregateRow {
    std::string strategy;
    int gs_count = 0;
    double mean_switching_rate = 0.0;
    double mean_cumulative_distance = 0.0;
    double gs_load_variance = 0.0;
};

struct CampaignReport {
    std::vector<CellResult> cells;        // pair-major, then strategy, then subset
    std::vector<AggregateRow> aggregates; // strategy-major, then subset
};

// jobs <= 0 means one worker per available core. Cell errors are rethrown
// annotated with the failing pair.
CampaignReport run_campaign(const Campaign& campaign, int jobs = 0);

std::string per_slot_csv(const CampaignReport& report);
std::string aggregate_csv(const CampaignReport& report);
std::string campaign_manifest(const Campaign& campaign, const std::string& status,
                              const std::string& error = "");

// Writes per_slot.csv, aggregate.csv and manifest.json into out_dir. On a
// mid-run cell failure the completed cells are flushed with a manifest of
// status "failed" before the error is rethrown.
void run_campaign_to_dir(const Campaign& campaign, const std::filesystem::path& out_dir, int jobs = 0);

}  // namespace intershell

#endif
