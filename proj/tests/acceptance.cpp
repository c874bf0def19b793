// Acceptance suite: end-to-end checks of the library's contracts, printed
// one line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "intershell/baselines.hpp"
#include "intershell/errors.hpp"
#include "intershell/experiments.hpp"
#include "intershell/grid.hpp"
#include "intershell/metrics.hpp"
#include "intershell/pathcalc.hpp"
#include "intershell/scenario.hpp"
#include "intershell/solver.hpp"
#include "intershell/textio.hpp"
#include "support/synthetic.hpp"
#include "support/torus_oracle.hpp"

using namespace intershell;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = INTERSHELL_DATA_DIR;

fs::path scratch_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "intershell_acceptance";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

PathRecord rec(int gs_id, int dxa, int dya, int dxb, int dyb) {
    return {gs_id, dxa, dya, dxb, dyb, dxa + dya + dxb + dyb};
}

RoutingData worked_instance() {
    return {{rec(0, 1, 1, 1, 1), rec(1, 2, 2, 1, 1)},
            {rec(0, 3, 3, 2, 2), rec(1, 2, 2, 1, 1)}};
}

Campaign preset_campaign(const std::string& scenario_file, std::vector<std::string> strategies,
                         int n_pairs) {
    Campaign c;
    c.scenario = load_scenario_config(kDataDir / scenario_file);
    c.shell_a = c.scenario->shell_a;
    c.shell_b = c.scenario->shell_b;
    c.pair_sampling = PairSampling{n_pairs, 20240601};
    c.pairs = sample_pairs(n_pairs, 20240601, c.shell_a, c.shell_b);
    c.strategies = std::move(strategies);
    c.weights = Weights(0.5);
    c.similarity_threshold = 0.6;
    c.gs_subset_sizes = {165};
    c.subset_seed = 7;
    return c;
}

// ---- criterion 1: closed-form hops equal BFS on the explicit torus ----

bool criterion_hop_oracle(std::string& detail) {
    long long checked = 0;
    for (int nx = 1; nx <= 12; ++nx) {
        for (int ny = 1; ny <= 12; ++ny) {
            const ShellConfig shell{"A", nx, ny, 550.0, 53.0};
            const int n = nx * ny;
            for (int s1 = 0; s1 < n; ++s1) {
                const auto dist = oracle::bfs_torus_all(nx, ny, s1);
                for (int s2 = 0; s2 < n; ++s2) {
                    if (hop_components(s1, s2, shell).total() != dist[static_cast<size_t>(s2)]) {
                        detail = "mismatch in " + std::to_string(nx) + "x" + std::to_string(ny);
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    for (const auto& [nx, ny] : {std::pair{72, 22}, std::pair{18, 40}}) {
        const ShellConfig shell{"A", nx, ny, 550.0, 53.0};
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 2000; ++i) {
            const int s1 = static_cast<int>(rng() % static_cast<std::uint64_t>(nx * ny));
            const int s2 = static_cast<int>(rng() % static_cast<std::uint64_t>(nx * ny));
            if (hop_components(s1, s2, shell).total() != oracle::bfs_torus_hops(nx, ny, s1, s2)) {
                detail = "mismatch in " + std::to_string(nx) + "x" + std::to_string(ny);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " pairs exact";
    return true;
}

// ---- criterion 2: dp optimum equals the exhaustive oracle ----

bool criterion_dp_optimality(std::string& detail) {
    const RouteSolution worked = dp_irc_solve(worked_instance(), Weights(0.5));
    if (worked.cumulative_irc_scaled != 6 * Weights::kScale) {
        detail = "worked example gave " + format_double(worked.cumulative_irc);
        return false;
    }
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        std::mt19937_64 rng(seed);
        const int n_slots = 1 + static_cast<int>(rng() % 6);
        const int n_gs = 2 + static_cast<int>(rng() % 3);
        const RoutingData data =
            synthetic::random_routing_data(rng, n_slots, n_gs, /*allow_gaps=*/seed % 3 == 0);
        const Weights w(static_cast<double>(rng() % 1001) / 1000.0);
        if (dp_irc_solve(data, w).cumulative_irc_scaled !=
            brute_force_solve(data, w).cumulative_irc_scaled) {
            detail = "divergence at seed " + std::to_string(seed);
            return false;
        }
    }
    detail = "worked example 6.0 + 500 seeded instances exact";
    return true;
}

// ---- criterion 3: dominance and distance chain on synthetic scenarios ----

bool criterion_dominance(std::string& detail) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::mt19937_64 rng(seed);
        const int n_gs = seed % 2 == 0 ? 16 : 8;
        const RoutingData data = synthetic::random_routing_data(rng, 60, n_gs);
        const Weights w(0.5);
        const RouteSolution dp = dp_irc_solve(data, w);
        const RouteSolution mh = min_hop_route(data, w);
        const RouteSolution ad = adaptive_route(data, w, 0.6);
        if (dp.cumulative_irc_scaled > mh.cumulative_irc_scaled ||
            dp.cumulative_irc_scaled > ad.cumulative_irc_scaled) {
            detail = "IRC dominance broken at seed " + std::to_string(seed);
            return false;
        }
        const long long dp_dist = summarize(dp).cumulative_distance;
        const long long mh_dist = summarize(mh).cumulative_distance;
        const long long ad_dist = summarize(ad).cumulative_distance;
        if (!(mh_dist <= dp_dist && dp_dist <= ad_dist)) {
            detail = "distance chain broken at seed " + std::to_string(seed);
            return false;
        }
    }
    detail = "200 scenarios, IRC dominance and distance chain exact";
    return true;
}

// ---- criterion 4: qualitative metric ordering on the bundled preset ----

struct CampaignStats {
    std::map<std::string, double> agg_rate;
    std::map<std::string, double> agg_dist;
    std::map<int, std::map<std::string, double>> pair_rate;
    std::map<int, std::map<std::string, double>> pair_dist;
    int n_pairs = 0;
};

CampaignStats campaign_stats(const CampaignReport& report) {
    CampaignStats stats;
    for (const auto& row : report.aggregates) {
        stats.agg_rate[row.strategy] = row.mean_switching_rate;
        stats.agg_dist[row.strategy] = row.mean_cumulative_distance;
    }
    for (const auto& cell : report.cells) {
        stats.pair_rate[cell.pair_id][cell.strategy] = cell.series.mean_switching_rate();
        stats.pair_dist[cell.pair_id][cell.strategy] =
            static_cast<double>(cell.series.cumulative_distance);
        stats.n_pairs = std::max(stats.n_pairs, cell.pair_id + 1);
    }
    return stats;
}

bool criterion_metric_ordering(std::string& detail, double& dp_rate_out) {
    const Campaign c = preset_campaign("starlink_oneweb.json", {"dp-irc", "min-hop", "adaptive"}, 50);
    const CampaignStats stats = campaign_stats(run_campaign(c));
    dp_rate_out = stats.agg_rate.at("dp-irc");

    int rate_dp_lt_ad = 0, rate_ad_lt_mh = 0, dist_mh_lt_dp = 0;
    for (const auto& [pair_id, rates] : stats.pair_rate) {
        if (rates.at("dp-irc") < rates.at("adaptive")) ++rate_dp_lt_ad;
        if (rates.at("adaptive") < rates.at("min-hop")) ++rate_ad_lt_mh;
        if (stats.pair_dist.at(pair_id).at("min-hop") < stats.pair_dist.at(pair_id).at("dp-irc"))
            ++dist_mh_lt_dp;
    }
    const int need = (stats.n_pairs * 8 + 9) / 10;  // >= 80%
    const bool agg_rate_ok = stats.agg_rate.at("dp-irc") < stats.agg_rate.at("adaptive") &&
                             stats.agg_rate.at("adaptive") < stats.agg_rate.at("min-hop");
    const bool agg_dist_ok = stats.agg_dist.at("min-hop") < stats.agg_dist.at("dp-irc");
    const bool pairs_ok = rate_dp_lt_ad >= need && rate_ad_lt_mh >= need && dist_mh_lt_dp >= need;

    std::ostringstream ss;
    ss << "agg rate dp=" << format_double(stats.agg_rate.at("dp-irc"))
       << " ad=" << format_double(stats.agg_rate.at("adaptive"))
       << " mh=" << format_double(stats.agg_rate.at("min-hop")) << "; pairs dp<ad " << rate_dp_lt_ad << "/"
       << stats.n_pairs << ", ad<mh " << rate_ad_lt_mh << "/" << stats.n_pairs << ", dist mh<dp "
       << dist_mh_lt_dp << "/" << stats.n_pairs;
    detail = ss.str();
    return agg_rate_ok && agg_dist_ok && pairs_ok;
}

// ---- criterion 5: degeneracy identities ----

bool criterion_degeneracies(std::string& detail) {
    // alpha = 1 collapses dp to per-slot minimization; threshold 0 collapses
    // adaptive to min-hop. Both must match min-hop's sequence exactly.
    auto check = [](const RoutingData& data) {
        const RouteSolution mh = min_hop_route(data, Weights(1.0));
        if (dp_irc_solve(data, Weights(1.0)).gs_sequence != mh.gs_sequence) return false;
        return adaptive_route(data, Weights(1.0), 0.0).gs_sequence == mh.gs_sequence;
    };
    if (!check(worked_instance())) {
        detail = "failed on the worked instance";
        return false;
    }
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::mt19937_64 rng(seed * 31);
        const RoutingData data = synthetic::random_routing_data(rng, 1 + static_cast<int>(rng() % 20),
                                                                2 + static_cast<int>(rng() % 7), true);
        if (!check(data)) {
            detail = "failed at seed " + std::to_string(seed);
            return false;
        }
    }
    // and on routing data from the bundled scenario
    const ScenarioConfig cfg = load_scenario_config(kDataDir / "starlink_oneweb.json");
    const GslTrace trace = generate_gsl_trace(cfg);
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 10; ++i) {
        const int src = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.shell_a.total_sats()));
        const int dst = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.shell_b.total_sats()));
        if (!check(build_routing_data(src, dst, trace, cfg.shell_a, cfg.shell_b))) {
            detail = "failed on generated trace pair " + std::to_string(i);
            return false;
        }
    }
    detail = "sequence identity on fixture, 100 random instances, 10 trace pairs";
    return true;
}

// ---- criterion 6: scalability band on the doubled preset ----

bool criterion_scalability(std::string& detail, double normal_dp_rate) {
    const Campaign c = preset_campaign("starlink_oneweb_2x.json", {"dp-irc"}, 50);
    const CampaignStats stats = campaign_stats(run_campaign(c));
    const double rate_2x = stats.agg_rate.at("dp-irc");
    std::ostringstream ss;
    ss << "dp rate normal=" << format_double(normal_dp_rate) << " doubled=" << format_double(rate_2x);
    detail = ss.str();
    if (normal_dp_rate <= 0.0) return false;
    const double ratio = rate_2x / normal_dp_rate;
    return ratio >= 0.5 && ratio <= 2.0;
}

// ---- criterion 7: determinism and byte formats ----

bool criterion_determinism(std::string& detail) {
    const fs::path dir = scratch_dir() / "det";

    Campaign c = preset_campaign("starlink_oneweb.json", {"dp-irc", "min-hop", "adaptive"}, 3);
    c.gs_subset_sizes = {55};
    run_campaign_to_dir(c, dir / "run1");
    const Campaign from_manifest = load_campaign(dir / "run1" / "manifest.json");
    run_campaign_to_dir(from_manifest, dir / "run2");
    run_campaign_to_dir(from_manifest, dir / "run3");
    for (const char* name : {"per_slot.csv", "aggregate.csv", "manifest.json"}) {
        const std::string first = read_text_file((dir / "run1" / name).string());
        if (first != read_text_file((dir / "run2" / name).string()) ||
            first != read_text_file((dir / "run3" / name).string())) {
            detail = std::string("campaign rerun differs in ") + name;
            return false;
        }
    }

    // trace export -> import -> export must reproduce the bytes
    const ScenarioConfig cfg = load_scenario_config(kDataDir / "starlink_oneweb.json");
    ScenarioConfig small = cfg;
    small.n_slots = 10;
    const GslTrace trace = generate_gsl_trace(small);
    const fs::path trace_path = dir / "trace.csv";
    export_gsl_trace(trace, trace_path);
    const std::string bytes = read_text_file(trace_path.string());
    const GslTrace reloaded = load_gsl_trace(trace_path, cfg.shell_a, cfg.shell_b);
    const fs::path trace_path2 = dir / "trace2.csv";
    export_gsl_trace(reloaded, trace_path2);
    if (read_text_file(trace_path2.string()) != bytes) {
        detail = "trace round-trip changed bytes";
        return false;
    }
    detail = "campaign reruns and trace round-trip byte-identical";
    return true;
}

int run_criterion(int number, const std::string& name, double budget_s,
                  const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool pass = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_s) {
        pass = false;
        detail += " [over budget]";
    }
    std::printf("[%s] %d. %s (%.1fs): %s\n", pass ? "PASS" : "FAIL", number, name.c_str(), elapsed,
                detail.c_str());
    std::fflush(stdout);
    return pass ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    double dp_rate_normal = 0.0;

    failures += run_criterion(1, "closed-form hops equal BFS oracle", 30.0, criterion_hop_oracle);
    failures += run_criterion(2, "dp optimum equals exhaustive oracle", 60.0, criterion_dp_optimality);
    failures += run_criterion(3, "IRC dominance and distance chain", 120.0, criterion_dominance);
    failures += run_criterion(4, "metric ordering on the bundled preset", 300.0,
                              [&](std::string& d) { return criterion_metric_ordering(d, dp_rate_normal); });
    failures += run_criterion(5, "degeneracy identities", 30.0, criterion_degeneracies);
    failures += run_criterion(6, "scalability band on the doubled preset", 600.0,
                              [&](std::string& d) { return criterion_scalability(d, dp_rate_normal); });
    failures += run_criterion(7, "determinism and byte formats", 120.0, criterion_determinism);

    std::printf("%d/7 criteria passed\n", 7 - failures);
    return failures == 0 ? 0 : 1;
}
