// intershell: generate GSL traces, solve single routes, run campaigns.
//
// Exit codes: 0 success, 1 bad arguments or config, 2 unroutable scenario,
// 3 trace parse error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "intershell/baselines.hpp"
#include "intershell/errors.hpp"
#include "intershell/experiments.hpp"
#include "intershell/metrics.hpp"
#include "intershell/pathcalc.hpp"
#include "intershell/scenario.hpp"
#include "intershell/solver.hpp"
#include "intershell/textio.hpp"

namespace {

using namespace intershell;

constexpr int kExitBadArgs = 1;
constexpr int kExitUnroutable = 2;
constexpr int kExitTraceParse = 3;

// Starlink shell 1 / OneWeb primary shell dimensions; `solve` falls back to
// these when no --shells config is given.
ShellConfig default_shell_a() { return {"A", 72, 22, 550.0, 53.0}; }
ShellConfig default_shell_b() { return {"B", 18, 40, 1200.0, 87.9}; }

int cmd_gen_trace(const std::string& config_path, const std::string& out_path) {
    ScenarioConfig cfg;
    try {
        cfg = load_scenario_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }

    GslTrace trace;
    try {
        trace = generate_gsl_trace(cfg);
    } catch (const UnroutableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnroutable;
    }

    try {
        export_gsl_trace(trace, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }

    int fully_min = trace.n_slots > 0 ? static_cast<int>(cfg.ground_stations.size()) : 0;
    int fully_max = 0;
    long long fully_total = 0, rows = 0;
    for (const auto& slot : trace.slots) {
        int fully = 0;
        for (const auto& [gs_id, entry] : slot) {
            if (entry.sat_a) ++rows;
            if (entry.sat_b) ++rows;
            if (entry.fully_linked()) ++fully;
        }
        fully_min = std::min(fully_min, fully);
        fully_max = std::max(fully_max, fully);
        fully_total += fully;
    }
    std::cout << "slots=" << trace.n_slots << " ground_stations=" << cfg.ground_stations.size()
              << " rows=" << rows << "\n"
              << "fully_linked_per_slot: min=" << fully_min << " mean="
              << format_double(static_cast<double>(fully_total) / trace.n_slots) << " max=" << fully_max
              << "\n"
              << "wrote " << out_path << "\n";
    return 0;
}

int cmd_solve(const std::string& trace_path, int src, int dst, const std::string& strategy, double alpha,
              double similarity, const std::string& out_path, const std::string& shells_path) {
    ShellConfig shell_a = default_shell_a();
    ShellConfig shell_b = default_shell_b();
    if (!shells_path.empty()) {
        try {
            const ScenarioConfig cfg = load_scenario_config(shells_path);
            shell_a = cfg.shell_a;
            shell_b = cfg.shell_b;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadArgs;
        }
    }

    GslTrace trace;
    try {
        trace = load_gsl_trace(trace_path, shell_a, shell_b);
    } catch (const UnroutableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnroutable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTraceParse;
    }

    RouteSolution solution;
    try {
        const Weights w(alpha);
        const RoutingData data = build_routing_data(src, dst, trace, shell_a, shell_b);
        if (strategy == "dp-irc")
            solution = dp_irc_solve(data, w);
        else if (strategy == "min-hop")
            solution = min_hop_route(data, w);
        else
            solution = adaptive_route(data, w, similarity);
    } catch (const UnroutableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnroutable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }

    const MetricSeries series = summarize(solution);
    std::string csv = "slot,gs_selected,hops,delta_isl,switching_rate,cumulative_irc\n";
    std::int64_t running = 0;
    for (size_t t = 0; t < series.per_slot_hops.size(); ++t) {
        running += t == 0 ? solution.weights.alpha_scaled() * series.per_slot_hops[0]
                          : solution.weights.irc_scaled(series.per_slot_hops[t], series.per_slot_delta_isl[t]);
        csv += std::to_string(t) + "," + std::to_string(solution.gs_sequence[t]) + "," +
               std::to_string(series.per_slot_hops[t]) + "," + std::to_string(series.per_slot_delta_isl[t]) +
               "," + format_double(series.per_slot_switching_rate[t]) + "," +
               format_double(static_cast<double>(running) / Weights::kScale) + "\n";
    }
    try {
        write_text_file(out_path, csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }

    std::cout << "strategy=" << solution.strategy << " slots=" << trace.n_slots
              << " mean_switching_rate=" << format_double(series.mean_switching_rate())
              << " cumulative_distance=" << series.cumulative_distance
              << " cumulative_irc=" << format_double(series.cumulative_irc) << "\n";
    return 0;
}

int cmd_campaign(const std::string& config_path, const std::string& out_dir, int jobs) {
    Campaign campaign;
    try {
        campaign = load_campaign(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }

    try {
        run_campaign_to_dir(campaign, out_dir, jobs);
    } catch (const UnroutableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnroutable;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTraceParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }

    std::cout << "campaign complete: " << campaign.pairs.size() << " pairs, " << campaign.strategies.size()
              << " strategies -> " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inter-shell LEO routing toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-trace", "generate a GSL trace CSV from a scenario config");
    std::string gen_config, gen_out;
    gen->add_option("--config", gen_config, "scenario config (JSON)")->required();
    gen->add_option("--out", gen_out, "output trace CSV path")->required();

    auto* solve = app.add_subcommand("solve", "route one satellite pair over a trace");
    std::string solve_trace, solve_strategy, solve_out, solve_shells;
    int solve_src = 0, solve_dst = 0;
    double solve_alpha = 0.5, solve_similarity = 0.6;
    solve->add_option("--trace", solve_trace, "GSL trace CSV")->required();
    solve->add_option("--src", solve_src, "source satellite index (shell A)")->required();
    solve->add_option("--dst", solve_dst, "destination satellite index (shell B)")->required();
    solve->add_option("--strategy", solve_strategy, "routing strategy")
        ->required()
        ->check(CLI::IsMember({"dp-irc", "min-hop", "adaptive"}));
    solve->add_option("--alpha", solve_alpha, "hop-count weight; beta = 1 - alpha")
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--similarity", solve_similarity, "adaptive similarity threshold")
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--out", solve_out, "per-slot CSV output path")->required();
    solve->add_option("--shells", solve_shells,
                      "scenario config supplying the shell dimensions (default: 72x22 / 18x40)");

    auto* campaign = app.add_subcommand("campaign", "run a multi-pair experiment campaign");
    std::string camp_config, camp_out;
    int camp_jobs = 0;
    campaign->add_option("--config", camp_config, "campaign config (JSON)")->required();
    campaign->add_option("--out-dir", camp_out, "output directory")->required();
    campaign->add_option("--jobs", camp_jobs, "worker threads (default: available cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadArgs;
    }

    if (gen->parsed()) return cmd_gen_trace(gen_config, gen_out);
    if (solve->parsed())
        return cmd_solve(solve_trace, solve_src, solve_dst, solve_strategy, solve_alpha, solve_similarity,
                         solve_out, solve_shells);
    return cmd_campaign(camp_config, camp_out, camp_jobs);
}
