#include "intershell/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

#include "intershell/errors.hpp"
#include "intershell/pathcalc.hpp"
#include "intershell/textio.hpp"

namespace intershell {

namespace {

using nlohmann::json;

const std::vector<std::string> kStrategyNames = {"dp-irc", "min-hop", "adaptive"};

std::string canonical_strategy(std::string name) {
    std::replace(name.begin(), name.end(), '_', '-');
    for (const auto& s : kStrategyNames)
        if (name == s) return s;
    std::string valid;
    for (const auto& s : kStrategyNames) valid += (valid.empty() ? "" : ", ") + s;
    throw ConfigError("unknown strategy '" + name + "' (valid: " + valid + ")");
}

json shell_to_json(const ShellConfig& s) {
    return json{{"shell_id", s.shell_id},
                {"n_planes", s.n_planes},
                {"sats_per_plane", s.sats_per_plane},
                {"altitude_km", s.altitude_km},
                {"inclination_deg", s.inclination_deg}};
}

ShellConfig shell_from_json(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ConfigError(ctx + ": must be an object");
    ShellConfig s;
    s.shell_id = j.at("shell_id").get<std::string>();
    s.n_planes = j.at("n_planes").get<int>();
    s.sats_per_plane = j.at("sats_per_plane").get<int>();
    s.altitude_km = j.at("altitude_km").get<double>();
    s.inclination_deg = j.at("inclination_deg").get<double>();
    validate_shell(s);
    return s;
}

json scenario_to_json(const ScenarioConfig& cfg) {
    json stations = json::array();
    for (const auto& gs : cfg.ground_stations)
        stations.push_back(json{{"gs_id", gs.gs_id}, {"name", gs.name}, {"lat_deg", gs.lat_deg},
                                {"lon_deg", gs.lon_deg}});
    return json{{"shell_a", shell_to_json(cfg.shell_a)},
                {"shell_b", shell_to_json(cfg.shell_b)},
                {"ground_stations", stations},
                {"n_slots", cfg.n_slots},
                {"slot_interval_s", cfg.slot_interval_s},
                {"min_elevation_deg", cfg.min_elevation_deg},
                {"rng_seed", cfg.rng_seed}};
}

void validate_campaign(const Campaign& c) {
    if (!c.scenario && !c.trace_path) throw ConfigError("campaign: needs a scenario or a trace path");
    validate_shell(c.shell_a);
    validate_shell(c.shell_b);
    if (c.pairs.empty()) throw ConfigError("campaign: pair count must be >= 1");
    for (const auto& [src, dst] : c.pairs) {
        if (src < 0 || src >= c.shell_a.total_sats())
            throw ConfigError("campaign: src " + std::to_string(src) + " out of range for shell '" +
                              c.shell_a.shell_id + "'");
        if (dst < 0 || dst >= c.shell_b.total_sats())
            throw ConfigError("campaign: dst " + std::to_string(dst) + " out of range for shell '" +
                              c.shell_b.shell_id + "'");
    }
    if (c.strategies.empty()) throw ConfigError("campaign: strategies must be non-empty");
    if (!(c.similarity_threshold >= 0.0 && c.similarity_threshold <= 1.0))
        throw ConfigError("campaign: similarity_threshold must be in [0, 1]");
    for (int k : c.gs_subset_sizes)
        if (k < 1) throw ConfigError("campaign: gs_subset_sizes entries must be >= 1");
}

RouteSolution solve_with(const std::string& strategy, const RoutingData& data, const Campaign& c) {
    if (strategy == "dp-irc") return dp_irc_solve(data, c.weights);
    if (strategy == "min-hop") return min_hop_route(data, c.weights);
    return adaptive_route(data, c.weights, c.similarity_threshold);
}

std::vector<int> trace_gs_universe(const GslTrace& trace) {
    std::set<int> ids;
    for (const auto& slot : trace.slots)
        for (const auto& [gs_id, entry] : slot) ids.insert(gs_id);
    return {ids.begin(), ids.end()};
}

GslTrace filter_trace(const GslTrace& trace, const std::vector<int>& keep_ids) {
    GslTrace out;
    out.n_slots = trace.n_slots;
    out.slot_interval_s = trace.slot_interval_s;
    out.slots.resize(trace.slots.size());
    const std::set<int> keep(keep_ids.begin(), keep_ids.end());
    for (size_t t = 0; t < trace.slots.size(); ++t)
        for (const auto& [gs_id, entry] : trace.slots[t])
            if (keep.count(gs_id)) out.slots[t].emplace(gs_id, entry);
    return out;
}

struct RunOutcome {
    std::vector<CellResult> cells;  // completed cells, deterministic order
    std::exception_ptr error;       // first failure by work-item order
};

RunOutcome run_cells(const Campaign& c, const GslTrace& trace, int jobs) {
    const std::vector<int> universe = trace_gs_universe(trace);

    std::vector<int> subset_sizes = c.gs_subset_sizes;
    if (subset_sizes.empty()) subset_sizes.push_back(static_cast<int>(universe.size()));
    for (int k : subset_sizes)
        if (k > static_cast<int>(universe.size()))
            throw ConfigError("campaign: subset size " + std::to_string(k) + " exceeds station count " +
                              std::to_string(universe.size()));

    std::vector<GslTrace> subset_traces;
    subset_traces.reserve(subset_sizes.size());
    for (int k : subset_sizes)
        subset_traces.push_back(filter_trace(trace, subset_ground_stations(universe, k, c.subset_seed)));

    // work item = (pair, subset); strategies share the item's routing data
    const size_t n_items = c.pairs.size() * subset_sizes.size();
    std::vector<std::vector<CellResult>> item_cells(n_items);
    std::vector<std::exception_ptr> item_errors(n_items);
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};

    auto worker = [&]() {
        for (;;) {
            const size_t item = next.fetch_add(1);
            if (item >= n_items || failed.load()) return;
            const size_t pair_id = item / subset_sizes.size();
            const size_t subset_idx = item % subset_sizes.size();
            const auto [src, dst] = c.pairs[pair_id];
            try {
                const RoutingData data =
                    build_routing_data(src, dst, subset_traces[subset_idx], c.shell_a, c.shell_b);
                for (const auto& strategy : c.strategies) {
                    CellResult cell;
                    cell.pair_id = static_cast<int>(pair_id);
                    cell.src = src;
                    cell.dst = dst;
                    cell.strategy = strategy;
                    cell.gs_count = subset_sizes[subset_idx];
                    cell.solution = solve_with(strategy, data, c);
                    cell.series = summarize(cell.solution);
                    item_cells[item].push_back(std::move(cell));
                }
            } catch (const std::exception& e) {
                item_errors[item] = std::make_exception_ptr(UnroutableError(
                    "pair " + std::to_string(pair_id) + " (src " + std::to_string(src) + ", dst " +
                    std::to_string(dst) + ", " + std::to_string(subset_sizes[subset_idx]) +
                    " stations): " + e.what()));
                failed.store(true);
            }
        }
    };

    int n_workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1) n_workers = 1;
    n_workers = std::min<int>(n_workers, static_cast<int>(n_items));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_workers));
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    RunOutcome outcome;
    for (size_t item = 0; item < n_items; ++item) {
        if (item_errors[item] && !outcome.error) outcome.error = item_errors[item];
    }
    // reorder pair-major / strategy / subset for stable reports
    for (size_t pair_id = 0; pair_id < c.pairs.size(); ++pair_id)
        for (size_t s = 0; s < c.strategies.size(); ++s)
            for (size_t subset_idx = 0; subset_idx < subset_sizes.size(); ++subset_idx) {
                const size_t item = pair_id * subset_sizes.size() + subset_idx;
                if (s < item_cells[item].size()) outcome.cells.push_back(item_cells[item][s]);
            }
    return outcome;
}

std::vector<AggregateRow> aggregate_cells(const Campaign& c, const std::vector<CellResult>& cells) {
    std::vector<int> subset_sizes = c.gs_subset_sizes;
    std::vector<AggregateRow> rows;
    std::set<int> sizes_seen;
    for (const auto& cell : cells) sizes_seen.insert(cell.gs_count);
    if (subset_sizes.empty()) subset_sizes.assign(sizes_seen.begin(), sizes_seen.end());

    for (const auto& strategy : c.strategies) {
        for (int k : subset_sizes) {
            AggregateRow row;
            row.strategy = strategy;
            row.gs_count = k;
            std::map<int, long long> loads;
            int n_pairs = 0;
            for (const auto& cell : cells) {
                if (cell.strategy != strategy || cell.gs_count != k) continue;
                ++n_pairs;
                row.mean_switching_rate += cell.series.mean_switching_rate();
                row.mean_cumulative_distance += static_cast<double>(cell.series.cumulative_distance);
                for (const auto& [gs_id, count] : cell.series.gs_load) loads[gs_id] += count;
            }
            if (n_pairs == 0) continue;
            row.mean_switching_rate /= n_pairs;
            row.mean_cumulative_distance /= n_pairs;
            row.gs_load_variance = gs_load_variance(loads, k);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

GslTrace obtain_trace(const Campaign& c) {
    if (c.scenario) return generate_gsl_trace(*c.scenario);
    return load_gsl_trace(*c.trace_path, c.shell_a, c.shell_b);
}

}  // namespace

std::vector<int> subset_ground_stations(const std::vector<int>& gs_ids, int k, std::uint64_t seed) {
    if (k < 0 || k > static_cast<int>(gs_ids.size()))
        throw ConfigError("subset size " + std::to_string(k) + " exceeds station count " +
                          std::to_string(gs_ids.size()));
    if (k == static_cast<int>(gs_ids.size())) return gs_ids;

    // partial Fisher-Yates; raw mt19937_64 modulo keeps the draw reproducible
    // across standard libraries
    std::vector<int> pool = gs_ids;
    std::mt19937_64 rng(seed);
    std::vector<int> picked;
    picked.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const size_t j = static_cast<size_t>(i) + rng() % (pool.size() - static_cast<size_t>(i));
        std::swap(pool[static_cast<size_t>(i)], pool[j]);
        picked.push_back(pool[static_cast<size_t>(i)]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<std::pair<int, int>> sample_pairs(int count, std::uint64_t seed, const ShellConfig& shell_a,
                                              const ShellConfig& shell_b) {
    if (count < 1) throw ConfigError("pair sampling count must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int src = static_cast<int>(rng() % static_cast<std::uint64_t>(shell_a.total_sats()));
        const int dst = static_cast<int>(rng() % static_cast<std::uint64_t>(shell_b.total_sats()));
        pairs.emplace_back(src, dst);
    }
    return pairs;
}

namespace {

Campaign campaign_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ConfigError("campaign config: top level must be an object");

    Campaign c;

    auto it = j.find("scenario");
    if (it == j.end()) throw ConfigError("campaign config: missing key 'scenario'");
    if (it->is_object()) {
        c.scenario = parse_scenario_config(it->dump(), base_dir);
    } else if (it->is_string()) {
        const std::filesystem::path p = base_dir / it->get<std::string>();
        if (p.extension() == ".csv") {
            c.trace_path = std::filesystem::absolute(p);
        } else {
            c.scenario = load_scenario_config(p);
        }
    } else {
        throw ConfigError("campaign config: 'scenario' must be an object or a path string");
    }

    if (c.scenario) {
        c.shell_a = c.scenario->shell_a;
        c.shell_b = c.scenario->shell_b;
    } else {
        if (!j.contains("shell_a") || !j.contains("shell_b"))
            throw ConfigError("campaign config: trace-backed campaigns need 'shell_a' and 'shell_b'");
        c.shell_a = shell_from_json(j.at("shell_a"), "shell_a");
        c.shell_b = shell_from_json(j.at("shell_b"), "shell_b");
    }

    it = j.find("pairs");
    if (it == j.end()) throw ConfigError("campaign config: missing key 'pairs'");
    if (it->is_array()) {
        for (const auto& item : *it) {
            if (!item.is_array() || item.size() != 2)
                throw ConfigError("campaign config: each pair must be [src, dst]");
            c.pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
        }
        if (j.contains("pair_sampling")) {
            const json& ps = j.at("pair_sampling");
            c.pair_sampling = PairSampling{ps.at("count").get<int>(), ps.at("seed").get<std::uint64_t>()};
        }
    } else if (it->is_object()) {
        PairSampling ps;
        ps.count = it->at("count").get<int>();
        ps.seed = it->at("seed").get<std::uint64_t>();
        c.pair_sampling = ps;
        c.pairs = sample_pairs(ps.count, ps.seed, c.shell_a, c.shell_b);
    } else {
        throw ConfigError("campaign config: 'pairs' must be an array or {count, seed}");
    }

    it = j.find("strategies");
    if (it == j.end()) throw ConfigError("campaign config: missing key 'strategies'");
    for (const auto& s : *it) {
        const std::string name = canonical_strategy(s.get<std::string>());
        if (std::find(c.strategies.begin(), c.strategies.end(), name) == c.strategies.end())
            c.strategies.push_back(name);
    }

    if (j.contains("weights")) {
        const json& w = j.at("weights");
        const double alpha = w.at("alpha").get<double>();
        c.weights = w.contains("beta") ? Weights(alpha, w.at("beta").get<double>()) : Weights(alpha);
    }
    if (j.contains("similarity_threshold")) c.similarity_threshold = j.at("similarity_threshold").get<double>();
    if (j.contains("gs_subset_sizes"))
        for (const auto& k : j.at("gs_subset_sizes")) c.gs_subset_sizes.push_back(k.get<int>());
    if (j.contains("subset_seed")) c.subset_seed = j.at("subset_seed").get<std::uint64_t>();

    validate_campaign(c);
    return c;
}

}  // namespace

Campaign parse_campaign(const std::string& text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("campaign config: ") + e.what());
    }
    try {
        return campaign_from_json(j, base_dir);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("campaign config: ") + e.what());
    }
}

Campaign load_campaign(const std::filesystem::path& path) {
    try {
        return parse_campaign(read_text_file(path.string()), path.parent_path());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

CampaignReport run_campaign(const Campaign& campaign, int jobs) {
    validate_campaign(campaign);
    const GslTrace trace = obtain_trace(campaign);
    RunOutcome outcome = run_cells(campaign, trace, jobs);
    if (outcome.error) std::rethrow_exception(outcome.error);
    CampaignReport report;
    report.cells = std::move(outcome.cells);
    report.aggregates = aggregate_cells(campaign, report.cells);
    return report;
}

std::string per_slot_csv(const CampaignReport& report) {
    std::string out = "pair_id,strategy,gs_count,slot,gs_selected,hops,delta_isl,switching_rate,cumulative_irc\n";
    for (const auto& cell : report.cells) {
        std::int64_t running = 0;
        for (size_t t = 0; t < cell.series.per_slot_hops.size(); ++t) {
            running += t == 0 ? cell.solution.weights.alpha_scaled() * cell.series.per_slot_hops[0]
                              : cell.solution.weights.irc_scaled(cell.series.per_slot_hops[t],
                                                                 cell.series.per_slot_delta_isl[t]);
            out += std::to_string(cell.pair_id) + "," + cell.strategy + "," + std::to_string(cell.gs_count) +
                   "," + std::to_string(t) + "," + std::to_string(cell.solution.gs_sequence[t]) + "," +
                   std::to_string(cell.series.per_slot_hops[t]) + "," +
                   std::to_string(cell.series.per_slot_delta_isl[t]) + "," +
                   format_double(cell.series.per_slot_switching_rate[t]) + "," +
                   format_double(static_cast<double>(running) / Weights::kScale) + "\n";
        }
    }
    return out;
}

std::string aggregate_csv(const CampaignReport& report) {
    std::string out = "strategy,gs_count,mean_switching_rate,mean_cumulative_distance,gs_load_variance\n";
    for (const auto& row : report.aggregates)
        out += row.strategy + "," + std::to_string(row.gs_count) + "," + format_double(row.mean_switching_rate) +
               "," + format_double(row.mean_cumulative_distance) + "," + format_double(row.gs_load_variance) +
               "\n";
    return out;
}

std::string campaign_manifest(const Campaign& campaign, const std::string& status, const std::string& error) {
    json j;
    if (campaign.scenario) {
        j["scenario"] = scenario_to_json(*campaign.scenario);
    } else {
        j["scenario"] = campaign.trace_path->string();
        j["shell_a"] = shell_to_json(campaign.shell_a);
        j["shell_b"] = shell_to_json(campaign.shell_b);
        j["trace_fnv1a"] = fnv1a_hash(read_text_file(campaign.trace_path->string()));
    }
    json pairs = json::array();
    for (const auto& [src, dst] : campaign.pairs) pairs.push_back(json::array({src, dst}));
    j["pairs"] = pairs;
    if (campaign.pair_sampling)
        j["pair_sampling"] = json{{"count", campaign.pair_sampling->count}, {"seed", campaign.pair_sampling->seed}};
    j["strategies"] = campaign.strategies;
    j["weights"] = json{{"alpha", campaign.weights.alpha()}, {"beta", campaign.weights.beta()}};
    j["similarity_threshold"] = campaign.similarity_threshold;
    if (!campaign.gs_subset_sizes.empty()) j["gs_subset_sizes"] = campaign.gs_subset_sizes;
    j["subset_seed"] = campaign.subset_seed;
    j["status"] = status;
    if (!error.empty()) j["error"] = error;
    return j.dump(2) + "\n";
}

void run_campaign_to_dir(const Campaign& campaign, const std::filesystem::path& out_dir, int jobs) {
    validate_campaign(campaign);
    std::filesystem::create_directories(out_dir);

    const GslTrace trace = obtain_trace(campaign);
    RunOutcome outcome = run_cells(campaign, trace, jobs);

    CampaignReport report;
    report.cells = std::move(outcome.cells);

    if (outcome.error) {
        std::string message;
        try {
            std::rethrow_exception(outcome.error);
        } catch (const std::exception& e) {
            message = e.what();
        }
        write_text_file((out_dir / "per_slot.csv").string(), per_slot_csv(report));
        write_text_file((out_dir / "manifest.json").string(), campaign_manifest(campaign, "failed", message));
        std::rethrow_exception(outcome.error);
    }

    report.aggregates = aggregate_cells(campaign, report.cells);
    write_text_file((out_dir / "per_slot.csv").string(), per_slot_csv(report));
    write_text_file((out_dir / "aggregate.csv").string(), aggregate_csv(report));
    write_text_file((out_dir / "manifest.json").string(), campaign_manifest(campaign, "complete"));
}

}  // namespace intershell
