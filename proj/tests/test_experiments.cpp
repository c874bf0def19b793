#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "intershell/errors.hpp"
#include "intershell/experiments.hpp"
#include "intershell/pathcalc.hpp"
#include "intershell/textio.hpp"

using namespace intershell;
namespace fs = std::filesystem;

namespace {

const char* kTinyCampaign = R"({
  "scenario": {
    "shell_a": {"shell_id":"A","n_planes":12,"sats_per_plane":8,"altitude_km":550.0,"inclination_deg":53.0},
    "shell_b": {"shell_id":"B","n_planes":12,"sats_per_plane":10,"altitude_km":1200.0,"inclination_deg":87.9},
    "ground_stations": [
      {"gs_id":0,"name":"a","lat_deg":0.0,"lon_deg":0.0},
      {"gs_id":1,"name":"b","lat_deg":20.0,"lon_deg":-60.0},
      {"gs_id":2,"name":"c","lat_deg":-25.0,"lon_deg":120.0},
      {"gs_id":3,"name":"d","lat_deg":40.0,"lon_deg":15.0},
      {"gs_id":4,"name":"e","lat_deg":-10.0,"lon_deg":-150.0},
      {"gs_id":5,"name":"f","lat_deg":30.0,"lon_deg":80.0}
    ],
    "n_slots": 6,
    "slot_interval_s": 300.0,
    "min_elevation_deg": 10.0,
    "rng_seed": 0
  },
  "pairs": {"count": 4, "seed": 11},
  "strategies": ["dp-irc", "min-hop", "adaptive"],
  "weights": {"alpha": 0.5},
  "similarity_threshold": 0.6,
  "gs_subset_sizes": [6, 3],
  "subset_seed": 5
})";

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("intershell_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("subset_ground_stations sampling contract") {
    const std::vector<int> ids{3, 5, 8, 9, 12, 20};
    CHECK(subset_ground_stations(ids, 6, 42) == ids);  // identity at full size
    CHECK(subset_ground_stations(ids, 1, 42).size() == 1);
    CHECK(subset_ground_stations(ids, 3, 42) == subset_ground_stations(ids, 3, 42));
    const auto sub = subset_ground_stations(ids, 4, 7);
    CHECK(sub.size() == 4);
    for (size_t i = 1; i < sub.size(); ++i) CHECK(sub[i - 1] < sub[i]);
    for (int id : sub) CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK_THROWS_AS(subset_ground_stations(ids, 7, 42), ConfigError);
}

TEST_CASE("sample_pairs is deterministic and in range") {
    const ShellConfig a{"A", 72, 22, 550.0, 53.0};
    const ShellConfig b{"B", 18, 40, 1200.0, 87.9};
    const auto pairs = sample_pairs(50, 9, a, b);
    CHECK(pairs == sample_pairs(50, 9, a, b));
    CHECK(pairs.size() == 50);
    for (const auto& [src, dst] : pairs) {
        CHECK(src < 1584);
        CHECK(dst < 720);
    }
}

TEST_CASE("campaign config parsing and normalization") {
    const Campaign c = parse_campaign(kTinyCampaign, ".");
    CHECK(c.pairs.size() == 4);
    CHECK(c.strategies == std::vector<std::string>{"dp-irc", "min-hop", "adaptive"});
    CHECK(c.weights.alpha() == 0.5);
    CHECK(c.gs_subset_sizes == std::vector<int>{6, 3});
    REQUIRE(c.scenario.has_value());
    CHECK(c.scenario->ground_stations.size() == 6);

    SUBCASE("underscored strategy spellings are canonicalized") {
        std::string text = kTinyCampaign;
        text.replace(text.find("dp-irc"), 6, "dp_irc");
        CHECK(parse_campaign(text, ".").strategies[0] == "dp-irc");
    }
    SUBCASE("unknown strategies are rejected listing the valid ones") {
        std::string text = kTinyCampaign;
        text.replace(text.find("min-hop"), 7, "max-hop");
        CHECK_THROWS_WITH_AS(parse_campaign(text, "."), doctest::Contains("dp-irc"), ConfigError);
    }
    SUBCASE("missing keys are named") {
        CHECK_THROWS_WITH_AS(parse_campaign("{}", "."), doctest::Contains("scenario"), ConfigError);
    }
}

TEST_CASE("campaign run: load accounting, dominance and determinism") {
    const Campaign c = parse_campaign(kTinyCampaign, ".");
    const CampaignReport report = run_campaign(c, 2);

    // one cell per pair x strategy x subset
    CHECK(report.cells.size() == 4 * 3 * 2);

    SUBCASE("every selection is accounted: sum of loads = T x pairs per cell group") {
        for (const auto& strategy : c.strategies) {
            for (int k : c.gs_subset_sizes) {
                long long total = 0;
                for (const auto& cell : report.cells) {
                    if (cell.strategy != strategy || cell.gs_count != k) continue;
                    for (const auto& [gs_id, count] : cell.series.gs_load) total += count;
                }
                CHECK(total == 6LL * 4);
            }
        }
    }

    SUBCASE("dp-irc dominates both baselines per pair and subset") {
        for (const auto& cell : report.cells) {
            if (cell.strategy != "dp-irc") continue;
            for (const auto& other : report.cells) {
                if (other.pair_id == cell.pair_id && other.gs_count == cell.gs_count)
                    CHECK(cell.solution.cumulative_irc_scaled <= other.solution.cumulative_irc_scaled);
            }
        }
    }

    SUBCASE("aggregate rows cover every strategy and subset") {
        CHECK(report.aggregates.size() == 3 * 2);
        for (const auto& row : report.aggregates) CHECK(row.mean_cumulative_distance > 0.0);
    }

    SUBCASE("repeated runs produce byte-identical reports") {
        const CampaignReport again = run_campaign(c, 1);  // job count must not matter
        CHECK(per_slot_csv(report) == per_slot_csv(again));
        CHECK(aggregate_csv(report) == aggregate_csv(again));
    }
}

TEST_CASE("campaign outputs round-trip through the manifest") {
    const fs::path dir = temp_dir("manifest");
    const Campaign c = parse_campaign(kTinyCampaign, ".");
    run_campaign_to_dir(c, dir / "run1");
    REQUIRE(fs::exists(dir / "run1" / "manifest.json"));

    const Campaign from_manifest = load_campaign(dir / "run1" / "manifest.json");
    CHECK(from_manifest.pairs == c.pairs);
    run_campaign_to_dir(from_manifest, dir / "run2");

    CHECK(read_text_file((dir / "run1" / "per_slot.csv").string()) ==
          read_text_file((dir / "run2" / "per_slot.csv").string()));
    CHECK(read_text_file((dir / "run1" / "aggregate.csv").string()) ==
          read_text_file((dir / "run2" / "aggregate.csv").string()));
    CHECK(read_text_file((dir / "run1" / "manifest.json").string()) ==
          read_text_file((dir / "run2" / "manifest.json").string()));
}

TEST_CASE("trace-backed campaigns run from an exported trace file") {
    const fs::path dir = temp_dir("tracecamp");
    const Campaign base = parse_campaign(kTinyCampaign, ".");
    const GslTrace trace = generate_gsl_trace(*base.scenario);
    export_gsl_trace(trace, dir / "trace.csv");

    Campaign c = base;
    c.scenario.reset();
    c.trace_path = dir / "trace.csv";
    c.gs_subset_sizes = {3};
    const CampaignReport report = run_campaign(c, 2);
    CHECK(report.cells.size() == 4 * 3);
    CHECK(campaign_manifest(c, "complete").find("trace_fnv1a") != std::string::npos);
}

TEST_CASE("a failing cell flushes partial results and a failure manifest") {
    // slot 0 links only gs 0, slot 1 links only gs 1: any single-station
    // subset is unroutable in one of the slots
    const fs::path dir = temp_dir("failure");
    const std::string trace_text =
        "slot,gs_id,shell,sat_index\n"
        "0,0,A,0\n0,0,B,0\n0,1,A,1\n"
        "1,1,A,1\n1,1,B,1\n1,0,B,0\n";
    write_text_file((dir / "trace.csv").string(), trace_text);

    Campaign c;
    c.trace_path = dir / "trace.csv";
    c.shell_a = {"A", 4, 4, 550.0, 53.0};
    c.shell_b = {"B", 4, 4, 1200.0, 87.9};
    c.pairs = {{0, 0}};
    c.strategies = {"dp-irc"};
    c.gs_subset_sizes = {1};

    CHECK_THROWS_AS(run_campaign_to_dir(c, dir / "out"), UnroutableError);
    REQUIRE(fs::exists(dir / "out" / "manifest.json"));
    const std::string manifest = read_text_file((dir / "out" / "manifest.json").string());
    CHECK(manifest.find("\"status\": \"failed\"") != std::string::npos);
    CHECK(manifest.find("pair 0") != std::string::npos);
    CHECK(fs::exists(dir / "out" / "per_slot.csv"));
    CHECK(!fs::exists(dir / "out" / "aggregate.csv"));
}

TEST_CASE("bundled preset covers 60 slots with at most 165 records each") {
    const ScenarioConfig cfg = load_scenario_config(fs::path(INTERSHELL_DATA_DIR) / "starlink_oneweb.json");
    CHECK(cfg.n_slots == 60);
    CHECK(cfg.shell_a.n_planes == 72);
    CHECK(cfg.shell_a.sats_per_plane == 22);
    CHECK(cfg.shell_b.n_planes == 18);
    CHECK(cfg.shell_b.sats_per_plane == 40);
    CHECK(cfg.ground_stations.size() == 165);

    const GslTrace trace = generate_gsl_trace(cfg);
    const RoutingData data = build_routing_data(1, 159, trace, cfg.shell_a, cfg.shell_b);
    CHECK(data.size() == 60);
    for (const auto& slot : data) {
        CHECK(!slot.empty());
        CHECK(slot.size() <= 165);
    }
}
