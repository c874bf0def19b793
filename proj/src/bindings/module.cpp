#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "intershell/baselines.hpp"
#include "intershell/errors.hpp"
#include "intershell/experiments.hpp"
#include "intershell/grid.hpp"
#include "intershell/metrics.hpp"
#include "intershell/pathcalc.hpp"
#include "intershell/scenario.hpp"
#include "intershell/solver.hpp"

namespace py = pybind11;
using namespace intershell;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Inter-shell LEO routing: +Grid hop arithmetic, GSL scenarios, the "
              "IRC dynamic program and its baselines.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "TraceParseError", PyExc_ValueError);
    py::register_exception<UnroutableError>(m, "UnroutableError", PyExc_RuntimeError);
    py::register_exception<OracleTooLargeError>(m, "OracleTooLargeError", PyExc_RuntimeError);

    py::class_<ShellConfig>(m, "ShellConfig")
        .def(py::init([](std::string shell_id, int n_planes, int sats_per_plane, double altitude_km,
                         double inclination_deg) {
                 ShellConfig s{std::move(shell_id), n_planes, sats_per_plane, altitude_km, inclination_deg};
                 validate_shell(s);
                 return s;
             }),
             py::arg("shell_id"), py::arg("n_planes"), py::arg("sats_per_plane"), py::arg("altitude_km"),
             py::arg("inclination_deg"))
        .def_readonly("shell_id", &ShellConfig::shell_id)
        .def_readonly("n_planes", &ShellConfig::n_planes)
        .def_readonly("sats_per_plane", &ShellConfig::sats_per_plane)
        .def_readonly("altitude_km", &ShellConfig::altitude_km)
        .def_readonly("inclination_deg", &ShellConfig::inclination_deg)
        .def("total_sats", &ShellConfig::total_sats)
        .def("__repr__", [](const ShellConfig& s) {
            std::ostringstream ss;
            ss << "ShellConfig('" << s.shell_id << "', " << s.n_planes << "x" << s.sats_per_plane << ", "
               << s.altitude_km << " km, " << s.inclination_deg << " deg)";
            return ss.str();
        });

    py::class_<GridCoord>(m, "GridCoord")
        .def_readonly("x", &GridCoord::x)
        .def_readonly("y", &GridCoord::y)
        .def("__repr__", [](const GridCoord& c) {
            return "GridCoord(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")";
        });

    m.def("index_to_grid", &index_to_grid, py::arg("sat_index"), py::arg("shell"));
    m.def("ring_hops", &ring_hops, py::arg("a"), py::arg("b"), py::arg("ring_size"));
    m.def(
        "hop_components",
        [](int s1, int s2, const ShellConfig& shell) {
            const HopComponents h = hop_components(s1, s2, shell);
            return py::make_tuple(h.x, h.y);
        },
        py::arg("s1"), py::arg("s2"), py::arg("shell"));
    m.def(
        "total_hops",
        [](int s1, int s2, const ShellConfig& shell) { return hop_components(s1, s2, shell).total(); },
        py::arg("s1"), py::arg("s2"), py::arg("shell"));

    py::class_<GroundStation>(m, "GroundStation")
        .def(py::init([](int gs_id, std::string name, double lat_deg, double lon_deg) {
                 return GroundStation{gs_id, std::move(name), lat_deg, lon_deg};
             }),
             py::arg("gs_id"), py::arg("name"), py::arg("lat_deg"), py::arg("lon_deg"))
        .def_readonly("gs_id", &GroundStation::gs_id)
        .def_readonly("name", &GroundStation::name)
        .def_readonly("lat_deg", &GroundStation::lat_deg)
        .def_readonly("lon_deg", &GroundStation::lon_deg);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init([](ShellConfig shell_a, ShellConfig shell_b, std::vector<GroundStation> stations,
                         int n_slots, double slot_interval_s, double min_elevation_deg, std::uint64_t rng_seed) {
                 ScenarioConfig cfg{std::move(shell_a), std::move(shell_b), std::move(stations),
                                    n_slots,           slot_interval_s,    min_elevation_deg, rng_seed};
                 validate_scenario(cfg);
                 return cfg;
             }),
             py::arg("shell_a"), py::arg("shell_b"), py::arg("ground_stations"), py::arg("n_slots"),
             py::arg("slot_interval_s") = 300.0, py::arg("min_elevation_deg") = 25.0, py::arg("rng_seed") = 0)
        .def_readonly("shell_a", &ScenarioConfig::shell_a)
        .def_readonly("shell_b", &ScenarioConfig::shell_b)
        .def_readonly("ground_stations", &ScenarioConfig::ground_stations)
        .def_readonly("n_slots", &ScenarioConfig::n_slots)
        .def_readonly("slot_interval_s", &ScenarioConfig::slot_interval_s)
        .def_readonly("min_elevation_deg", &ScenarioConfig::min_elevation_deg)
        .def_readonly("rng_seed", &ScenarioConfig::rng_seed);

    py::class_<GslTrace>(m, "GslTrace")
        .def_readonly("n_slots", &GslTrace::n_slots)
        .def_readonly("slot_interval_s", &GslTrace::slot_interval_s)
        .def(
            "links",
            [](const GslTrace& trace, int slot) {
                py::dict out;
                for (const auto& [gs_id, entry] : trace.links_at(slot))
                    out[py::int_(gs_id)] = py::make_tuple(entry.sat_a, entry.sat_b);
                return out;
            },
            py::arg("slot"), "Per-station (sat_a, sat_b) links of one slot; missing links are None.");

    m.def(
        "propagate_shell",
        [](const ShellConfig& shell, double time_s) {
            std::vector<std::tuple<double, double, double>> out;
            for (const auto& p : propagate_shell(shell, time_s)) out.emplace_back(p.x, p.y, p.z);
            return out;
        },
        py::arg("shell"), py::arg("time_s"), "Earth-fixed satellite positions (km), indexed by satellite.");
    m.def("generate_gsl_trace", &generate_gsl_trace, py::arg("config"));
    m.def("load_gsl_trace", &load_gsl_trace, py::arg("path"), py::arg("shell_a"), py::arg("shell_b"));
    m.def("export_gsl_trace", &export_gsl_trace, py::arg("trace"), py::arg("path"));
    m.def("load_scenario_config", &load_scenario_config, py::arg("path"));

    py::class_<PathRecord>(m, "PathRecord")
        .def(py::init([](int gs_id, int dxa, int dya, int dxb, int dyb) {
                 return PathRecord{gs_id, dxa, dya, dxb, dyb, dxa + dya + dxb + dyb};
             }),
             py::arg("gs_id"), py::arg("dxa"), py::arg("dya"), py::arg("dxb"), py::arg("dyb"))
        .def_readonly("gs_id", &PathRecord::gs_id)
        .def_readonly("dxa", &PathRecord::dxa)
        .def_readonly("dya", &PathRecord::dya)
        .def_readonly("dxb", &PathRecord::dxb)
        .def_readonly("dyb", &PathRecord::dyb)
        .def_readonly("dist", &PathRecord::dist)
        .def("__repr__", [](const PathRecord& r) {
            std::ostringstream ss;
            ss << "PathRecord(gs=" << r.gs_id << ", " << r.dxa << "," << r.dya << "," << r.dxb << "," << r.dyb
               << ", dist=" << r.dist << ")";
            return ss.str();
        });

    m.def(
        "compute_slot_records",
        [](int src, int dst, const GslTrace& trace, int slot, const ShellConfig& a, const ShellConfig& b) {
            return compute_slot_records(src, dst, trace.links_at(slot), a, b);
        },
        py::arg("src"), py::arg("dst"), py::arg("trace"), py::arg("slot"), py::arg("shell_a"),
        py::arg("shell_b"));
    m.def("build_routing_data", &build_routing_data, py::arg("src"), py::arg("dst"), py::arg("trace"),
          py::arg("shell_a"), py::arg("shell_b"));

    py::class_<Weights>(m, "Weights")
        .def(py::init<double>(), py::arg("alpha"))
        .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
        .def_property_readonly("alpha", &Weights::alpha)
        .def_property_readonly("beta", &Weights::beta)
        .def("__repr__", [](const Weights& w) {
            return "Weights(alpha=" + std::to_string(w.alpha()) + ", beta=" + std::to_string(w.beta()) + ")";
        });

    m.def("delta_isl", &delta_isl, py::arg("p"), py::arg("q"));
    m.def("irc", &irc, py::arg("p_t"), py::arg("p_prev"), py::arg("weights"));
    m.def("switching_rate", &switching_rate, py::arg("delta"), py::arg("prev_total_hops"));
    m.def("gs_load_variance", &gs_load_variance, py::arg("loads"), py::arg("n_stations"));
    m.def("path_similarity", &path_similarity, py::arg("p"), py::arg("q"));

    py::class_<MetricSeries>(m, "MetricSeries")
        .def_readonly("per_slot_hops", &MetricSeries::per_slot_hops)
        .def_readonly("per_slot_delta_isl", &MetricSeries::per_slot_delta_isl)
        .def_readonly("per_slot_switching_rate", &MetricSeries::per_slot_switching_rate)
        .def_readonly("cumulative_distance", &MetricSeries::cumulative_distance)
        .def_readonly("cumulative_irc", &MetricSeries::cumulative_irc)
        .def_readonly("gs_load", &MetricSeries::gs_load)
        .def("mean_switching_rate", &MetricSeries::mean_switching_rate);

    m.def("summarize", &summarize, py::arg("solution"));

    py::class_<RouteSolution>(m, "RouteSolution")
        .def_readonly("strategy", &RouteSolution::strategy)
        .def_readonly("gs_sequence", &RouteSolution::gs_sequence)
        .def_readonly("records", &RouteSolution::records)
        .def_readonly("cumulative_irc", &RouteSolution::cumulative_irc)
        .def_readonly("weights", &RouteSolution::weights)
        .def("__repr__", [](const RouteSolution& s) {
            return "RouteSolution(" + s.strategy + ", " + std::to_string(s.gs_sequence.size()) +
                   " slots, irc=" + std::to_string(s.cumulative_irc) + ")";
        });

    m.def("dp_irc_solve", &dp_irc_solve, py::arg("routing_data"), py::arg("weights"));
    m.def("brute_force_solve", &brute_force_solve, py::arg("routing_data"), py::arg("weights"),
          py::arg("enumeration_cap") = 1'000'000);
    m.def("min_hop_route", &min_hop_route, py::arg("routing_data"), py::arg("weights"));
    m.def("adaptive_route", &adaptive_route, py::arg("routing_data"), py::arg("weights"),
          py::arg("similarity_threshold") = 0.6);

    m.def("subset_ground_stations", &subset_ground_stations, py::arg("gs_ids"), py::arg("k"), py::arg("seed"));
    m.def(
        "run_campaign",
        [](const std::filesystem::path& config, const std::filesystem::path& out_dir, int jobs) {
            run_campaign_to_dir(load_campaign(config), out_dir, jobs);
        },
        py::arg("config"), py::arg("out_dir"), py::arg("jobs") = 0,
        "Run a campaign config and write per_slot.csv, aggregate.csv and manifest.json.");
}
