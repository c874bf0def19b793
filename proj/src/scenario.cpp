#include "intershell/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "intershell/errors.hpp"
#include "intershell/textio.hpp"

namespace intershell {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// reproducible tie-break jitter, <= 1e-9 rad expressed in degrees
double tie_jitter_deg(std::uint64_t seed, int slot, int gs_id, char shell_tag, int sat) {
    std::uint64_t h = seed;
    h = splitmix64(h ^ static_cast<std::uint64_t>(slot));
    h = splitmix64(h ^ static_cast<std::uint64_t>(gs_id));
    h = splitmix64(h ^ static_cast<std::uint64_t>(shell_tag));
    h = splitmix64(h ^ static_cast<std::uint64_t>(sat));
    const double unit = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0,1)
    return unit * 1e-9 * kDegPerRad;
}

std::optional<int> pick_best_visible(const std::vector<Vec3>& sats, const Vec3& gs_pos,
                                     double min_elevation_deg, std::uint64_t seed, int slot,
                                     int gs_id, char shell_tag) {
    std::optional<int> best;
    double best_score = -1e9;
    for (int s = 0; s < static_cast<int>(sats.size()); ++s) {
        const double el = elevation_deg(sats[s], gs_pos);
        if (el < min_elevation_deg) continue;
        double score = el;
        if (seed != 0) score += tie_jitter_deg(seed, slot, gs_id, shell_tag, s);
        if (!best || score > best_score) {
            best = s;
            best_score = score;
        }
    }
    return best;
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

void validate_scenario(const ScenarioConfig& cfg) {
    validate_shell(cfg.shell_a);
    validate_shell(cfg.shell_b);
    if (cfg.ground_stations.empty()) throw ConfigError("ground_stations: list must be non-empty");
    std::set<int> seen;
    for (const auto& gs : cfg.ground_stations) {
        if (gs.gs_id < 0)
            throw ConfigError("ground_stations: gs_id must be non-negative, got " + std::to_string(gs.gs_id));
        if (!seen.insert(gs.gs_id).second)
            throw ConfigError("ground_stations: duplicate gs_id " + std::to_string(gs.gs_id));
        if (gs.lat_deg < -90.0 || gs.lat_deg > 90.0)
            throw ConfigError("ground_stations: lat_deg out of [-90, 90] for gs " + std::to_string(gs.gs_id));
        if (gs.lon_deg < -180.0 || gs.lon_deg >= 180.0)
            throw ConfigError("ground_stations: lon_deg out of [-180, 180) for gs " + std::to_string(gs.gs_id));
    }
    if (cfg.n_slots < 1) throw ConfigError("n_slots: must be >= 1, got " + std::to_string(cfg.n_slots));
    if (cfg.slot_interval_s < 0.0)
        throw ConfigError("slot_interval_s: must be >= 0, got " + format_double(cfg.slot_interval_s));
}

std::vector<Vec3> propagate_shell(const ShellConfig& shell, double time_s) {
    validate_shell(shell);
    const double r = kEarthRadiusKm + shell.altitude_km;
    const double omega = std::sqrt(kMuKm3PerS2 / (r * r * r));
    const double inc = shell.inclination_deg / kDegPerRad;
    const double cos_i = std::cos(inc), sin_i = std::sin(inc);
    const double earth_angle = kEarthRotationRadPerS * time_s;

    std::vector<Vec3> positions(static_cast<size_t>(shell.total_sats()));
    for (int p = 0; p < shell.n_planes; ++p) {
        // fold Earth rotation into the node angle: ECEF = Rz(-earth_angle) * ECI
        const double node = 2.0 * std::numbers::pi * p / shell.n_planes - earth_angle;
        const double cos_n = std::cos(node), sin_n = std::sin(node);
        for (int q = 0; q < shell.sats_per_plane; ++q) {
            const double u = 2.0 * std::numbers::pi * q / shell.sats_per_plane + omega * time_s;
            const double xo = r * std::cos(u);
            const double yo = r * std::sin(u) * cos_i;
            const double zo = r * std::sin(u) * sin_i;
            positions[static_cast<size_t>(p) * shell.sats_per_plane + q] = {
                cos_n * xo - sin_n * yo, sin_n * xo + cos_n * yo, zo};
        }
    }
    return positions;
}

Vec3 ground_station_ecef(const GroundStation& gs) {
    const double lat = gs.lat_deg / kDegPerRad;
    const double lon = gs.lon_deg / kDegPerRad;
    return {kEarthRadiusKm * std::cos(lat) * std::cos(lon), kEarthRadiusKm * std::cos(lat) * std::sin(lon),
            kEarthRadiusKm * std::sin(lat)};
}

double elevation_deg(const Vec3& sat_pos, const Vec3& gs_pos) {
    const Vec3 d{sat_pos.x - gs_pos.x, sat_pos.y - gs_pos.y, sat_pos.z - gs_pos.z};
    const double dn = norm(d);
    const double gn = norm(gs_pos);
    const double sin_el = dot(d, gs_pos) / (dn * gn);
    return std::asin(std::clamp(sin_el, -1.0, 1.0)) * kDegPerRad;
}

GslTrace generate_gsl_trace(const ScenarioConfig& cfg) {
    validate_scenario(cfg);

    std::vector<Vec3> gs_pos;
    gs_pos.reserve(cfg.ground_stations.size());
    for (const auto& gs : cfg.ground_stations) gs_pos.push_back(ground_station_ecef(gs));

    GslTrace trace;
    trace.n_slots = cfg.n_slots;
    trace.slot_interval_s = cfg.slot_interval_s;
    trace.slots.resize(static_cast<size_t>(cfg.n_slots));

    for (int t = 0; t < cfg.n_slots; ++t) {
        const double time_s = cfg.slot_interval_s * t;
        const auto sats_a = propagate_shell(cfg.shell_a, time_s);
        const auto sats_b = propagate_shell(cfg.shell_b, time_s);
        auto& slot = trace.slots[static_cast<size_t>(t)];
        for (size_t i = 0; i < cfg.ground_stations.size(); ++i) {
            const int gs_id = cfg.ground_stations[i].gs_id;
            GslEntry entry;
            entry.sat_a = pick_best_visible(sats_a, gs_pos[i], cfg.min_elevation_deg, cfg.rng_seed, t, gs_id, 'A');
            entry.sat_b = pick_best_visible(sats_b, gs_pos[i], cfg.min_elevation_deg, cfg.rng_seed, t, gs_id, 'B');
            if (entry.sat_a || entry.sat_b) slot.emplace(gs_id, entry);
        }
    }

    validate_trace(trace, cfg.shell_a, cfg.shell_b);
    return trace;
}

void validate_trace(const GslTrace& trace, const ShellConfig& shell_a, const ShellConfig& shell_b) {
    if (trace.n_slots < 1) throw ConfigError("trace: n_slots must be >= 1");
    if (static_cast<int>(trace.slots.size()) != trace.n_slots)
        throw ConfigError("trace: slot table size does not match n_slots");
    if (trace.slot_interval_s < 0.0) throw ConfigError("trace: slot_interval_s must be >= 0");
    for (int t = 0; t < trace.n_slots; ++t) {
        bool any_fully_linked = false;
        for (const auto& [gs_id, entry] : trace.slots[static_cast<size_t>(t)]) {
            if (entry.sat_a && (*entry.sat_a < 0 || *entry.sat_a >= shell_a.total_sats()))
                throw ConfigError("trace: satellite index " + std::to_string(*entry.sat_a) +
                                  " out of range for shell '" + shell_a.shell_id + "' at slot " + std::to_string(t));
            if (entry.sat_b && (*entry.sat_b < 0 || *entry.sat_b >= shell_b.total_sats()))
                throw ConfigError("trace: satellite index " + std::to_string(*entry.sat_b) +
                                  " out of range for shell '" + shell_b.shell_id + "' at slot " + std::to_string(t));
            any_fully_linked = any_fully_linked || entry.fully_linked();
        }
        if (!any_fully_linked)
            throw UnroutableError("no ground station holds links to both shells", t);
    }
}

GslTrace parse_gsl_trace(const std::string& text, const ShellConfig& shell_a, const ShellConfig& shell_b,
                         double slot_interval_s) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError("empty trace file", 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "slot,gs_id,shell,sat_index")
        throw ParseError("expected header 'slot,gs_id,shell,sat_index', got '" + line + "'", line_no);

    struct Row {
        int slot, gs_id, sat;
        char shell;
    };
    std::map<std::pair<int, int>, GslEntry> cells;  // (slot, gs_id) -> entry
    int max_slot = -1;
    std::set<int> slots_seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4) throw ParseError("expected 4 fields, got " + std::to_string(fields.size()), line_no);

        const long long slot = parse_int_field(fields[0], "slot", line_no);
        const long long gs_id = parse_int_field(fields[1], "gs_id", line_no);
        const std::string& shell = fields[2];
        const long long sat = parse_int_field(fields[3], "sat_index", line_no);

        if (slot < 0) throw ParseError("slot must be non-negative", line_no);
        if (gs_id < 0) throw ParseError("gs_id must be non-negative", line_no);
        if (shell != "A" && shell != "B") throw ParseError("shell must be 'A' or 'B', got '" + shell + "'", line_no);

        const ShellConfig& sc = (shell == "A") ? shell_a : shell_b;
        if (sat < 0 || sat >= sc.total_sats())
            throw ParseError("sat_index " + std::to_string(sat) + " out of range for shell '" + sc.shell_id +
                                 "' (valid 0.." + std::to_string(sc.total_sats() - 1) + ")",
                             line_no);

        auto& entry = cells[{static_cast<int>(slot), static_cast<int>(gs_id)}];
        auto& side = (shell == "A") ? entry.sat_a : entry.sat_b;
        if (side.has_value())
            throw ParseError("duplicate entry for slot " + std::to_string(slot) + ", gs " + std::to_string(gs_id) +
                                 ", shell " + shell,
                             line_no);
        side = static_cast<int>(sat);
        max_slot = std::max(max_slot, static_cast<int>(slot));
        slots_seen.insert(static_cast<int>(slot));
    }

    if (max_slot < 0) throw ParseError("trace has no data rows", line_no);
    for (int t = 0; t <= max_slot; ++t)
        if (!slots_seen.count(t))
            throw ParseError("slots must be 0-based consecutive integers; slot " + std::to_string(t) + " missing");

    GslTrace trace;
    trace.n_slots = max_slot + 1;
    trace.slot_interval_s = slot_interval_s;
    trace.slots.resize(static_cast<size_t>(trace.n_slots));
    for (const auto& [key, entry] : cells) trace.slots[static_cast<size_t>(key.first)].emplace(key.second, entry);

    validate_trace(trace, shell_a, shell_b);
    return trace;
}

GslTrace load_gsl_trace(const std::filesystem::path& path, const ShellConfig& shell_a,
                        const ShellConfig& shell_b) {
    return parse_gsl_trace(read_text_file(path.string()), shell_a, shell_b);
}

std::string export_gsl_trace_string(const GslTrace& trace) {
    std::string out = "slot,gs_id,shell,sat_index\n";
    for (int t = 0; t < trace.n_slots; ++t) {
        for (const auto& [gs_id, entry] : trace.slots[static_cast<size_t>(t)]) {
            if (entry.sat_a)
                out += std::to_string(t) + "," + std::to_string(gs_id) + ",A," + std::to_string(*entry.sat_a) + "\n";
            if (entry.sat_b)
                out += std::to_string(t) + "," + std::to_string(gs_id) + ",B," + std::to_string(*entry.sat_b) + "\n";
        }
    }
    return out;
}

void export_gsl_trace(const GslTrace& trace, const std::filesystem::path& path) {
    write_text_file(path.string(), export_gsl_trace_string(trace));
}

std::vector<GroundStation> load_ground_stations_csv(const std::filesystem::path& path) {
    std::istringstream in(read_text_file(path.string()));
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError("empty ground station file", 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "gs_id,name,lat_deg,lon_deg")
        throw ParseError("expected header 'gs_id,name,lat_deg,lon_deg', got '" + line + "'", line_no);

    std::vector<GroundStation> stations;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4) throw ParseError("expected 4 fields, got " + std::to_string(fields.size()), line_no);
        GroundStation gs;
        gs.gs_id = static_cast<int>(parse_int_field(fields[0], "gs_id", line_no));
        gs.name = fields[1];
        gs.lat_deg = parse_double_field(fields[2], "lat_deg", line_no);
        gs.lon_deg = parse_double_field(fields[3], "lon_deg", line_no);
        stations.push_back(std::move(gs));
    }
    return stations;
}

namespace {

using nlohmann::json;

const json& require_key(const json& j, const std::string& key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError(ctx + ": missing key '" + key + "'");
    return *it;
}

double as_number(const json& j, const std::string& key, const std::string& ctx) {
    const json& v = require_key(j, key, ctx);
    if (!v.is_number()) throw ConfigError(ctx + ": key '" + key + "' must be a number");
    return v.get<double>();
}

int as_int(const json& j, const std::string& key, const std::string& ctx) {
    const json& v = require_key(j, key, ctx);
    if (!v.is_number_integer()) throw ConfigError(ctx + ": key '" + key + "' must be an integer");
    return v.get<int>();
}

ShellConfig parse_shell(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ConfigError(ctx + ": must be an object");
    ShellConfig shell;
    shell.shell_id = require_key(j, "shell_id", ctx).get<std::string>();
    shell.n_planes = as_int(j, "n_planes", ctx);
    shell.sats_per_plane = as_int(j, "sats_per_plane", ctx);
    shell.altitude_km = as_number(j, "altitude_km", ctx);
    shell.inclination_deg = as_number(j, "inclination_deg", ctx);
    validate_shell(shell);
    return shell;
}

GroundStation parse_station(const json& j, const std::string& ctx) {
    GroundStation gs;
    gs.gs_id = as_int(j, "gs_id", ctx);
    gs.name = require_key(j, "name", ctx).get<std::string>();
    gs.lat_deg = as_number(j, "lat_deg", ctx);
    gs.lon_deg = as_number(j, "lon_deg", ctx);
    return gs;
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("scenario config: top level must be an object");

    ScenarioConfig cfg;
    cfg.shell_a = parse_shell(require_key(j, "shell_a", "scenario config"), "shell_a");
    cfg.shell_b = parse_shell(require_key(j, "shell_b", "scenario config"), "shell_b");

    const json& gs = require_key(j, "ground_stations", "scenario config");
    if (gs.is_string()) {
        cfg.ground_stations = load_ground_stations_csv(base_dir / gs.get<std::string>());
    } else if (gs.is_array()) {
        for (const auto& item : gs) cfg.ground_stations.push_back(parse_station(item, "ground_stations"));
    } else {
        throw ConfigError("ground_stations: must be an array or a CSV path string");
    }

    cfg.n_slots = as_int(j, "n_slots", "scenario config");
    if (j.contains("slot_interval_s")) cfg.slot_interval_s = as_number(j, "slot_interval_s", "scenario config");
    if (j.contains("min_elevation_deg")) cfg.min_elevation_deg = as_number(j, "min_elevation_deg", "scenario config");
    if (j.contains("rng_seed")) {
        const json& v = j.at("rng_seed");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ConfigError("scenario config: key 'rng_seed' must be a non-negative integer");
        cfg.rng_seed = v.get<std::uint64_t>();
    }

    validate_scenario(cfg);
    return cfg;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
    return parse_scenario_config(read_text_file(path.string()), path.parent_path());
}

}  // namespace intershell
