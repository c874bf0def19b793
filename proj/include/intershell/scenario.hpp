#ifndef INTERSHELL_SCENARIO_HPP
#define INTERSHELL_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intershell/grid.hpp"

namespace intershell {

constexpr double kEarthRadiusKm = 6371.0;
constexpr double kMuKm3PerS2 = 398600.4418;
constexpr double kEarthRotationRadPerS = 7.2921159e-5;

struct GroundStation {
    int gs_id = 0;
    std::string name;
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

// Per-slot GSL assignment of one ground station: at most one satellite
// per shell. Routing needs both shells linked.
struct GslEntry {
    std::optional<int> sat_a;
    std::optional<int> sat_b;
    bool fully_linked() const { return sat_a.has_value() && sat_b.has_value(); }
};

struct GslTrace {
    int n_slots = 0;
    double slot_interval_s = 300.0;
    std::vector<std::map<int, GslEntry>> slots;  // slot -> (gs_id -> entry), gs_id ascending

    const std::map<int, GslEntry>& links_at(int slot) const { return slots.at(slot); }
};

struct ScenarioConfig {
    ShellConfig shell_a;
    ShellConfig shell_b;
    std::vector<GroundStation> ground_stations;
    int n_slots = 1;
    double slot_interval_s = 300.0;
    double min_elevation_deg = 25.0;
    std::uint64_t rng_seed = 0;
};

void validate_scenario(const ScenarioConfig& cfg);

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

// Earth-fixed positions (km) of every satellite of the shell at elapsed
// time time_s, on idealized circular orbits. Index in the returned vector
// is the satellite index.
std::vector<Vec3> propagate_shell(const ShellConfig& shell, double time_s);

// Spherical-earth ECEF position of a ground station (km).
Vec3 ground_station_ecef(const GroundStation& gs);

// Elevation of the satellite above the station's local horizon, degrees.
double elevation_deg(const Vec3& sat_pos, const Vec3& gs_pos);

// Stand-in GSL assignment: per slot, station and shell pick the visible
// satellite with maximum elevation (ties to the lowest index; rng_seed > 0
// adds reproducible sub-nanoradian jitter before the comparison).
GslTrace generate_gsl_trace(const ScenarioConfig& cfg);

// CSV schema (LF, header required): slot,gs_id,shell,sat_index with shell in {A,B}.
GslTrace load_gsl_trace(const std::filesystem::path& path, const ShellConfig& shell_a,
                        const ShellConfig& shell_b);
GslTrace parse_gsl_trace(const std::string& text, const ShellConfig& shell_a,
                         const ShellConfig& shell_b, double slot_interval_s = 300.0);

std::string export_gsl_trace_string(const GslTrace& trace);
void export_gsl_trace(const GslTrace& trace, const std::filesystem::path& path);

// Enforces the trace invariants; names the first offending slot.
void validate_trace(const GslTrace& trace, const ShellConfig& shell_a, const ShellConfig& shell_b);

// JSON document keyed exactly like ScenarioConfig; ground_stations may be an
// inline array or the path of a stations CSV (gs_id,name,lat_deg,lon_deg),
// resolved relative to the config file.
ScenarioConfig load_scenario_config(const std::filesystem::path& path);
ScenarioConfig parse_scenario_config(const std::string& text, const std::filesystem::path& base_dir);

std::vector<GroundStation> load_ground_stations_csv(const std::filesystem::path& path);

}  // namespace intershell

#endif
