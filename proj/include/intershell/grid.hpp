#ifndef INTERSHELL_GRID_HPP
#define INTERSHELL_GRID_HPP

#include <string>

namespace intershell {

// One orbital shell: n_planes evenly spaced planes of sats_per_plane
// satellites each, all at the same altitude and inclination.
struct ShellConfig {
    std::string shell_id;
    int n_planes = 0;        // orbital planes (x axis of the grid)
    int sats_per_plane = 0;  // satellites per plane (y axis)
    double altitude_km = 0.0;
    double inclination_deg = 0.0;

    int total_sats() const { return n_planes * sats_per_plane; }
};

// Throws ConfigError naming the offending field.
void validate_shell(const ShellConfig& shell);

// Position of a satellite in the +Grid torus: x = plane, y = in-plane slot.
struct GridCoord {
    int x = 0;
    int y = 0;
    bool operator==(const GridCoord&) const = default;
};

// Row-major plane-order mapping: s -> (s / sats_per_plane, s % sats_per_plane).
// Throws std::out_of_range naming the shell for an invalid index.
GridCoord index_to_grid(int sat_index, const ShellConfig& shell);

// Minimal hops between positions a and b on a ring of ring_size nodes.
int ring_hops(int a, int b, int ring_size);

// Per-axis minimal hop counts between two satellites of one shell.
// x + y is the shortest-path length in the +Grid torus.
struct HopComponents {
    int x = 0;
    int y = 0;
    int total() const { return x + y; }
    bool operator==(const HopComponents&) const = default;
};

HopComponents hop_components(int s1, int s2, const ShellConfig& shell);

}  // namespace intershell

#endif
