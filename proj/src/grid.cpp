#include "intershell/grid.hpp"

#include <cstdlib>
#include <stdexcept>

#include "intershell/errors.hpp"

namespace intershell {

void validate_shell(const ShellConfig& shell) {
    if (shell.n_planes < 1)
        throw ConfigError("shell '" + shell.shell_id + "': n_planes must be >= 1, got " +
                          std::to_string(shell.n_planes));
    if (shell.sats_per_plane < 1)
        throw ConfigError("shell '" + shell.shell_id + "': sats_per_plane must be >= 1, got " +
                          std::to_string(shell.sats_per_plane));
    if (!(shell.altitude_km > 0.0))
        throw ConfigError("shell '" + shell.shell_id + "': altitude_km must be > 0, got " +
                          std::to_string(shell.altitude_km));
    if (shell.inclination_deg < 0.0 || shell.inclination_deg > 180.0)
        throw ConfigError("shell '" + shell.shell_id + "': inclination_deg must be in [0, 180], got " +
                          std::to_string(shell.inclination_deg));
}

GridCoord index_to_grid(int sat_index, const ShellConfig& shell) {
    const int total = shell.total_sats();
    if (sat_index < 0 || sat_index >= total)
        throw std::out_of_range("satellite index " + std::to_string(sat_index) + " out of range for shell '" +
                                shell.shell_id + "' (valid 0.." + std::to_string(total - 1) + ")");
    return {sat_index / shell.sats_per_plane, sat_index % shell.sats_per_plane};
}

int ring_hops(int a, int b, int ring_size) {
    if (ring_size < 1)
        throw std::out_of_range("ring size must be >= 1, got " + std::to_string(ring_size));
    if (a < 0 || a >= ring_size || b < 0 || b >= ring_size)
        throw std::out_of_range("ring position out of range 0.." + std::to_string(ring_size - 1));
    const int d = std::abs(a - b);
    return d < ring_size - d ? d : ring_size - d;
}

HopComponents hop_components(int s1, int s2, const ShellConfig& shell) {
    const GridCoord c1 = index_to_grid(s1, shell);
    const GridCoord c2 = index_to_grid(s2, shell);
    return {ring_hops(c1.x, c2.x, shell.n_planes), ring_hops(c1.y, c2.y, shell.sats_per_plane)};
}

}  // namespace intershell
