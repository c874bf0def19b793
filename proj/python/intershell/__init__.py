"""Inter-shell LEO routing toolkit.

+Grid hop arithmetic, GSL scenario generation and trace ingestion, the
IRC dynamic-programming route optimizer and its two baselines, plus the
campaign runner. Everything is implemented in the C++ core; this package
re-exports it.
"""

from intershell._core import (  # noqa: F401
    ConfigError,
    GridCoord,
    GroundStation,
    GslTrace,
    MetricSeries,
    OracleTooLargeError,
    PathRecord,
    RouteSolution,
    ScenarioConfig,
    ShellConfig,
    TraceParseError,
    UnroutableError,
    Weights,
    adaptive_route,
    brute_force_solve,
    build_routing_data,
    compute_slot_records,
    delta_isl,
    dp_irc_solve,
    export_gsl_trace,
    generate_gsl_trace,
    gs_load_variance,
    hop_components,
    index_to_grid,
    irc,
    load_gsl_trace,
    load_scenario_config,
    min_hop_route,
    path_similarity,
    propagate_shell,
    ring_hops,
    run_campaign,
    subset_ground_stations,
    summarize,
    switching_rate,
    total_hops,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
