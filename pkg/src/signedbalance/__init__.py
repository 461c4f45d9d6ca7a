"""Structural balance of signed directed networks at triad, subgroup and network level."""

from .errors import *  # noqa: F401,F403
from .frustration import (
    Bounds,
    EdgeClass,
    Optima,
    SolveOptions,
    SolveResult,
    bounds,
    classify_edges,
    enumerate_optima,
    frustration_count,
    local_search,
    lower_bound,
    normalized_F,
    solve_exact,
)
from .graph import (
    GraphSummary,
    MultilayerNetwork,
    Partition,
    Sign,
    SignedDigraph,
    TemporalNetwork,
    build_graph,
    flatten,
    summary,
    switch,
)
from .ingest import (
    RankTopBottom,
    RawRecord,
    SignOnly,
    Threshold,
    apply_sign_rule,
    parse_edge_csv,
    parse_gml,
    parse_sign_rule,
    symmetrize,
)
from .meso import MesoReport, cohesiveness, divisiveness, internal_external_split, meso_report
from .micro import CensusType, MicroReport, Semicycle, Triad, classify_triad, enumerate_triads, micro_stats, semicycles
from .report import (
    DatasetConfig,
    MeasurementRow,
    analyze,
    clustering_coefficient,
    export_partition,
    load_config,
    pearson,
    read_partitions,
)

__version__ = "0.1.0"
