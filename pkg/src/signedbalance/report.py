"""End-to-end measurement of configured networks and the CSV/JSON outputs.

A configuration names one network (static), a series of snapshots (temporal)
or a set of layers (multilayer, which also yields the flattened union). Each
resulting graph gets one :class:`MeasurementRow` with the triad, subgroup and
whole-network figures, plus an optimal partition written in the
``name : value`` cell format.
"""

from __future__ import annotations

import csv
import json
import logging
import math
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .errors import ConfigError, LengthMismatchError, TooSmallError, ZeroVarianceError
from .frustration import SolveOptions, SolveResult, classify_edges, normalized_F, solve_exact
from .graph import (
    CONFLICT_POLICIES,
    MultilayerNetwork,
    Partition,
    SignedDigraph,
    build_graph,
    flatten,
    summary,
)
from .ingest import (
    RawRecord,
    apply_sign_rule,
    parse_sign_rule,
    read_edge_csv,
    read_gml,
    symmetrize,
)
from .meso import MesoReport, meso_report
from .micro import TRANSITIVE_TYPES, CensusType, micro_stats
from .rounding import fmt3, round_half_up

log = logging.getLogger(__name__)

MODES = ("static", "temporal", "multilayer")
FORMATS = ("csv", "gml")

MEASUREMENTS_FILE = "network-measurements.csv"
PARTITIONS_FILE = "optimal-partitions.csv"


@dataclass(frozen=True)
class MeasurementRow:
    network_label: str
    n: int
    m: int
    m_plus: int
    m_minus: int
    balanced_triads: int
    unbalanced_triads: int
    T: float | None
    clustering_coefficient: float | None
    density: float | None
    L: int
    F: float
    C: float | None
    D: float | None
    balanced_census_by_type: dict[str, int]
    proven: bool
    unbalanced_census_by_type: dict[str, int] = field(default_factory=dict)
    census: dict[str, int] = field(default_factory=dict)
    lower: int | None = None
    upper: int | None = None
    optima_count: int | None = None
    C_stddev: float | None = None
    D_stddev: float | None = None


@dataclass
class DatasetConfig:
    """One configured dataset; see :func:`load_config` for the JSON spelling."""

    label: str
    inputs: list[str]
    format: str = "csv"
    sign_rule: str = "sign_only"
    symmetrize: bool = False
    mode: str = "static"
    labels: list[str] | None = None
    conflict_policy: str = "error"
    schema: dict[str, str] | None = None
    delimiter: str = ","
    solver: dict = field(default_factory=dict)
    out: str | None = None

    def __post_init__(self):
        if not self.label:
            raise ConfigError("dataset needs a label")
        if isinstance(self.inputs, (str, os.PathLike)):
            self.inputs = [self.inputs]
        self.inputs = [str(p) for p in self.inputs]
        if not self.inputs:
            raise ConfigError(f"{self.label}: no inputs")
        if self.mode not in MODES:
            raise ConfigError(f"{self.label}: mode must be one of {MODES}")
        if self.format not in FORMATS:
            raise ConfigError(f"{self.label}: format must be one of {FORMATS}")
        if self.conflict_policy not in CONFLICT_POLICIES:
            raise ConfigError(f"{self.label}: conflict_policy must be one of {CONFLICT_POLICIES}")
        if self.delimiter not in (",", "\t"):
            raise ConfigError(f"{self.label}: delimiter must be a comma or a tab")
        try:
            parse_sign_rule(self.sign_rule)
            self.solver_options()
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"{self.label}: {exc}") from None
        if self.mode == "static" and len(self.inputs) != 1:
            raise ConfigError(f"{self.label}: a static dataset takes exactly one input")
        if self.mode != "static" and len(self.inputs) > 1:
            if self.labels is None or len(self.labels) != len(self.inputs):
                raise ConfigError(f"{self.label}: one label per input file is required")
        if self.format == "gml" and self.mode != "static" and len(self.inputs) == 1:
            raise ConfigError(f"{self.label}: GML snapshots/layers need one file each")

    def solver_options(self) -> SolveOptions:
        return SolveOptions(**self.solver)

    @classmethod
    def from_dict(cls, data: Mapping, base_dir: Path | None = None) -> "DatasetConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        data = dict(data)
        if "label" not in data or "inputs" not in data:
            raise ConfigError("each dataset needs 'label' and 'inputs'")
        if base_dir is not None:
            inputs = data["inputs"] if isinstance(data["inputs"], list) else [data["inputs"]]
            data["inputs"] = [str(base_dir / p) for p in inputs]
        return cls(**data)


def load_config(path) -> list[DatasetConfig]:
    """Read a JSON config: one dataset object, or ``{"datasets": [...], ...defaults}``.

    Relative input paths resolve against the config file's directory. Keys next
    to ``datasets`` (for example ``solver`` or ``out``) are defaults for every entry.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    if "datasets" in raw:
        defaults = {k: v for k, v in raw.items() if k != "datasets"}
        entries = [{**defaults, **entry} for entry in raw["datasets"]]
    else:
        entries = [raw]
    if not entries:
        raise ConfigError("config lists no datasets")
    return [DatasetConfig.from_dict(e, path.parent) for e in entries]


# ---------------------------------------------------------------------------
# Building graphs from a config


def _graph_from_records(records: Sequence[RawRecord], cfg: DatasetConfig) -> SignedDigraph:
    triples = apply_sign_rule(records, parse_sign_rule(cfg.sign_rule))
    nodes = {r.source for r in records} | {r.target for r in records}
    g = build_graph(triples, nodes=nodes)
    return symmetrize(g) if cfg.symmetrize else g


def _grouped(records: Sequence[RawRecord], key: str, wanted: Sequence[str] | None):
    groups: dict[str, list[RawRecord]] = {}
    for r in records:
        value = getattr(r, key)
        if value is None:
            raise ConfigError(f"records lack a {key!r} column")
        groups.setdefault(value, []).append(r)
    if wanted is None:
        return list(groups.items())
    missing = [w for w in wanted if w not in groups]
    if missing:
        raise ConfigError(f"no records for {key} labels {missing}")
    return [(w, groups[w]) for w in wanted]


def _read_one(path: str, cfg: DatasetConfig, role: str | None = None):
    """Records (CSV) or a finished graph (GML) for one input file."""
    if cfg.format == "gml":
        g = read_gml(path)
        return symmetrize(g) if cfg.symmetrize else g
    schema = dict(cfg.schema) if cfg.schema else None
    if role is not None:
        schema = schema or {"source": "source", "target": "target", "weight": "weight"}
        schema.setdefault(role, role)
    return read_edge_csv(path, schema=schema, delimiter=cfg.delimiter)


def build_networks(cfg: DatasetConfig) -> list[tuple[str, SignedDigraph]]:
    """Labelled graphs for a dataset, in output order."""
    if cfg.mode == "static":
        data = _read_one(cfg.inputs[0], cfg)
        g = data if isinstance(data, SignedDigraph) else _graph_from_records(data, cfg)
        return [(cfg.label, g)]
    role = "time" if cfg.mode == "temporal" else "layer"
    if len(cfg.inputs) > 1 or cfg.format == "gml":
        parts = []
        for name, path in zip(cfg.labels, cfg.inputs):
            data = _read_one(path, cfg)
            parts.append((name, data if isinstance(data, SignedDigraph) else _graph_from_records(data, cfg)))
    else:
        records = _read_one(cfg.inputs[0], cfg, role)
        parts = [(name, _graph_from_records(recs, cfg)) for name, recs in _grouped(records, role, cfg.labels)]
    out = [(f"{cfg.label} {name}", g) for name, g in parts]
    if cfg.mode == "multilayer":
        out.append((f"{cfg.label} flat", flatten(MultilayerNetwork(parts), cfg.conflict_policy)))
    return out


# ---------------------------------------------------------------------------
# Descriptive statistics


def clustering_coefficient(g: SignedDigraph) -> float:
    """Global transitivity of the sign-blind undirected projection."""
    if g.n < 3:
        raise TooSmallError("clustering coefficient needs at least 3 nodes")
    und = nx.Graph()
    und.add_nodes_from(g.nodes)
    und.add_edges_from((u, v) for u, v, _ in g.edges())
    return nx.transitivity(und)


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient."""
    xs, ys = [float(x) for x in xs], [float(y) for y in ys]
    if len(xs) != len(ys):
        raise LengthMismatchError(f"series lengths differ: {len(xs)} vs {len(ys)}")
    if len(xs) < 3:
        raise LengthMismatchError("pearson needs at least 3 pairs")
    if len(set(xs)) < 2 or len(set(ys)) < 2:
        raise ZeroVarianceError("a series is constant")
    return statistics.correlation(xs, ys)


# ---------------------------------------------------------------------------
# Per-network measurement


@dataclass(frozen=True)
class NetworkResult:
    label: str
    graph: SignedDigraph
    row: MeasurementRow
    solve: SolveResult
    meso: MesoReport


def _f(value: Fraction | float | None) -> float | None:
    return None if value is None else float(value)


def measure(label: str, g: SignedDigraph, opts: SolveOptions | None = None) -> NetworkResult:
    opts = opts or SolveOptions()
    info = summary(g)
    micro = micro_stats(g)
    result = solve_exact(g, opts)
    optima = list(result.all_optima) if result.all_optima and result.all_optima.proven else [result.partition]
    meso = meso_report(g, optima)
    cc = clustering_coefficient(g) if g.n >= 3 else None
    row = MeasurementRow(
        network_label=label,
        n=info.n,
        m=info.m,
        m_plus=info.m_plus,
        m_minus=info.m_minus,
        balanced_triads=micro.balanced_count,
        unbalanced_triads=micro.unbalanced_count,
        T=micro.T,
        clustering_coefficient=cc,
        density=info.density,
        L=result.L,
        F=normalized_F(result.L, g.m) if g.m else None,
        C=_f(meso.canonical_C),
        D=_f(meso.canonical_D),
        balanced_census_by_type={str(k): micro.balanced_by_type[k] for k in TRANSITIVE_TYPES},
        proven=result.proven,
        unbalanced_census_by_type={str(k): micro.unbalanced_by_type[k] for k in TRANSITIVE_TYPES},
        census={str(k): micro.census[k] for k in CensusType},
        lower=result.lower,
        upper=result.upper,
        optima_count=len(result.all_optima) if result.all_optima and result.all_optima.proven else None,
        C_stddev=meso.C_stddev,
        D_stddev=meso.D_stddev,
    )
    return NetworkResult(label, g, row, result, meso)


def _measure_task(args):
    label, g, opts = args
    return measure(label, g, opts)


def worker_count(requested: int | None = None) -> int:
    """Requested workers, capped by the BALANCE_THREADS environment variable and the CPU count."""
    cap = os.environ.get("BALANCE_THREADS")
    limit = os.cpu_count() or 1
    if cap:
        try:
            limit = max(1, int(cap))
        except ValueError:
            raise ConfigError(f"BALANCE_THREADS must be an integer, got {cap!r}") from None
    return max(1, min(requested or limit, limit))


def analyze_results(cfgs: DatasetConfig | Iterable[DatasetConfig], workers: int | None = None) -> list[NetworkResult]:
    """Measure every configured network; results come back in config order."""
    if isinstance(cfgs, DatasetConfig):
        cfgs = [cfgs]
    cfgs = list(cfgs)
    if not cfgs:
        raise ConfigError("nothing to analyze: empty config")
    tasks, owners = [], []
    for i, cfg in enumerate(cfgs):
        opts = cfg.solver_options()
        try:
            networks = build_networks(cfg)
        except Exception as exc:
            raise type(exc)(f"{cfg.label}: {exc}") from exc
        for label, g in networks:
            tasks.append((label, g, opts))
            owners.append(i)
    n_workers = min(worker_count(workers), len(tasks))
    if n_workers > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(_measure_task, tasks))
    else:
        results = [_measure_task(t) for t in tasks]
    for r in results:
        if not r.row.proven:
            log.warning("%s: optimum not proven, L in [%d, %d]", r.label, r.row.lower, r.row.upper)
    by_out: dict[str, list[NetworkResult]] = {}
    for r, i in zip(results, owners):
        if cfgs[i].out:
            by_out.setdefault(cfgs[i].out, []).append(r)
    for out, chunk in by_out.items():
        write_outputs(chunk, out)
    return results


def analyze(cfgs: DatasetConfig | Iterable[DatasetConfig], workers: int | None = None) -> list[MeasurementRow]:
    return [r.row for r in analyze_results(cfgs, workers)]


# ---------------------------------------------------------------------------
# Output files


def measurement_columns() -> list[str]:
    cols = [
        "network", "n", "m", "m_plus", "m_minus", "balanced_triads", "unbalanced_triads", "T",
        "clustering_coefficient", "density",
    ]
    cols += [f"census_{t}" for t in CensusType]
    cols += ["L", "F", "C", "D"]
    cols += [f"balanced_{t}" for t in TRANSITIVE_TYPES]
    cols += [f"unbalanced_{t}" for t in TRANSITIVE_TYPES]
    cols += ["proven", "optima", "C_stddev", "D_stddev"]
    return cols


def _row_cells(row: MeasurementRow) -> list[str]:
    if row.proven:
        L_cell, F_cell = str(row.L), fmt3(row.F)
    else:
        # Unproven: the optimum is only known to lie in [lower, upper].
        L_cell = f"{row.lower}..{row.upper}"
        F_cell = f"{fmt3(normalized_F(row.upper, row.m))}..{fmt3(normalized_F(row.lower, row.m))}"
    cells = [
        row.network_label, row.n, row.m, row.m_plus, row.m_minus, row.balanced_triads, row.unbalanced_triads,
        fmt3(round_half_up(row.T)), fmt3(round_half_up(row.clustering_coefficient)), fmt3(round_half_up(row.density)),
    ]
    cells += [row.census.get(str(t), 0) for t in CensusType]
    cells += [L_cell, F_cell, fmt3(round_half_up(row.C)), fmt3(round_half_up(row.D))]
    cells += [row.balanced_census_by_type[str(t)] for t in TRANSITIVE_TYPES]
    cells += [row.unbalanced_census_by_type.get(str(t), 0) for t in TRANSITIVE_TYPES]
    cells += [
        "true" if row.proven else "false",
        "" if row.optima_count is None else row.optima_count,
        fmt3(round_half_up(row.C_stddev)),
        fmt3(round_half_up(row.D_stddev)),
    ]
    return [str(c) for c in cells]


def write_measurements_csv(rows: Iterable[MeasurementRow], sink) -> None:
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(measurement_columns())
    for row in rows:
        writer.writerow(_row_cells(row))


def partition_cells(g: SignedDigraph, result: SolveResult | Partition) -> list[str]:
    """``x`` per node, then ``f``, ``s``, ``t`` per edge, as ``name : value`` cells."""
    part = result if isinstance(result, Partition) else result.partition
    part.check_covers(g)
    cells = [f"x{v} : {part[v]}" for v in g.nodes]
    classes = classify_edges(g, part)
    cells += [f"f_{e.source}_{e.target} : {int(e.frustrated)}" for e in classes]
    cells += [f"s_{e.source}_{e.target} : {int(e.sign)}" for e in classes]
    cells += [f"t_{e.source}_{e.target} : {e.t}" for e in classes]
    return cells


def write_partitions_csv(columns: Sequence[tuple[str, Sequence[str]]], sink) -> None:
    """One column per network: the label in the header row, cells below."""
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow([label for label, _ in columns])
    depth = max((len(cells) for _, cells in columns), default=0)
    for i in range(depth):
        writer.writerow([cells[i] if i < len(cells) else "" for _, cells in columns])


def export_partition(g: SignedDigraph, result: SolveResult | Partition, sink, label: str = "network") -> None:
    write_partitions_csv([(label, partition_cells(g, result))], sink)


def read_partitions(source) -> dict[str, Partition]:
    """Node sides per network column, from a file written by :func:`write_partitions_csv`."""
    reader = csv.reader(source)
    header = next(reader, None)
    if not header:
        return {}
    sides: list[dict[str, int]] = [{} for _ in header]
    for row in reader:
        for i, cell in enumerate(row[: len(header)]):
            name, sep, value = cell.partition(" : ")
            if sep and name.startswith("x"):
                sides[i][name[1:]] = int(value)
    return {label: Partition(s) for label, s in zip(header, sides)}


def _json_number(v):
    if isinstance(v, float) and math.isnan(v):
        return None
    return v


def write_outputs(results: Sequence[NetworkResult], out_dir, json_mirror: bool = True) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = [r.row for r in results]
    with open(out / MEASUREMENTS_FILE, "w", newline="", encoding="utf-8") as fh:
        write_measurements_csv(rows, fh)
    columns = [(r.label, partition_cells(r.graph, r.solve)) for r in results]
    with open(out / PARTITIONS_FILE, "w", newline="", encoding="utf-8") as fh:
        write_partitions_csv(columns, fh)
    if json_mirror:
        meta = {"clustering_coefficient": "global transitivity of the sign-blind undirected projection"}
        payload = {"meta": meta, "rows": [{k: _json_number(v) for k, v in asdict(row).items()} for row in rows]}
        (out / "network-measurements.json").write_text(json.dumps(payload, indent=2), encoding="utf-8")
        parts = {label: cells for label, cells in columns}
        (out / "optimal-partitions.json").write_text(json.dumps(parts, indent=2), encoding="utf-8")

