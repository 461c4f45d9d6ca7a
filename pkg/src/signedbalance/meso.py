"""Subgroup-level measures on a bipartition: cohesiveness and divisiveness."""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InconsistentOptimaError
from .frustration import frustration_count
from .graph import Edge, Partition, Sign, SignedDigraph


@dataclass(frozen=True)
class MesoReport:
    per_optimum: tuple[tuple[Partition, Fraction | None, Fraction | None], ...]
    canonical_C: Fraction | None
    canonical_D: Fraction | None
    C_stddev: float
    D_stddev: float

    @property
    def canonical_partition(self) -> Partition:
        return self.per_optimum[0][0]


def internal_external_split(g: SignedDigraph, p: Partition) -> tuple[list[Edge], list[Edge]]:
    """Edges with both endpoints on one side, and edges crossing the split."""
    p.check_covers(g)
    internal, external = [], []
    for u, v, s in g.edges():
        (internal if p[u] == p[v] else external).append((u, v, s))
    return internal, external


def cohesiveness(g: SignedDigraph, p: Partition) -> Fraction | None:
    """Share of positive edges among internal edges; None without internal edges."""
    internal, _ = internal_external_split(g, p)
    if not internal:
        return None
    return Fraction(sum(1 for *_, s in internal if s is Sign.POS), len(internal))


def divisiveness(g: SignedDigraph, p: Partition) -> Fraction | None:
    """Share of negative edges among external edges; None without external edges."""
    _, external = internal_external_split(g, p)
    if not external:
        return None
    return Fraction(sum(1 for *_, s in external if s is Sign.NEG), len(external))


def _spread(values: list[Fraction | None]) -> float:
    vals = [float(v) for v in values if v is not None]
    # Sample standard deviation: matches the published spread across House A optima.
    return statistics.stdev(vals) if len(vals) > 1 else 0.0


def meso_report(g: SignedDigraph, optima: Sequence[Partition]) -> MesoReport:
    """C and D for every optimum; table values come from the lexicographically smallest one."""
    if not optima:
        raise ValueError("meso_report needs at least one partition")
    canon = sorted({p.canonical() for p in optima})
    counts = {frustration_count(g, p) for p in canon}
    if len(counts) > 1:
        raise InconsistentOptimaError(f"optima disagree on frustration count: {sorted(counts)}")
    rows = tuple((p, cohesiveness(g, p), divisiveness(g, p)) for p in canon)
    return MesoReport(
        per_optimum=rows,
        canonical_C=rows[0][1],
        canonical_D=rows[0][2],
        C_stddev=_spread([r[1] for r in rows]),
        D_stddev=_spread([r[2] for r in rows]),
    )
