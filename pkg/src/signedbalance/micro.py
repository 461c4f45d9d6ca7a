"""Triad-level balance: triad enumeration, census typing, semicycles and T(G)."""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .graph import Sign, SignedDigraph


class CensusType(str, enum.Enum):
    T030 = "030T"
    C030 = "030C"
    D120 = "120D"
    U120 = "120U"
    C120 = "120C"
    T210 = "210"
    T300 = "300"

    def __str__(self) -> str:
        return self.value


TRANSITIVE_TYPES = (CensusType.T300, CensusType.D120, CensusType.U120, CensusType.T030)

SignedEdge = tuple[str, str, Sign]


@dataclass(frozen=True)
class Triad:
    """Three pairwise-connected nodes together with every edge among them."""

    nodes: tuple[str, str, str]
    edges: tuple[SignedEdge, ...]

    def has_edge(self, u: str, v: str) -> bool:
        return any(a == u and b == v for a, b, _ in self.edges)


@dataclass(frozen=True)
class Semicycle:
    """One edge chosen for each of the three pairs of a triad."""

    edges: tuple[SignedEdge, SignedEdge, SignedEdge]


@dataclass(frozen=True)
class MicroReport:
    transitive_triad_count: int
    balanced_count: int
    unbalanced_count: int
    T: float | None
    balanced_fraction_by_type: dict[CensusType, float] = field(default_factory=dict)
    balanced_by_type: dict[CensusType, int] = field(default_factory=dict)
    unbalanced_by_type: dict[CensusType, int] = field(default_factory=dict)
    census: dict[CensusType, int] = field(default_factory=dict)


def _triad(g: SignedDigraph, a: str, b: str, c: str) -> Triad:
    edges = []
    for u, v in itertools.permutations((a, b, c), 2):
        s = g.sign(u, v)
        if s is not None:
            edges.append((u, v, s))
    return Triad((a, b, c), tuple(edges))


def _triads_from(g: SignedDigraph, starts) -> Iterator[Triad]:
    rank = {v: i for i, v in enumerate(g.nodes)}
    higher = {v: {w for w in g.neighbors(v) if rank[w] > rank[v]} for v in g.nodes}
    for a in starts:
        ha = higher[a]
        for b in sorted(ha, key=rank.__getitem__):
            common = ha & higher[b]
            for c in sorted(common, key=rank.__getitem__):
                yield _triad(g, a, b, c)


def enumerate_triads(g: SignedDigraph) -> Iterator[Triad]:
    """Every triple of nodes whose three pairs are all connected, each exactly once.

    Triples come out in lexicographic order of their (sorted) node positions.
    Works by intersecting forward neighbourhoods, so the cost follows the
    number of edges times the typical degree rather than n^3.
    """
    return _triads_from(g, g.nodes)


def classify_triad(t: Triad) -> CensusType:
    a, b, c = t.nodes
    present = {(u, v) for u, v, _ in t.edges}
    mutual = []
    asym = []
    for x, y in ((a, b), (a, c), (b, c)):
        fwd, back = (x, y) in present, (y, x) in present
        if fwd and back:
            mutual.append((x, y))
        elif fwd:
            asym.append((x, y))
        elif back:
            asym.append((y, x))
        else:
            raise ValueError(f"nodes {x!r} and {y!r} are not connected; not a triad")
    if len(mutual) == 3:
        return CensusType.T300
    if len(mutual) == 2:
        return CensusType.T210
    if len(mutual) == 1:
        third = ({a, b, c} - set(mutual[0])).pop()
        outs = sum(1 for u, _ in asym if u == third)
        if outs == 2:
            return CensusType.D120
        if outs == 0:
            return CensusType.U120
        return CensusType.C120
    out_deg = Counter(u for u, _ in asym)
    if all(out_deg[v] == 1 for v in (a, b, c)):
        return CensusType.C030
    return CensusType.T030


def semicycles(t: Triad) -> list[Semicycle]:
    a, b, c = t.nodes
    options = []
    for pair in ((a, b), (a, c), (b, c)):
        options.append([e for e in t.edges if {e[0], e[1]} == set(pair)])
    return [Semicycle(tuple(choice)) for choice in itertools.product(*options)]


def is_transitive(sc: Semicycle, t: Triad) -> bool:
    """Every chained pair A->B, B->C of the semicycle must have A->C in the triad."""
    for (a, b, _), (b2, c, _) in itertools.permutations(sc.edges, 2):
        if b == b2 and not t.has_edge(a, c):
            return False
    return True


def semicycle_balanced(sc: Semicycle) -> bool:
    prod = 1
    for _, _, s in sc.edges:
        prod *= int(s)
    return prod > 0


def _tally(g: SignedDigraph, starts) -> tuple[Counter, Counter, Counter]:
    census, bal, unbal = Counter(), Counter(), Counter()
    for t in _triads_from(g, starts):
        ttype = classify_triad(t)
        census[ttype] += 1
        scs = semicycles(t)
        if not all(is_transitive(sc, t) for sc in scs):
            continue
        if all(semicycle_balanced(sc) for sc in scs):
            bal[ttype] += 1
        else:
            unbal[ttype] += 1
    return census, bal, unbal


def _tally_chunk(args):
    g, starts = args
    return _tally(g, starts)


def micro_stats(g: SignedDigraph, workers: int = 1) -> MicroReport:
    """Fraction of balanced triads among transitive triads, with a per-type breakdown.

    A triad counts as transitive only when all its semicycles are transitive,
    and as balanced only when all of them have a positive sign product. Per-type
    fractions share the transitive-triad total as denominator, so they add up to T.
    """
    if workers > 1 and g.n > 3 * workers:
        nodes = list(g.nodes)
        chunks = [(g, nodes[i::workers]) for i in range(workers)]
        census, bal, unbal = Counter(), Counter(), Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for c, b, u in pool.map(_tally_chunk, chunks):
                census.update(c)
                bal.update(b)
                unbal.update(u)
    else:
        census, bal, unbal = _tally(g, g.nodes)
    n_bal = sum(bal.values())
    n_unbal = sum(unbal.values())
    total = n_bal + n_unbal
    T = n_bal / total if total else None
    fractions = {k: (bal[k] / total if total else 0.0) for k in TRANSITIVE_TYPES}
    return MicroReport(
        transitive_triad_count=total,
        balanced_count=n_bal,
        unbalanced_count=n_unbal,
        T=T,
        balanced_fraction_by_type=fractions,
        balanced_by_type={k: bal[k] for k in TRANSITIVE_TYPES},
        unbalanced_by_type={k: unbal[k] for k in TRANSITIVE_TYPES},
        census={k: census[k] for k in CensusType},
    )
