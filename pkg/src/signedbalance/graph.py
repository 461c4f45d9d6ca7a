"""Immutable signed digraphs, bipartitions and their temporal/layered containers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    ConflictingSignError,
    ConfigError,
    InvalidSignError,
    SelfLoopError,
    UnknownNodeError,
)


class Sign(enum.IntEnum):
    POS = 1
    NEG = -1

    @classmethod
    def coerce(cls, value) -> "Sign":
        """Accept +1/-1 (as int, float, str or Sign); anything else is an InvalidSignError."""
        if isinstance(value, Sign):
            return value
        try:
            num = float(value)
        except (TypeError, ValueError):
            raise InvalidSignError(f"sign must be +1 or -1, got {value!r}") from None
        if num == 1:
            return cls.POS
        if num == -1:
            return cls.NEG
        raise InvalidSignError(f"sign must be +1 or -1, got {value!r}")


def node_key(node: str):
    """Sort key for node ids: digit-only ids numerically (as if zero-padded), then the rest."""
    if node.isdigit():
        return (0, len(node.lstrip("0")), node.lstrip("0"), node)
    return (1, node)


def sort_nodes(nodes: Iterable[Hashable]) -> tuple[str, ...]:
    return tuple(sorted({str(v) for v in nodes}, key=node_key))


Edge = tuple[str, str, Sign]


class SignedDigraph:
    """A directed graph whose edges carry a sign in {+1, -1}.

    At most one edge per ordered pair and no self-loops. Node ids are strings,
    kept in :func:`node_key` order. Instances are immutable once built; use
    :func:`build_graph` rather than calling the constructor with raw data.
    """

    __slots__ = ("_nodes", "_index", "_signs", "_succ", "_pred", "_m_plus")

    def __init__(self, nodes: Iterable[Hashable], signs: Mapping[tuple[str, str], Sign]):
        all_nodes = set(str(v) for v in nodes)
        for u, v in signs:
            all_nodes.add(u)
            all_nodes.add(v)
        self._nodes = sort_nodes(all_nodes)
        self._index = MappingProxyType({v: i for i, v in enumerate(self._nodes)})
        ordered = sorted(signs.items(), key=lambda kv: (self._index[kv[0][0]], self._index[kv[0][1]]))
        self._signs = MappingProxyType(dict(ordered))
        succ: dict[str, dict[str, Sign]] = {v: {} for v in self._nodes}
        pred: dict[str, dict[str, Sign]] = {v: {} for v in self._nodes}
        for (u, v), s in self._signs.items():
            succ[u][v] = s
            pred[v][u] = s
        self._succ = MappingProxyType({v: MappingProxyType(d) for v, d in succ.items()})
        self._pred = MappingProxyType({v: MappingProxyType(d) for v, d in pred.items()})
        self._m_plus = sum(1 for s in self._signs.values() if s is Sign.POS)

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def n(self) -> int:
        return len(self._nodes)

    @property
    def m(self) -> int:
        return len(self._signs)

    @property
    def m_plus(self) -> int:
        return self._m_plus

    @property
    def m_minus(self) -> int:
        return len(self._signs) - self._m_plus

    def index(self, node: str) -> int:
        try:
            return self._index[node]
        except KeyError:
            raise UnknownNodeError(node) from None

    def edges(self) -> Iterator[Edge]:
        """Edges as (source, target, sign), ordered by (source, target) node order."""
        for (u, v), s in self._signs.items():
            yield u, v, s

    @property
    def signs(self) -> Mapping[tuple[str, str], Sign]:
        return self._signs

    def sign(self, u: str, v: str) -> Sign | None:
        return self._signs.get((u, v))

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self._signs

    def successors(self, u: str) -> Mapping[str, Sign]:
        return self._succ[u]

    def predecessors(self, u: str) -> Mapping[str, Sign]:
        return self._pred[u]

    def neighbors(self, u: str) -> set[str]:
        """Underlying undirected neighbourhood."""
        return set(self._succ[u]) | set(self._pred[u])

    def degree(self, u: str) -> int:
        return len(self._succ[u]) + len(self._pred[u])

    def __contains__(self, node) -> bool:
        return node in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedDigraph):
            return NotImplemented
        return self._nodes == other._nodes and dict(self._signs) == dict(other._signs)

    def __hash__(self) -> int:
        return hash((self._nodes, frozenset(self._signs.items())))

    def __reduce__(self):
        return (SignedDigraph, (self._nodes, dict(self._signs)))

    def __repr__(self) -> str:
        return f"SignedDigraph(n={self.n}, m={self.m}, m_plus={self.m_plus}, m_minus={self.m_minus})"


def build_graph(
    edge_triples: Iterable[tuple[Hashable, Hashable, object]],
    nodes: Iterable[Hashable] = (),
) -> SignedDigraph:
    """Build a :class:`SignedDigraph` from (source, target, sign) triples.

    Identical triples collapse silently. A self-loop, a sign other than +1/-1,
    or one ordered pair given both signs raises.
    """
    signs: dict[tuple[str, str], Sign] = {}
    for u, v, s in edge_triples:
        u, v = str(u), str(v)
        if u == v:
            raise SelfLoopError(f"self-loop on node {u!r}")
        sign = Sign.coerce(s)
        prev = signs.get((u, v))
        if prev is not None and prev is not sign:
            raise ConflictingSignError(f"edge ({u!r}, {v!r}) given both signs")
        signs[(u, v)] = sign
    return SignedDigraph(nodes, signs)


@dataclass(frozen=True)
class GraphSummary:
    n: int
    m: int
    m_plus: int
    m_minus: int
    density: float | None


def summary(g: SignedDigraph) -> GraphSummary:
    density = g.m / (g.n * (g.n - 1)) if g.n >= 2 else None
    return GraphSummary(g.n, g.m, g.m_plus, g.m_minus, density)


def switch(g: SignedDigraph, subset: Iterable[Hashable]) -> SignedDigraph:
    """Negate the sign of every edge with exactly one endpoint in ``subset``."""
    s = {str(v) for v in subset}
    for v in s:
        if v not in g:
            raise UnknownNodeError(v)
    signs = {}
    for u, v, sign in g.edges():
        signs[(u, v)] = Sign(-sign) if (u in s) != (v in s) else sign
    return SignedDigraph(g.nodes, signs)


class Partition(Mapping[str, int]):
    """Two-way split of a node set, stored as node -> side in {0, 1}.

    Side 1 is the subset X and side 0 its complement. Equality is on the raw
    side mapping; use :meth:`canonical` to compare up to complement.
    """

    __slots__ = ("_side", "_nodes")

    def __init__(self, side: Mapping[Hashable, int]):
        clean = {}
        for v, s in side.items():
            if s not in (0, 1):
                raise ValueError(f"side of {v!r} must be 0 or 1, got {s!r}")
            clean[str(v)] = int(s)
        self._nodes = sort_nodes(clean)
        self._side = {v: clean[v] for v in self._nodes}

    @classmethod
    def from_members(cls, nodes: Iterable[Hashable], members: Iterable[Hashable]) -> "Partition":
        """Side 1 for ``members``, side 0 for every other node of ``nodes``."""
        x = {str(v) for v in members}
        return cls({str(v): int(str(v) in x) for v in nodes})

    def __getitem__(self, node: str) -> int:
        return self._side[node]

    def __iter__(self):
        return iter(self._nodes)

    def __len__(self) -> int:
        return len(self._nodes)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._side == other._side
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._side.items()))

    def __lt__(self, other: "Partition") -> bool:
        return self.vector() < other.vector()

    def __repr__(self) -> str:
        return f"Partition(X={sorted(self.members(1), key=node_key)})"

    def vector(self) -> tuple[int, ...]:
        """Sides in node order."""
        return tuple(self._side[v] for v in self._nodes)

    def members(self, side: int = 1) -> frozenset[str]:
        return frozenset(v for v, s in self._side.items() if s == side)

    def complement(self) -> "Partition":
        return Partition({v: 1 - s for v, s in self._side.items()})

    def canonical(self) -> "Partition":
        """Complement if needed so that the lowest node sits on side 0."""
        if self._nodes and self._side[self._nodes[0]] == 1:
            return self.complement()
        return self

    def is_canonical(self) -> bool:
        return not self._nodes or self._side[self._nodes[0]] == 0

    def check_covers(self, g: SignedDigraph) -> None:
        for v in g.nodes:
            if v not in self._side:
                raise UnknownNodeError(f"partition has no side for node {v!r}")


@dataclass(frozen=True)
class TemporalNetwork:
    snapshots: tuple[tuple[str, SignedDigraph], ...]

    def __post_init__(self):
        object.__setattr__(self, "snapshots", tuple(self.snapshots))
        if not self.snapshots:
            raise ConfigError("a temporal network needs at least one snapshot")
        labels = [label for label, _ in self.snapshots]
        if len(set(labels)) != len(labels):
            raise ConfigError(f"duplicate snapshot labels: {labels}")

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.snapshots]


@dataclass(frozen=True)
class MultilayerNetwork:
    layers: Mapping[str, SignedDigraph]

    def __post_init__(self):
        if isinstance(self.layers, Sequence):
            items = list(self.layers)
            names = [name for name, _ in items]
            if len(set(names)) != len(names):
                raise ConfigError(f"duplicate layer names: {names}")
            layers = dict(items)
        else:
            layers = dict(self.layers)
        if not layers:
            raise ConfigError("a multilayer network needs at least one layer")
        object.__setattr__(self, "layers", MappingProxyType(layers))


CONFLICT_POLICIES = ("error", "keep_negative", "keep_positive")


def flatten(ml: MultilayerNetwork, conflict_policy: str = "error") -> SignedDigraph:
    """Union of all layers; same-sign repeats of an ordered pair collapse to one edge.

    An ordered pair carrying opposite signs in different layers raises
    ConflictingSignError under ``"error"``; otherwise the named sign wins.
    """
    if conflict_policy not in CONFLICT_POLICIES:
        raise ConfigError(f"conflict_policy must be one of {CONFLICT_POLICIES}")
    nodes: set[str] = set()
    signs: dict[tuple[str, str], Sign] = {}
    for name, layer in ml.layers.items():
        nodes.update(layer.nodes)
        for u, v, s in layer.edges():
            prev = signs.get((u, v))
            if prev is None or prev is s:
                signs[(u, v)] = s
            elif conflict_policy == "error":
                raise ConflictingSignError(f"edge ({u!r}, {v!r}) has opposite signs across layers (at {name!r})")
            else:
                signs[(u, v)] = Sign.NEG if conflict_policy == "keep_negative" else Sign.POS
    return SignedDigraph(nodes, signs)
