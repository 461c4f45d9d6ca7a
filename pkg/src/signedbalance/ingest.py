"""Readers for CSV edge lists and GML, and the sign-inference recipes applied to them.

CSV edge lists carry a header row. The default column names are
``source,target,weight`` with optional ``layer`` and ``time`` columns; any other
naming is mapped through ``schema``. GML input is the directed subset written by
common network tools: ``node [ id .. ]`` and ``edge [ source .. target .. sign .. ]``.
"""

from __future__ import annotations

import csv
import io
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import IO, Iterable, Mapping, Union

import networkx as nx

from .errors import (
    ConflictingSignError,
    EmptyFileError,
    IncompleteRankingError,
    InvalidSignError,
    MalformedGmlError,
    MissingColumnError,
    UnparsableWeightError,
    ZeroWeightError,
)
from .graph import Sign, SignedDigraph, build_graph

DEFAULT_SCHEMA = {"source": "source", "target": "target", "weight": "weight"}


@dataclass(frozen=True)
class RawRecord:
    source: str
    target: str
    weight: float
    layer: str | None = None
    time: str | None = None


@dataclass(frozen=True)
class SignOnly:
    """Keep every edge, reduced to the sign of its weight."""


@dataclass(frozen=True)
class Threshold:
    """Keep edges with ``|weight| >= min_abs``, reduced to their sign."""

    min_abs: float

    def __post_init__(self):
        if not self.min_abs > 0:
            raise ValueError("min_abs must be positive")


@dataclass(frozen=True)
class RankTopBottom:
    """Weights are ranks 1..rank_max-1 given by each source to every other node.

    Ranks ``<= top_k`` become positive edges, the ``bottom_k`` largest ranks
    become negative edges, everything in between is dropped.
    """

    top_k: int
    bottom_k: int
    rank_max: int

    def __post_init__(self):
        if self.top_k < 0 or self.bottom_k < 0:
            raise ValueError("top_k and bottom_k must be non-negative")
        if self.top_k + self.bottom_k > self.rank_max - 1:
            raise ValueError("top_k + bottom_k must not exceed rank_max - 1")


SignRule = Union[SignOnly, Threshold, RankTopBottom]


def parse_sign_rule(text: str) -> SignRule:
    """Parse the CLI/config spelling: ``sign_only``, ``threshold:3``, ``rank:3:3:17``."""
    kind, *args = text.strip().split(":")
    try:
        if kind == "sign_only" and not args:
            return SignOnly()
        if kind == "threshold" and len(args) == 1:
            return Threshold(float(args[0]))
        if kind in ("rank", "rank_top_bottom") and len(args) == 3:
            return RankTopBottom(*(int(a) for a in args))
    except ValueError as exc:
        raise ValueError(f"bad sign rule {text!r}: {exc}") from None
    raise ValueError(f"unknown sign rule {text!r}")


def _parse_weight(raw: str, line: int) -> float:
    try:
        w = float(raw)
    except (TypeError, ValueError):
        raise UnparsableWeightError(f"line {line}: cannot parse weight {raw!r}") from None
    if math.isnan(w) or math.isinf(w):
        raise UnparsableWeightError(f"line {line}: weight {raw!r} is not finite")
    return int(w) if w.is_integer() else w


def parse_edge_csv(
    stream: IO[str] | str,
    schema: Mapping[str, str] | None = None,
    delimiter: str = ",",
) -> list[RawRecord]:
    """Read an edge list with a header row into :class:`RawRecord` values, in file order.

    ``schema`` maps the roles ``source``, ``target``, ``weight`` (and optionally
    ``layer``, ``time``) to column names. A missing weight role means every row
    is a +1 edge.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    schema = dict(DEFAULT_SCHEMA if schema is None else schema)
    reader = csv.DictReader(stream, delimiter=delimiter, skipinitialspace=True)
    header = reader.fieldnames
    if not header:
        raise EmptyFileError("no header row")
    header = [h.strip() for h in header]
    reader.fieldnames = header
    for role in ("source", "target"):
        if role not in schema:
            raise MissingColumnError(f"schema lacks the {role!r} role")
    for role, col in schema.items():
        if col not in header:
            raise MissingColumnError(f"column {col!r} (for {role}) not in header {header}")
    records = []
    for row in reader:
        if not any((val or "").strip() for val in row.values() if isinstance(val, str)):
            continue
        line = reader.line_num
        weight = _parse_weight(row[schema["weight"]], line) if "weight" in schema else 1
        records.append(
            RawRecord(
                source=row[schema["source"]].strip(),
                target=row[schema["target"]].strip(),
                weight=weight,
                layer=row[schema["layer"]].strip() if "layer" in schema else None,
                time=row[schema["time"]].strip() if "time" in schema else None,
            )
        )
    if not records:
        raise EmptyFileError("edge list has a header but no data rows")
    return records


def parse_gml(stream: IO[str] | str, sign_attr: str = "sign") -> SignedDigraph:
    """Parse a GML graph whose edges carry an integer ``sign`` of +1 or -1.

    Node ids (not labels) become node identifiers. Undirected GML graphs are
    read as symmetric digraphs.
    """
    text = stream if isinstance(stream, str) else stream.read()
    try:
        nxg = nx.parse_gml(text, label=None)
    except (nx.NetworkXError, ValueError, SyntaxError) as exc:
        raise MalformedGmlError(str(exc)) from exc
    triples = []
    for u, v, data in nxg.edges(data=True):
        if sign_attr not in data:
            raise MalformedGmlError(f"edge ({u}, {v}) has no {sign_attr!r} attribute")
        s = Sign.coerce(data[sign_attr])
        triples.append((u, v, s))
        if not nxg.is_directed():
            triples.append((v, u, s))
    return build_graph(triples, nodes=nxg.nodes)


def apply_sign_rule(records: Iterable[RawRecord], rule: SignRule) -> list[tuple[str, str, Sign]]:
    """Turn weighted records into signed triples, keeping input order.

    For :class:`RankTopBottom`, rankings are grouped per (time, source) and must
    be complete and tie-free: exactly the ranks 1..rank_max-1.
    """
    records = list(records)
    if isinstance(rule, SignOnly):
        out = []
        for r in records:
            if r.weight == 0:
                raise InvalidSignError(f"zero weight on ({r.source}, {r.target})")
            out.append((r.source, r.target, Sign.POS if r.weight > 0 else Sign.NEG))
        return out
    if isinstance(rule, Threshold):
        out = []
        for r in records:
            if r.weight == 0:
                raise ZeroWeightError(f"zero weight on ({r.source}, {r.target})")
            if abs(r.weight) >= rule.min_abs:
                out.append((r.source, r.target, Sign.POS if r.weight > 0 else Sign.NEG))
        return out
    if isinstance(rule, RankTopBottom):
        expected = list(range(1, rule.rank_max))
        groups = defaultdict(list)
        for r in records:
            groups[(r.time, r.source)].append(r.weight)
        for (time, source), ranks in groups.items():
            if sorted(ranks) != expected:
                where = f"source {source!r}" + (f" at {time!r}" if time is not None else "")
                raise IncompleteRankingError(f"{where}: ranks are not exactly 1..{rule.rank_max - 1}")
        low_cut = rule.rank_max - 1 - rule.bottom_k
        out = []
        for r in records:
            if r.weight <= rule.top_k:
                out.append((r.source, r.target, Sign.POS))
            elif r.weight > low_cut:
                out.append((r.source, r.target, Sign.NEG))
        return out
    raise TypeError(f"unsupported sign rule {rule!r}")


def symmetrize(g: SignedDigraph) -> SignedDigraph:
    """Add the reverse of every edge with the same sign."""
    signs = dict(g.signs)
    for (u, v), s in g.signs.items():
        rev = signs.get((v, u))
        if rev is not None and rev is not s:
            raise ConflictingSignError(f"reciprocal pair ({u!r}, {v!r}) carries opposite signs")
        signs[(v, u)] = s
    return SignedDigraph(g.nodes, signs)


def read_edge_csv(path, schema=None, delimiter=",") -> list[RawRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_edge_csv(fh, schema=schema, delimiter=delimiter)


def read_gml(path) -> SignedDigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_gml(fh)
