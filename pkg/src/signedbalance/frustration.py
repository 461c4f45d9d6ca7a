"""Frustration index of signed digraphs: exact branch-and-bound, bounds and optima.

A bipartition frustrates a positive edge whose endpoints are split and a
negative edge whose endpoints share a side. Edge direction plays no role in
whether an edge is frustrated, so the search runs on a weighted undirected
reduction: for every connected pair with ``pos`` positive and ``neg`` negative
arcs, ``min(pos, neg)`` arcs are frustrated under any partition (a constant),
and the remaining ``|pos - neg|`` arcs act as one weighted edge of weight
``pos - neg``.

The exact search is a depth-first branch-and-bound over node sides with a
static variable order. Each search node is bounded by

    cost among decided nodes
    + sum over undecided nodes of their cheapest side given the decided ones
    + a lower bound for the edges among the undecided nodes,

where the last term comes from solving every suffix of the order exactly
first, shortest suffix first (a "Russian doll" search), so that it is tight.
"""

from __future__ import annotations

import random
import sys
import time
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import EmptyGraphError
from .graph import Partition, Sign, SignedDigraph
from .rounding import round_half_up

DEFAULT_NODE_BUDGET = 50_000_000
DEFAULT_TIME_BUDGET = 300.0
DEFAULT_RESTARTS = 50
LARGE_NETWORK_EDGES = 10_000


@dataclass(frozen=True)
class SolveOptions:
    node_budget: int = DEFAULT_NODE_BUDGET
    time_budget: float = DEFAULT_TIME_BUDGET
    restarts: int = DEFAULT_RESTARTS
    enumerate_all: bool = False
    enumeration_cap: int = 1000
    seed: int = 0
    # Above LARGE_NETWORK_EDGES edges only bounds are computed unless this is set.
    exact_large: bool = False

    def __post_init__(self):
        if self.node_budget <= 0 or self.time_budget <= 0 or self.restarts <= 0:
            raise ValueError("budgets and restarts must be positive")
        if self.enumeration_cap < 1:
            raise ValueError("enumeration_cap must be at least 1")


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int
    upper_partition: Partition


@dataclass(frozen=True)
class Optima:
    """Canonical optimal partitions in lexicographic order of their side vectors."""

    partitions: tuple[Partition, ...]
    L: int | None
    truncated: bool = False
    proven: bool = True

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.partitions)

    def __len__(self) -> int:
        return len(self.partitions)

    def __getitem__(self, i) -> Partition:
        return self.partitions[i]


@dataclass(frozen=True)
class SolveResult:
    L: int
    partition: Partition
    proven: bool
    explored_nodes: int
    lower: int
    upper: int
    all_optima: Optima | None = None
    elapsed: float = 0.0

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.lower, self.upper, self.partition)


@dataclass(frozen=True)
class EdgeClass:
    source: str
    target: str
    sign: Sign
    internal: bool
    frustrated: bool
    t: int

    @property
    def situation(self) -> str:
        return "internal" if self.internal else "external"


# ---------------------------------------------------------------------------
# Scoring a given partition


def frustration_count(g: SignedDigraph, p: Partition) -> int:
    p.check_covers(g)
    count = 0
    for u, v, s in g.edges():
        same = p[u] == p[v]
        if (s is Sign.POS) != same:
            count += 1
    return count


_T_CODE = {(Sign.POS, True): 3, (Sign.NEG, True): 1, (Sign.POS, False): -1, (Sign.NEG, False): -3}


def classify_edges(g: SignedDigraph, p: Partition) -> list[EdgeClass]:
    """Sign/situation class of every edge; ``t`` is 3, 1, -1, -3 for +internal, -internal, +external, -external."""
    p.check_covers(g)
    out = []
    for u, v, s in g.edges():
        internal = p[u] == p[v]
        out.append(EdgeClass(u, v, s, internal, (s is Sign.POS) != internal, _T_CODE[(s, internal)]))
    return out


def normalized_F(L: int, m: int) -> float:
    """1 - 2L/m rounded half-up to three decimals."""
    if m <= 0:
        raise EmptyGraphError("F(G) is undefined for a graph without edges")
    return round_half_up(1 - Fraction(2 * L, m))


# ---------------------------------------------------------------------------
# Weighted reduction


class _Reduced:
    """Pairwise-weighted view of a signed digraph, over node indices."""

    def __init__(self, g: SignedDigraph):
        self.nodes = g.nodes
        self.n = g.n
        pos: Counter = Counter()
        neg: Counter = Counter()
        for u, v, s in g.edges():
            i, j = g.index(u), g.index(v)
            key = (i, j) if i < j else (j, i)
            if s is Sign.POS:
                pos[key] += 1
            else:
                neg[key] += 1
        self.base = 0
        self.mixed = 0
        self.adj: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for key in set(pos) | set(neg):
            p, q = pos[key], neg[key]
            self.base += min(p, q)
            self.mixed += min(p, q)
            w = p - q
            if w:
                i, j = key
                self.adj[i][j] = w
                self.adj[j][i] = w

    def cost(self, x: Sequence[int]) -> int:
        total = self.base
        for i, nb in enumerate(self.adj):
            xi = x[i]
            for j, w in nb.items():
                if j > i and (w > 0) == (xi != x[j]):
                    total += abs(w)
        return total

    def components(self) -> list[list[int]]:
        """Connected components of the weighted graph, each sorted, in order of first node."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps


class _BudgetExceeded(Exception):
    pass


class _Found(Exception):
    pass


class _Budget:
    def __init__(self, node_budget: int, time_budget: float):
        self.node_budget = node_budget
        self.deadline = time.monotonic() + time_budget
        self.nodes = 0

    def check(self) -> None:
        if self.nodes > self.node_budget or time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def out_of_time(self) -> bool:
        return time.monotonic() > self.deadline


class _Search:
    """Branch-and-bound over a fixed node order on a weighted subgraph.

    Nodes are relabelled by their depth in ``order``; ``later[d]`` lists the
    neighbours placed after depth ``d`` together with the pair weight.
    """

    def __init__(self, red: _Reduced, order: Sequence[int], budget: _Budget):
        self.order = list(order)
        self.k = len(order)
        depth = {v: d for d, v in enumerate(order)}
        self.later = []
        for v in order:
            d = depth[v]
            self.later.append([(depth[u], w) for u, w in red.adj[v].items() if u in depth and depth[u] > d])
        self.budget = budget
        self.suf = [0] * (self.k + 1)

    def _run(self, start, threshold, mode, fixed=None, floor=None, cap=None):
        """Search depths start..k-1 with node ``start`` anchored to side 0.

        mode "min": return (cost, sides) of the best leaf with cost <= threshold, or None.
        mode "first": first leaf with cost <= threshold (choices tried 0 before 1).
        mode "all": every leaf with cost <= threshold, 0 before 1, up to ``cap`` + 1.
        """
        k = self.k
        later = self.later
        suf = self.suf
        budget = self.budget
        c0 = [0] * k
        c1 = [0] * k
        side = [-1] * k
        best = [threshold]
        found = []
        ordered_choices = mode != "min"

        def rec(d, cur, summin):
            budget.nodes += 1
            if not budget.nodes & 1023:
                budget.check()
            if d == k:
                if mode == "min":
                    found[:] = [(cur, side[start:])]
                    best[0] = cur - 1
                    if floor is not None and cur <= floor:
                        raise _Found
                else:
                    found.append((cur, side[start:]))
                    if mode == "first" or (cap is not None and len(found) > cap):
                        raise _Found
                return
            a0 = c0[d]
            a1 = c1[d]
            summin -= a0 if a0 < a1 else a1
            nxt = suf[d + 1]
            if d == start:
                choices = (0,)
            elif fixed is not None and fixed[d] >= 0:
                choices = (fixed[d],)
            elif ordered_choices or a0 <= a1:
                choices = (0, 1)
            else:
                choices = (1, 0)
            nbrs = later[d]
            for s in choices:
                ncur = cur + (a1 if s else a0)
                if ncur + summin + nxt > best[0]:
                    continue
                side[d] = s
                delta = 0
                for u, w in nbrs:
                    x0 = c0[u]
                    x1 = c1[u]
                    old = x0 if x0 < x1 else x1
                    if w > 0:
                        if s:
                            x0 += w
                            c0[u] = x0
                        else:
                            x1 += w
                            c1[u] = x1
                    else:
                        if s:
                            x1 -= w
                            c1[u] = x1
                        else:
                            x0 -= w
                            c0[u] = x0
                    delta += (x0 if x0 < x1 else x1) - old
                if ncur + summin + delta + nxt <= best[0]:
                    rec(d + 1, ncur, summin + delta)
                for u, w in nbrs:
                    if w > 0:
                        if s:
                            c0[u] -= w
                        else:
                            c1[u] -= w
                    else:
                        if s:
                            c1[u] += w
                        else:
                            c0[u] += w
                side[d] = -1

        try:
            rec(start, 0, 0)
        except _Found:
            pass
        if mode == "min":
            return found[0] if found else None
        return found

    def russian_doll(self, progress=None) -> list[int]:
        """Exact optimum of every suffix of the order; returns the sides of the full optimum.

        ``progress`` (a list) receives the index of the shortest suffix solved so
        far, so that a budget interruption still leaves a valid lower bound.
        """
        k = self.k
        suf = self.suf
        prev: list[int] = []
        for s in range(k - 1, -1, -1):
            # Warm start: optimum of the shorter suffix plus the cheaper side for node s.
            cost = [0, 0]
            for u, w in self.later[s]:
                xu = prev[u - s - 1]
                for xs in (0, 1):
                    if (w > 0) == (xs != xu):
                        cost[xs] += abs(w)
            xs = 0 if cost[0] <= cost[1] else 1
            incumbent = [xs] + prev
            if xs:
                incumbent = [1 - x for x in incumbent]
            ub = suf[s + 1] + cost[xs]
            if ub > suf[s + 1]:
                hit = self._run(s, ub - 1, "min", floor=suf[s + 1])
                if hit is not None:
                    ub, incumbent = hit
            suf[s] = ub
            prev = incumbent
            if progress is not None:
                progress.append(s)
        return prev

    def lexmin(self, L: int, witness: list[int], lex_rank: Sequence[int]) -> list[int]:
        """Lexicographically smallest optimal side vector (node order given by ``lex_rank``)."""
        fixed = [-1] * self.k
        fixed[0] = 0
        for d in sorted(range(1, self.k), key=lambda d: lex_rank[d]):
            if witness[d] == 0:
                fixed[d] = 0
                continue
            fixed[d] = 0
            hit = self._run(0, L, "first", fixed=fixed)
            if hit:
                witness = hit[0][1]
            else:
                fixed[d] = 1
        return witness


class _Kernel:
    """Exact size reduction of one component, with the steps needed to undo it.

    A node with one remaining neighbour can always copy (or oppose) it at no
    cost, so it is dropped. A node with exactly two neighbours ``a`` and ``b``
    is replaced by a single a-b edge of weight ``sign(w1) * sign(w2) * min(|w1|, |w2|)``,
    which charges exactly what the best side of the removed node would cost.
    Parallel edges of opposite sign merge into their difference plus a constant.
    """

    def __init__(self, red: _Reduced, comp: Sequence[int]):
        adj = {v: dict(red.adj[v]) for v in comp}
        self.const = 0
        self.removed: list[tuple[int, tuple[tuple[int, int], ...]]] = []
        queue = sorted(v for v in comp if len(adj[v]) <= 2)
        while queue:
            v = queue.pop()
            if v not in adj or len(adj[v]) > 2:
                continue
            nb = adj.pop(v)
            self.removed.append((v, tuple(nb.items())))
            for u in nb:
                del adj[u][v]
            if len(nb) == 2:
                (a, w1), (b, w2) = nb.items()
                k = min(abs(w1), abs(w2))
                w = k if (w1 > 0) == (w2 > 0) else -k
                old = adj[a].get(b, 0)
                if old and (old > 0) != (w > 0):
                    self.const += min(abs(old), k)
                merged = old + w
                if merged:
                    adj[a][b] = adj[b][a] = merged
                else:
                    del adj[a][b]
                    del adj[b][a]
            for u in nb:
                if len(adj[u]) <= 2:
                    queue.append(u)
        self.adj = adj

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in sorted(self.adj):
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def lift(self, x: list[int]) -> None:
        """Give every removed node its cheapest side, given the sides already set in ``x``."""
        for v, nb in reversed(self.removed):
            cost = [0, 0]
            for u, w in nb:
                for xv in (0, 1):
                    if (w > 0) == (xv != x[u]):
                        cost[xv] += abs(w)
            x[v] = 0 if cost[0] <= cost[1] else 1


def _mcs_order(adj: dict[int, dict[int, int]], nodes: Sequence[int]) -> list[int]:
    """Maximum-cardinality-search order from the lowest node, weighted by |w|.

    Keeps the decided set connected, so every undecided frontier node already
    feels a pull towards one side.
    """
    start = nodes[0]
    score = {v: 0 for v in nodes}
    strength = {v: sum(abs(w) for w in adj[v].values()) for v in nodes}
    order = [start]
    rest = set(nodes) - {start}
    for u, w in adj[start].items():
        score[u] += abs(w)
    while rest:
        v = max(rest, key=lambda v: (score[v], strength[v], -v))
        order.append(v)
        rest.discard(v)
        for u, w in adj[v].items():
            if u in rest:
                score[u] += abs(w)
    return order


def _pack_cycles(adj: Sequence[dict[int, int]], cap: dict, lo: int, root: dict[int, int] | None = None) -> int:
    """Greedily pack edge-disjoint unbalanced cycles among nodes >= ``lo``.

    ``cap`` maps (a, b) to the remaining signed capacity of that edge (stored
    both ways) and is consumed. With ``root`` given, only cycles through an
    extra node -1 are packed, ``root[u]`` being the signed capacity of u-(-1).
    Each packed unit forces one more frustrated unit, so the count is a lower bound.
    """
    total = 0
    sources = [-1] if root is not None else range(lo, len(adj))
    for s in sources:
        while True:
            parent = {(s, 0): None}
            queue = deque([(s, 0)])
            hit = None
            while queue and hit is None:
                v, par = queue.popleft()
                if v == -1:
                    steps = list(root.items())
                else:
                    steps = [(u, cap.get((v, u), 0)) for u in adj[v] if u >= lo]
                    if root is not None and root.get(v):
                        steps.append((-1, root[v]))
                for u, w in steps:
                    if not w:
                        continue
                    q = par ^ (w < 0)
                    if (u, q) in parent:
                        continue
                    parent[(u, q)] = (v, par)
                    if u == s:
                        if q:
                            hit = (u, q)
                            break
                        continue
                    queue.append((u, q))
            if hit is None:
                break
            uses: Counter = Counter()
            cur = hit
            while parent[cur] is not None:
                prev = parent[cur]
                a, b = prev[0], cur[0]
                uses[(a, b) if a < b else (b, a)] += 1
                cur = prev

            def weight(a, b):
                return root[b] if a == -1 else cap[(a, b)]

            k = min(abs(weight(a, b)) // c for (a, b), c in uses.items())
            if k == 0:
                break
            for (a, b), c in uses.items():
                w = weight(a, b)
                nw = w - c * k if w > 0 else w + c * k
                if a == -1:
                    root[b] = nw
                else:
                    cap[(a, b)] = cap[(b, a)] = nw
            total += k
    return total


class _PackingSearch:
    """Branch-and-bound for large sparse kernels.

    Nodes are decided in a fixed connected order. Beyond the usual
    decided-cost and cheapest-side terms, the bound adds two cycle packings:
    one among the undecided nodes (precomputed per depth) and one through the
    decided block, which is contracted into a single root whose edge to an
    undecided node carries that node's side preference.
    """

    def __init__(self, adj: dict[int, dict[int, int]], nodes: Sequence[int], budget: _Budget):
        self.order = _mcs_order(adj, nodes)
        depth = {v: d for d, v in enumerate(self.order)}
        k = self.k = len(self.order)
        self.adj = [{depth[u]: w for u, w in adj[v].items()} for v in self.order]
        self.budget = budget
        self.suf = [0] * (k + 1)
        self.rescap: list[dict] = [{} for _ in range(k + 1)]
        for d in range(k - 1, -1, -1):
            cap = {(a, b): w for a in range(d, k) for b, w in self.adj[a].items() if b >= d}
            self.suf[d] = _pack_cycles(self.adj, cap, d)
            self.rescap[d] = cap
            budget.check()

    def cost(self, x: Sequence[int]) -> int:
        return sum(abs(w) for a in range(self.k) for b, w in self.adj[a].items() if b > a and (w > 0) == (x[a] != x[b]))

    def solve(self, upper: int) -> None:
        """Search for sides cheaper than ``upper``.

        Afterwards ``best_cost`` is the optimum (or ``upper`` if nothing beats
        it) and ``best_sides`` the improving sides by depth, if any were found.
        Improvements found before a budget stop are kept.
        """
        k, adj, budget = self.k, self.adj, self.budget
        c0 = [0] * k
        c1 = [0] * k
        side = [-1] * k
        self.best_cost, self.best_sides = upper, None
        best = self

        def bound(d, cur):
            b = cur + self.suf[d]
            root = {}
            for u in range(d, k):
                a0, a1 = c0[u], c1[u]
                b += a0 if a0 < a1 else a1
                if a0 != a1:
                    root[u] = a1 - a0
            if b >= best.best_cost:
                return b
            return b + _pack_cycles(adj, dict(self.rescap[d]), d, root)

        def rec(d, cur):
            budget.nodes += 1
            if not budget.nodes & 63:
                budget.check()
            if d == k:
                if cur < best.best_cost:
                    best.best_cost, best.best_sides = cur, list(side)
                return
            a0, a1 = c0[d], c1[d]
            if d == 0:
                choices = (0,)
            else:
                choices = (0, 1) if a0 <= a1 else (1, 0)
            for s in choices:
                side[d] = s
                for u, w in adj[d].items():
                    if u > d:
                        if (w > 0) == (s == 1):
                            c0[u] += abs(w)
                        else:
                            c1[u] += abs(w)
                ncur = cur + (a1 if s else a0)
                if bound(d + 1, ncur) < best.best_cost:
                    rec(d + 1, ncur)
                for u, w in adj[d].items():
                    if u > d:
                        if (w > 0) == (s == 1):
                            c0[u] -= abs(w)
                        else:
                            c1[u] -= abs(w)
            side[d] = -1

        rec(0, 0)


def _branching_order(red: _Reduced, comp: list[int]) -> list[int]:
    """Lowest node first (symmetry anchor), then by descending weighted degree."""
    anchor = comp[0]
    rest = sorted(comp[1:], key=lambda v: (-sum(abs(w) for w in red.adj[v].values()), v))
    return [anchor] + rest


# ---------------------------------------------------------------------------
# Bounds


def lower_bound(g: SignedDigraph) -> int:
    """Combinatorial lower bound on the frustration index.

    Counts reciprocal pairs carrying both signs (one of the two arcs is always
    frustrated), then greedily packs arc-disjoint unbalanced semicycles on the
    remaining arcs; each needs at least one frustrated arc of its own.
    """
    red = _Reduced(g)
    cap = [dict(nb) for nb in red.adj]
    bound = red.mixed
    for a in range(red.n):
        for b in sorted(x for x in red.adj[a] if x > a):
            if not cap[a].get(b):
                continue
            for c in sorted(x for x in red.adj[a] if x > b and x in red.adj[b]):
                wab, wac, wbc = cap[a].get(b, 0), cap[a].get(c, 0), cap[b].get(c, 0)
                if not (wab and wac and wbc):
                    if not wab:
                        break
                    continue
                if wab * wac * wbc < 0:
                    k = min(abs(wab), abs(wac), abs(wbc))
                    bound += k
                    for x, y, w in ((a, b, wab), (a, c, wac), (b, c, wbc)):
                        nw = w - k if w > 0 else w + k
                        cap[x][y] = cap[y][x] = nw
    return bound


def _edge_cost(adj: Sequence[dict[int, int]], x: Sequence[int]) -> int:
    return sum(abs(w) for i, nb in enumerate(adj) for j, w in nb.items() if j > i and (w > 0) == (x[i] != x[j]))


def _tree_start(adj: Sequence[dict[int, int]], rng: random.Random) -> list[int]:
    """Sides that satisfy every edge of a random BFS spanning forest."""
    n = len(adj)
    x = [-1] * n
    roots = list(range(n))
    rng.shuffle(roots)
    for r in roots:
        if x[r] >= 0:
            continue
        x[r] = rng.randint(0, 1)
        queue = deque([r])
        while queue:
            v = queue.popleft()
            nb = list(adj[v].items())
            rng.shuffle(nb)
            for u, w in nb:
                if x[u] < 0:
                    x[u] = x[v] if w > 0 else 1 - x[v]
                    queue.append(u)
    return x


def _climb(adj: Sequence[list[tuple[int, int]]], x: list[int], rng: random.Random) -> list[int]:
    """Flip single nodes while some flip lowers the cost."""
    n = len(adj)
    improved = True
    while improved:
        improved = False
        order = list(range(n))
        rng.shuffle(order)
        for v in order:
            xv = x[v]
            delta = 0
            for u, w in adj[v]:
                delta += w if x[u] == xv else -w
            if delta < 0:
                x[v] = 1 - xv
                improved = True
    return x


def _local_search_lists(adj: Sequence[dict[int, int]], restarts: int, seed: int, deadline: float | None = None):
    """Hill climbing from alternating uniform-random and spanning-tree starts.

    Returns the best sides (first node on side 0) and their cost, excluding any constant.
    """
    rng = random.Random(seed)
    n = len(adj)
    pairs = [list(nb.items()) for nb in adj]
    best_x = [0] * n
    best_cost = _edge_cost(adj, best_x)
    for r in range(restarts):
        x = [rng.randint(0, 1) for _ in range(n)] if r % 2 == 0 else _tree_start(adj, rng)
        x = _climb(pairs, x, rng)
        cost = _edge_cost(adj, x)
        if cost < best_cost:
            best_x, best_cost = x, cost
        if deadline is not None and time.monotonic() > deadline:
            break
    if best_x and best_x[0] == 1:
        best_x = [1 - v for v in best_x]
    return best_x, best_cost


def _local_search_reduced(red: _Reduced, restarts: int, seed: int, deadline: float | None = None):
    x, cost = _local_search_lists(red.adj, restarts, seed, deadline)
    return x, cost + red.base


def _to_partition(red: _Reduced, x: Sequence[int]) -> Partition:
    return Partition(dict(zip(red.nodes, x))).canonical()


def local_search(g: SignedDigraph, opts: SolveOptions | None = None) -> tuple[Partition, int]:
    """Best partition found by single-node-flip hill climbing from ``opts.restarts`` starts.

    Even-numbered restarts start from uniformly random sides, odd-numbered ones
    from sides that satisfy a random spanning tree.
    """
    opts = opts or SolveOptions()
    red = _Reduced(g)
    x, cost = _local_search_reduced(red, opts.restarts, opts.seed, time.monotonic() + opts.time_budget)
    return _to_partition(red, x), cost


def bounds(g: SignedDigraph, opts: SolveOptions | None = None) -> Bounds:
    part, upper = local_search(g, opts)
    return Bounds(lower_bound(g), upper, part)


# ---------------------------------------------------------------------------
# Exact solving


# Components (and kernels) up to this size go to the exhaustive-suffix search,
# which also yields the lexicographically smallest optimum directly.
SMALL_COMPONENT = 64


def _solve_small(red, comp, budget, x) -> tuple[int, int, bool]:
    """Russian-doll search plus lexicographic tie-break; returns (cost, lower, proven)."""
    search = _Search(red, _branching_order(red, comp), budget)
    progress: list[int] = []
    try:
        witness = search.russian_doll(progress)
    except _BudgetExceeded:
        return 0, (search.suf[progress[-1]] if progress else 0), False
    L = search.suf[0]
    try:
        # Component indices follow global node order, so depth order is lex order.
        witness = search.lexmin(L, witness, search.order)
    except _BudgetExceeded:
        pass
    for d, v in enumerate(search.order):
        x[v] = witness[d]
    return L, L, True


class _AdjView:
    def __init__(self, adj):
        self.adj = adj


def _kernel_cost(adj, nodes, x) -> int:
    return sum(abs(w) for v in nodes for u, w in adj[v].items() if u > v and (w > 0) == (x[u] != x[v]))


def _solve_kernelized(red, comp, budget, x, opts: SolveOptions) -> tuple[int, bool]:
    """Kernelize a large component, solve each kernel piece, then lift back to all nodes.

    ``x`` holds starting sides on entry and the best sides found on exit.
    Returns (lower bound on the component's cost, proven).
    """
    kern = _Kernel(red, comp)
    view = _AdjView(kern.adj)
    lower = kern.const
    proven = True
    for kc in kern.components():
        if len(kc) == 1:
            continue
        if len(kc) <= SMALL_COMPONENT:
            saved = [x[v] for v in kc]
            _, lo, ok = _solve_small(view, kc, budget, x)
            if not ok:
                for v, sv in zip(kc, saved):
                    x[v] = sv
            lower += lo
            proven = proven and ok
            continue
        pos = {v: i for i, v in enumerate(kc)}
        local = [{pos[u]: w for u, w in kern.adj[v].items()} for v in kc]
        # Kernels are small, so an incumbent from many more restarts is cheap and pays off.
        ls_deadline = min(budget.deadline, time.monotonic() + opts.time_budget / 10)
        sides, c = _local_search_lists(local, 10 * opts.restarts, opts.seed, ls_deadline)
        if c < _kernel_cost(kern.adj, kc, x):
            for i, v in enumerate(kc):
                x[v] = sides[i]
        c = _kernel_cost(kern.adj, kc, x)
        search = None
        try:
            search = _PackingSearch(kern.adj, kc, budget)
            search.solve(c)
            lower += search.best_cost
        except _BudgetExceeded:
            proven = False
            lower += search.suf[0] if search is not None else 0
        if search is not None and search.best_sides is not None:
            for d, v in enumerate(search.order):
                x[v] = search.best_sides[d]
    kern.lift(x)
    if x[comp[0]]:
        for v in comp:
            x[v] = 1 - x[v]
    return lower, proven


def solve_exact(g: SignedDigraph, opts: SolveOptions | None = None) -> SolveResult:
    """Frustration index with a certificate partition.

    The partition reported for a proven result is the canonical optimum with
    the lowest node on side 0; for components small enough for the exhaustive
    suffix search it is the lexicographically smallest optimal side vector.
    When a budget runs out the result has ``proven=False`` and carries the best
    partition and bounds found so far.
    """
    opts = opts or SolveOptions()
    t0 = time.monotonic()
    red = _Reduced(g)
    budget = _Budget(opts.node_budget, opts.time_budget)
    if g.m == 0:
        part = Partition({v: 0 for v in g.nodes})
        optima = enumerate_optima(g, opts.enumeration_cap, opts) if opts.enumerate_all else None
        return SolveResult(0, part, True, 0, 0, 0, optima, time.monotonic() - t0)

    ls_x, ls_cost = _local_search_reduced(red, opts.restarts, opts.seed, budget.deadline)
    lb0 = lower_bound(g)
    if g.m > LARGE_NETWORK_EDGES and not opts.exact_large:
        part = _to_partition(red, ls_x)
        return SolveResult(ls_cost, part, ls_cost == lb0, 0, lb0, ls_cost, None, time.monotonic() - t0)

    x = list(ls_x)
    lower = red.base
    proven = True
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * red.n + 1000))
    try:
        for comp in red.components():
            if len(comp) == 1:
                x[comp[0]] = 0
                continue
            if len(comp) <= SMALL_COMPONENT:
                _, lo, ok = _solve_small(red, comp, budget, x)
            else:
                lo, ok = _solve_kernelized(red, comp, budget, x, opts)
            lower += lo
            proven = proven and ok
    finally:
        sys.setrecursionlimit(limit)

    total = red.cost(x)
    if not proven:
        if ls_cost < total:
            x, total = ls_x, ls_cost
        lower = max(lower, lb0)
        part = _to_partition(red, x)
        return SolveResult(total, part, lower == total, budget.nodes, lower, total, None, time.monotonic() - t0)
    if total != lower:
        raise AssertionError(f"solver inconsistency: partition costs {total}, optimum {lower}")
    part = _to_partition(red, x)
    optima = None
    if opts.enumerate_all:
        optima = enumerate_optima(g, opts.enumeration_cap, opts)
        if optima.proven and optima.partitions:
            part = optima.partitions[0]
    return SolveResult(total, part, True, budget.nodes, total, total, optima, time.monotonic() - t0)


def enumerate_optima(g: SignedDigraph, cap: int = 1000, opts: SolveOptions | None = None) -> Optima:
    """All canonical partitions attaining the frustration index, in lexicographic order.

    Canonical means the lowest node is on side 0, so a partition and its
    complement are counted once. At most ``cap`` partitions are returned;
    ``truncated`` tells whether more exist.
    """
    opts = opts or SolveOptions()
    red = _Reduced(g)
    budget = _Budget(opts.node_budget, opts.time_budget)
    if red.n == 0:
        return Optima((Partition({}),), 0)
    search = _Search(red, list(range(red.n)), budget)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * red.n + 1000))
    try:
        search.russian_doll()
        L = search.suf[0]
        hits = search._run(0, L, "all", cap=cap)
    except _BudgetExceeded:
        return Optima((), None, truncated=True, proven=False)
    finally:
        sys.setrecursionlimit(limit)
    truncated = len(hits) > cap
    parts = tuple(Partition(dict(zip(red.nodes, sides))) for _, sides in hits[:cap])
    return Optima(parts, red.base + L, truncated)
