import statistics
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import signed_digraphs
from signedbalance.errors import InconsistentOptimaError, UnknownNodeError
from signedbalance.frustration import enumerate_optima, frustration_count, solve_exact
from signedbalance.graph import Partition, Sign, build_graph
from signedbalance.meso import cohesiveness, divisiveness, internal_external_split, meso_report


def test_split_examples():
    g = build_graph([("a", "b", 1), ("b", "c", -1)])
    internal, external = internal_external_split(g, Partition.from_members(g.nodes, []))
    assert len(internal) == 2 and external == []
    dyad = build_graph([("a", "b", 1), ("b", "a", 1)])
    internal, external = internal_external_split(dyad, Partition({"a": 0, "b": 1}))
    assert internal == [] and len(external) == 2
    with pytest.raises(UnknownNodeError):
        internal_external_split(g, Partition({"a": 0}))


def test_all_positive_one_side():
    g = build_graph([("a", "b", 1), ("b", "c", 1)])
    p = Partition.from_members(g.nodes, [])
    assert cohesiveness(g, p) == 1
    assert divisiveness(g, p) is None


def test_exact_ratios():
    g = build_graph([("a", "b", 1), ("b", "a", -1), ("a", "c", -1), ("c", "b", 1), ("b", "d", -1)])
    p = Partition.from_members(g.nodes, ["c", "d"])
    assert cohesiveness(g, p) == Fraction(1, 2)
    assert divisiveness(g, p) == Fraction(2, 3)


def test_single_optimum_has_zero_spread():
    g = build_graph([("a", "b", 1), ("b", "c", -1), ("c", "a", -1)])
    rep = meso_report(g, [solve_exact(g).partition])
    assert rep.C_stddev == 0 and rep.D_stddev == 0
    assert rep.canonical_C == 1 and rep.canonical_D == 1


def test_multiple_optima_spread_and_canonical_choice():
    # Unbalanced triangle plus pendant structure: several optima with different C/D.
    g = build_graph([("a", "b", 1), ("b", "c", 1), ("c", "a", -1), ("c", "d", 1), ("d", "a", 1), ("b", "d", -1)])
    optima = list(enumerate_optima(g))
    assert len(optima) > 1
    rep = meso_report(g, list(reversed(optima)))
    assert rep.per_optimum[0][0] == optima[0]
    assert rep.canonical_C == cohesiveness(g, optima[0])
    cs = [float(c) for _, c, _ in rep.per_optimum]
    assert rep.C_stddev == pytest.approx(statistics.stdev(cs))


def test_sample_spread_matches_published_rounding():
    # Three optima with C = 0.804, 0.793, 0.793 give a spread of 0.006 with the sample formula.
    assert round(statistics.stdev([0.804, 0.793, 0.793]), 3) == 0.006
    assert round(statistics.stdev([0.842, 0.861, 0.861]), 3) == 0.011


def test_inconsistent_optima():
    g = build_graph([("a", "b", 1)])
    with pytest.raises(InconsistentOptimaError):
        meso_report(g, [Partition({"a": 0, "b": 0}), Partition({"a": 0, "b": 1})])
    with pytest.raises(ValueError):
        meso_report(g, [])


@settings(max_examples=80, deadline=None)
@given(g=signed_digraphs(min_n=2, max_n=9), data=st.data())
def test_edge_class_identities(g, data):
    sides = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    p = Partition(dict(zip(g.nodes, sides)))
    internal, external = internal_external_split(g, p)
    assert len(internal) + len(external) == g.m
    neg_in = sum(1 for *_, s in internal if s is Sign.NEG)
    pos_out = sum(1 for *_, s in external if s is Sign.POS)
    assert neg_in + pos_out == frustration_count(g, p)
    for val in (cohesiveness(g, p), divisiveness(g, p)):
        assert val is None or 0 <= val <= 1


@settings(max_examples=40, deadline=None)
@given(g=signed_digraphs(min_n=2, max_n=8), data=st.data())
def test_balanced_graph_extremes(g, data):
    sides = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    side = dict(zip(g.nodes, sides))
    bal = build_graph([(u, v, 1 if side[u] == side[v] else -1) for u, v, _ in g.edges()], nodes=g.nodes)
    p = solve_exact(bal).partition
    assert cohesiveness(bal, p) in (None, 1)
    assert divisiveness(bal, p) in (None, 1)
