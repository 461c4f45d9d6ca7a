import csv
import io
import json
import math
import random

import pytest

from conftest import random_graph
from reference import LARGE_STATIC, R_F_C_NEWCOMB, R_F_D_NEWCOMB, R_T_F, ROWS, STATIC_T_F
from signedbalance.errors import ConfigError, LengthMismatchError, TooSmallError, ZeroVarianceError
from signedbalance.frustration import SolveOptions, frustration_count, normalized_F, solve_exact
from signedbalance.graph import build_graph
from signedbalance.report import (
    DatasetConfig,
    analyze,
    analyze_results,
    build_networks,
    clustering_coefficient,
    export_partition,
    load_config,
    measure,
    measurement_columns,
    partition_cells,
    pearson,
    read_partitions,
    worker_count,
    write_measurements_csv,
)


def test_clustering_examples():
    complete = build_graph([(u, v, 1) for u in "abcd" for v in "abcd" if u < v])
    assert clustering_coefficient(complete) == 1.0
    star = build_graph([("hub", leaf, 1) for leaf in "abcd"])
    assert clustering_coefficient(star) == 0.0
    with pytest.raises(TooSmallError):
        clustering_coefficient(build_graph([("a", "b", 1)]))


def test_clustering_ignores_direction_and_sign():
    g = build_graph([("a", "b", 1), ("b", "a", -1), ("b", "c", -1), ("c", "a", 1), ("c", "d", 1)])
    assert clustering_coefficient(g) == pytest.approx(3 / 5)


def test_pearson_examples():
    xs = [1.0, 2.0, 4.0, 7.0]
    assert pearson(xs, xs) == pytest.approx(1.0)
    assert pearson(xs, [-x for x in xs]) == pytest.approx(-1.0)
    with pytest.raises(LengthMismatchError):
        pearson([1, 2, 3], [1, 2])
    with pytest.raises(LengthMismatchError):
        pearson([1, 2], [1, 2])
    with pytest.raises(ZeroVarianceError):
        pearson([1, 1, 1], [1, 2, 3])


def test_pearson_on_published_series():
    t, f = zip(*STATIC_T_F.values())
    assert pearson(t, f) == pytest.approx(R_T_F, abs=5e-3)
    newcomb = [v for k, v in ROWS.items() if k.startswith("Newcomb")]
    F = [r[10] for r in newcomb]
    assert pearson(F, [r[11] for r in newcomb]) == pytest.approx(R_F_C_NEWCOMB, abs=5e-3)
    assert pearson(F, [r[12] for r in newcomb]) == pytest.approx(R_F_D_NEWCOMB, abs=5e-3)
    assert len(LARGE_STATIC) == 4


# Published T disagrees with the published triad counts for these rows
# (59/68 = 0.868 vs 0.870, 72/74 = 0.973 vs 0.917).
T_MISPRINTS = {"Highland tribes", "Philosophers acquaintance"}


def test_published_rows_are_internally_consistent():
    for label, (n, m, mp, mm, bal, unbal, T, cc, dens, L, F, C, D) in ROWS.items():
        assert m == mp + mm, label
        assert normalized_F(L, m) == pytest.approx(F, abs=1e-9), label
        consistent = round(bal / (bal + unbal), 3) == pytest.approx(T, abs=1.5e-3)
        assert consistent != (label in T_MISPRINTS), label


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def _toy_rows(rng, times=("T1", "T2", "T3"), n=7):
    lines = ["source,target,weight,time"]
    for t in times:
        for u in range(n):
            for v in range(n):
                if u != v and rng.random() < 0.45:
                    lines.append(f"{u},{v},{rng.choice([-2, -1, 1, 2])},{t}")
    return "\n".join(lines) + "\n"


def test_config_validation(tmp_path):
    with pytest.raises(ConfigError):
        DatasetConfig(label="x", inputs=[])
    with pytest.raises(ConfigError):
        DatasetConfig(label="x", inputs=["a"], mode="weird")
    with pytest.raises(ConfigError):
        DatasetConfig(label="x", inputs=["a"], sign_rule="bogus")
    with pytest.raises(ConfigError):
        DatasetConfig(label="x", inputs=["a", "b"], mode="temporal")
    with pytest.raises(ConfigError):
        DatasetConfig(label="x", inputs=["a"], solver={"node_budget": 0})
    with pytest.raises(ConfigError):
        DatasetConfig(label="x", inputs=["a", "b"])
    with pytest.raises(ConfigError):
        analyze([])
    cfg = _write(tmp_path, "c.json", json.dumps({"datasets": []}))
    with pytest.raises(ConfigError):
        load_config(cfg)
    bad = _write(tmp_path, "d.json", json.dumps({"label": "x", "inputs": "e.csv", "colour": 1}))
    with pytest.raises(ConfigError):
        load_config(bad)


def test_temporal_and_multilayer_networks(tmp_path):
    rng = random.Random(4)
    _write(tmp_path, "t.csv", _toy_rows(rng))
    cfg = DatasetConfig(label="Toy", inputs=[str(tmp_path / "t.csv")], mode="temporal")
    nets = build_networks(cfg)
    assert [label for label, _ in nets] == ["Toy T1", "Toy T2", "Toy T3"]
    picked = DatasetConfig(label="Toy", inputs=[str(tmp_path / "t.csv")], mode="temporal", labels=["T3", "T1"])
    assert [label for label, _ in build_networks(picked)] == ["Toy T3", "Toy T1"]

    text = "source,target,weight,layer\na,b,2,one\nb,c,-2,one\nc,d,1,one\na,b,2,two\nd,a,-2,two\n"
    _write(tmp_path, "m.csv", text)
    ml = DatasetConfig(label="Ml", inputs=[str(tmp_path / "m.csv")], mode="multilayer",
                       sign_rule="threshold:2", symmetrize=True)
    nets = dict(build_networks(ml))
    assert list(nets) == ["Ml one", "Ml two", "Ml flat"]
    assert nets["Ml one"].m == 4 and nets["Ml two"].m == 4 and nets["Ml flat"].m == 6


def test_measure_row_consistency(rng):
    g = random_graph(rng, 12, 0.35)
    res = measure("g", g, SolveOptions(enumerate_all=True))
    row = res.row
    assert row.m == row.m_plus + row.m_minus
    assert row.F == normalized_F(row.L, row.m)
    if row.balanced_triads + row.unbalanced_triads:
        assert row.T == row.balanced_triads / (row.balanced_triads + row.unbalanced_triads)
    assert row.L == frustration_count(g, res.solve.partition) and row.proven
    assert row.optima_count == len(res.solve.all_optima)


def test_analyze_order_outputs_and_workers(tmp_path, monkeypatch):
    rng = random.Random(8)
    _write(tmp_path, "t.csv", _toy_rows(rng, times=("a", "b", "c", "d")))
    _write(tmp_path, "s.csv", "source,target,weight\n1,2,-1\n2,3,1\n3,1,1\n")
    conf = {
        "out": "out",
        "solver": {"time_budget": 60, "enumerate_all": True},
        "datasets": [
            {"label": "Temporal", "inputs": "t.csv", "mode": "temporal"},
            {"label": "Static", "inputs": "s.csv"},
        ],
    }
    path = _write(tmp_path, "cfg.json", json.dumps(conf))
    cfgs = load_config(path)
    assert cfgs[0].out == "out"
    for c in cfgs:
        c.out = str(tmp_path / "out")
    serial = analyze(cfgs, workers=1)
    monkeypatch.setenv("BALANCE_THREADS", "3")
    parallel = analyze(cfgs, workers=8)
    assert serial == parallel
    assert [r.network_label for r in serial] == ["Temporal a", "Temporal b", "Temporal c", "Temporal d", "Static"]

    with open(tmp_path / "out" / "network-measurements.csv", newline="") as fh:
        table = list(csv.DictReader(fh))
    assert list(table[0]) == measurement_columns()
    assert [r["network"] for r in table] == [r.network_label for r in serial]
    assert table[-1]["L"] == "1" and table[-1]["F"] == "0.333"
    mirror = json.loads((tmp_path / "out" / "network-measurements.json").read_text())
    assert [r["network_label"] for r in mirror["rows"]] == [r.network_label for r in serial]

    # Round trip: exported partitions rescore to the reported L.
    with open(tmp_path / "out" / "optimal-partitions.csv", newline="") as fh:
        parts = read_partitions(fh)
    results = analyze_results([DatasetConfig(label=c.label, inputs=c.inputs, mode=c.mode) for c in cfgs])
    for r in results:
        assert frustration_count(r.graph, parts[r.label]) == r.row.L


def test_worker_count_cap(monkeypatch):
    monkeypatch.setenv("BALANCE_THREADS", "2")
    assert worker_count(16) == 2
    assert worker_count(1) == 1
    monkeypatch.setenv("BALANCE_THREADS", "lots")
    with pytest.raises(ConfigError):
        worker_count()


def test_partition_cells_format():
    g = build_graph([(0, 1, 1), (1, 2, -1), (2, 0, 1)])
    res = solve_exact(g)
    cells = partition_cells(g, res)
    assert cells[:3] == ["x0 : 0", "x1 : 0", "x2 : 1"] or cells[0] == "x0 : 0"
    assert "t_0_1 : 3" in cells and "s_1_2 : -1" in cells
    assert sum(c.endswith(": 1") for c in cells if c.startswith("f_")) == res.L
    sink = io.StringIO()
    export_partition(g, res, sink, label="tiny")
    sink.seek(0)
    assert frustration_count(g, read_partitions(sink)["tiny"]) == res.L


def test_unproven_row_shows_bounds(rng):
    g = random_graph(rng, 40, 0.3)
    row = measure("hard", g, SolveOptions(node_budget=20, restarts=2)).row
    assert not row.proven
    sink = io.StringIO()
    write_measurements_csv([row], sink)
    sink.seek(0)
    cells = next(iter(csv.DictReader(sink)))
    assert cells["L"] == f"{row.lower}..{row.upper}" and cells["proven"] == "false"
    lo, hi = cells["F"].split("..")
    assert float(lo) <= float(hi)


def test_determinism_end_to_end(tmp_path):
    rng = random.Random(12)
    _write(tmp_path, "t.csv", _toy_rows(rng))
    cfg = DatasetConfig(label="Toy", inputs=[str(tmp_path / "t.csv")], mode="temporal")
    a = analyze_results(cfg)
    b = analyze_results(cfg)
    assert [r.row for r in a] == [r.row for r in b]
    assert [partition_cells(r.graph, r.solve) for r in a] == [partition_cells(r.graph, r.solve) for r in b]
    assert not any(isinstance(v, float) and math.isnan(v) for r in a for v in vars(r.row).values())
