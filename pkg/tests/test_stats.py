import csv
import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats as sps

from topoindex.octanes import (
    PRINTED_TABLE2,
    PRINTED_TABLE4,
    PRINTED_TABLE5,
    PRINTED_TABLE6,
    PROPERTY_NAMES,
    TABLE2_ROWS,
    octane_isomers,
)
from topoindex.stats import (
    CorrelationError,
    CorrelationTable,
    correlation_table,
    cross_table,
    index_property_table,
    old_vs_new_table,
    pearson,
    squared_table,
)

finite = st.floats(-1e6, 1e6, allow_nan=False)


def test_known_values():
    assert pearson([1, 2, 3], [2, 4, 6]) == 1.0
    assert pearson([1, 2, 3], [3, 2, 1]) == -1.0
    assert pearson([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(0.8)


@pytest.mark.parametrize("x, y", [([1, 2], [1]), ([1], [1]), ([1, 1, 1], [1, 2, 3]), ([], [])])
def test_errors(x, y):
    with pytest.raises(CorrelationError):
        pearson(x, y)


def test_against_scipy_on_random_vectors():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n = int(rng.integers(3, 40))
        x, y = rng.normal(size=n), rng.normal(size=n)
        assert pearson(x.tolist(), y.tolist()) == pytest.approx(sps.pearsonr(x, y).statistic, abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(finite, finite), min_size=3, max_size=30))
def test_symmetry_and_range(pairs):
    x, y = map(list, zip(*pairs))
    try:
        r = pearson(x, y)
    except CorrelationError:
        return
    assert -1.0 <= r <= 1.0
    assert r == pytest.approx(pearson(y, x), abs=1e-12)


def test_affine_invariance_and_symmetry_1000_pairs():
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(3, 30))
        x, y = rng.normal(size=n).tolist(), rng.normal(size=n).tolist()
        a, c = rng.uniform(0.1, 10) * rng.choice([-1, 1]), rng.uniform(-100, 100)
        b, d = rng.uniform(0.1, 10) * rng.choice([-1, 1]), rng.uniform(-100, 100)
        r = pearson(x, y)
        moved = pearson([a * v + c for v in x], [b * v + d for v in y])
        worst = max(worst, abs(moved - math.copysign(1, a * b) * r), abs(r - pearson(y, x)))
    assert worst < 1e-12


def test_table_shapes_and_csv():
    records = octane_isomers()
    t2 = index_property_table(records)
    assert (t2.rows, t2.cols) == (TABLE2_ROWS, PROPERTY_NAMES)
    rows = list(csv.reader(io.StringIO(t2.to_csv())))
    assert rows[0] == ["index", "Entropy", "AcenFac", "HVAP", "DHVAP"]
    assert rows[1][0] == "S" and len(rows) == 10
    assert t2.to_markdown().count("\n") == 11
    assert len(t2.compare(PRINTED_TABLE2)) <= 4


def test_regenerated_tables_are_consistent():
    records = octane_isomers()
    t2 = index_property_table(records)
    t4 = squared_table(t2)
    for (_, _, r), (_, _, r2) in zip(t2.cells(), t4.cells()):
        assert abs(r * r - r2) <= 1e-12
    t5 = old_vs_new_table(records)
    assert t5.get("s_beta", "m2") == 1.0
    t6 = cross_table(records)
    assert all(t6.get(k, k) == 1.0 for k in t6.rows)
    for a, b, v in t6.cells():
        assert v == t6.get(b, a)
    for t, printed in ((t4, PRINTED_TABLE4), (t5, PRINTED_TABLE5), (t6, PRINTED_TABLE6)):
        assert len(t.compare(printed)) <= 4


def test_table_validation():
    with pytest.raises(ValueError):
        CorrelationTable(("a",), ("b",), ((1.5,),))
    with pytest.raises(ValueError):
        CorrelationTable(("a", "b"), ("c",), ((0.1,),))


def test_correlation_table_identity_shortcut():
    x = [1.0, 2.0, 4.0]
    t = correlation_table({"x": x}, {"x": x, "y": [3.0, 1.0, 2.0]})
    assert t.get("x", "x") == 1.0
