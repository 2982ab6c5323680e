import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.linear_model import LinearRegression
from sklearn.pipeline import make_pipeline

from topoindex.estimators import TopologicalIndexTransformer, check_graphs
from topoindex.graph import path_graph
from topoindex.octanes import octane_isomers


def test_transform_defaults():
    X = ["CCCCCCCC", path_graph(8), (8, [(i, i + 1) for i in range(7)])]
    t = TopologicalIndexTransformer().fit(X)
    out = t.transform(X)
    assert out.shape == (3, 11)
    assert (out == out[0]).all()
    assert list(t.get_feature_names_out())[:3] == ["W", "M1", "M2"]


def test_selected_indices_by_label_or_name():
    t = TopologicalIndexTransformer(indices=["S", "s_beta"])
    assert t.fit_transform(["CCCCCCCC"]).tolist() == [[98.0, 48.0]]
    assert list(t.get_feature_names_out()) == ["S", "Sbeta"]


def test_params_and_clone():
    t = TopologicalIndexTransformer(indices=("Smu",))
    assert t.get_params() == {"indices": ("Smu",)}
    c = clone(t)
    assert c.indices == ("Smu",) and not hasattr(c, "indices_")


def test_errors():
    with pytest.raises(NotFittedError):
        TopologicalIndexTransformer().transform(["CC"])
    with pytest.raises(ValueError):
        TopologicalIndexTransformer(indices=["bogus"]).fit(["CC"])
    with pytest.raises(ValueError):
        check_graphs([])
    with pytest.raises(TypeError):
        check_graphs("CCC")
    with pytest.raises(TypeError):
        check_graphs([3.5])


def test_column_array_input():
    X = np.array([["CCC"], ["CC(C)C"]], dtype=object)
    assert check_graphs(X)[1].m == 3


def test_pipeline_fits_octane_property():
    records = octane_isomers()
    X = [r.smiles for r in records]
    y = np.array([r.acen_fac for r in records])
    model = make_pipeline(TopologicalIndexTransformer(indices=["Sbeta"]), LinearRegression()).fit(X, y)
    # squared correlation of a single-feature least-squares fit
    assert model.score(X, y) == pytest.approx(0.9729, abs=0.01)
