import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from mobiuslab import _bits
from mobiuslab.coincident import is_monotonic, random_coincident
from mobiuslab.core import BooleanFunction, anf_of, degree
from mobiuslab.estimators import (
    FEATURES,
    BooleanFunctionFeatures,
    CoincidentProjector,
    MobiusTransformer,
    check_truth_tables,
)
from mobiuslab.metrics import correlation_immune_1, nonlinearity
from mobiuslab.mobius import is_coincident, phi, transform


@pytest.fixture
def tables(rng):
    return _bits.unpack(_bits.random_words(6, rng, (40,)), 6)


def test_check_truth_tables():
    X, n = check_truth_tables([[0, 1, 1, 0]])
    assert n == 2 and X.dtype == np.uint8
    X, n = check_truth_tables([BooleanFunction.from_bits("0110"), BooleanFunction.zero(2)])
    assert X.shape == (2, 4)


@pytest.mark.parametrize(
    "bad",
    [
        [0, 1],
        [[0, 1, 1]],
        [[0, 2, 1, 0]],
        np.zeros((0, 4)),
        [[0]],
    ],
)
def test_check_truth_tables_rejects(bad):
    with pytest.raises(ValueError):
        check_truth_tables(bad)


def test_check_truth_tables_mixed_n():
    with pytest.raises(ValueError):
        check_truth_tables([BooleanFunction.zero(2), BooleanFunction.zero(3)])


def test_mobius_transformer(tables):
    est = MobiusTransformer().fit(tables)
    assert est.n_vars_ == 6 and est.n_features_in_ == 64
    out = est.transform(tables)
    for row, image in zip(tables, out):
        assert np.array_equal(image, transform(BooleanFunction.from_bits(row)).to_array())
    assert np.array_equal(est.inverse_transform(out), tables)
    assert est.get_feature_names_out()[:3].tolist() == ["anf_0", "anf_1", "anf_2"]


def test_transform_checks_n(tables):
    est = MobiusTransformer().fit(tables)
    with pytest.raises(ValueError):
        est.transform(tables[:, :32])


def test_not_fitted(tables):
    with pytest.raises(NotFittedError):
        MobiusTransformer().transform(tables)


def test_projector_lands_in_coincident_set(tables):
    out = CoincidentProjector().fit_transform(tables)
    for row, image in zip(tables, out):
        f = BooleanFunction.from_bits(row)
        assert BooleanFunction.from_bits(image) == phi(f)
        assert is_coincident(BooleanFunction.from_bits(image))


def test_features_match_object_api(rng):
    functions = [random_coincident(5, rng) for _ in range(10)] + [BooleanFunction.random(5, rng) for _ in range(10)]
    functions.append(BooleanFunction.zero(5))
    feats = BooleanFunctionFeatures().fit_transform(functions)
    assert feats.shape == (len(functions), len(FEATURES))
    for f, row in zip(functions, feats):
        expected = [
            f.popcount(),
            degree(anf_of(f)),
            f.popcount() == 16,
            nonlinearity(f),
            correlation_immune_1(f),
            is_coincident(f),
            is_monotonic(f),
        ]
        assert row.tolist() == [float(v) for v in expected]
    assert feats[-1, 1] == -np.inf


def test_features_direction():
    f = BooleanFunction.from_bits("10")
    down = BooleanFunctionFeatures(metrics=("monotonic",), monotone_direction="down")
    up = BooleanFunctionFeatures(metrics=("monotonic",))
    assert down.fit_transform([f])[0, 0] == 1
    assert up.fit_transform([f])[0, 0] == 0


def test_features_reject_unknown():
    with pytest.raises(ValueError):
        BooleanFunctionFeatures(metrics=("weight", "bogus")).fit([[0, 1]])


def test_params_and_clone():
    est = BooleanFunctionFeatures(metrics=("weight",), monotone_direction="down")
    assert est.get_params() == {"metrics": ("weight",), "monotone_direction": "down"}
    copy = clone(est)
    assert copy.get_params() == est.get_params() and copy is not est
    est.set_params(metrics=("nl",))
    assert est.metrics == ("nl",)


def test_pipeline(tables):
    # two transforms cancel, so the pipeline measures the original tables
    pipe = make_pipeline(MobiusTransformer(), MobiusTransformer(), BooleanFunctionFeatures(metrics=("weight",)))
    out = pipe.fit_transform(tables)
    assert np.array_equal(out[:, 0], tables.sum(axis=1))
