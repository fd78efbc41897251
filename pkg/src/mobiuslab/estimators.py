"""scikit-learn compatible transformers over batches of truth tables.

``X`` is a ``(n_samples, 2**n)`` array of 0/1 values: one truth table per
row, column k holding f(a) for the valuation with mask k.  The
transformers are stateless apart from recording n, so they drop into
pipelines and ``clone`` without surprises.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import _bits
from .core import BitTable, check_n
from .metrics import WALSH_N_MAX, ci1_words, nonlinearity_words

FEATURES = ("weight", "degree", "balanced", "nl", "ci1", "coincident", "monotonic")


def check_truth_tables(X, n=None):
    """Validate a batch of truth tables; returns ``(uint8 array, n)``.

    Accepts a 2-d array-like of zeros and ones, or a sequence of
    :class:`BitTable` values on the same number of variables.
    """
    if isinstance(X, BitTable):
        X = [X]
    if len(X) and isinstance(X[0], BitTable):
        if len({t.n for t in X}) != 1:
            raise ValueError("tables on different numbers of variables")
        X = np.stack([t.to_array() for t in X])
    X = np.asarray(X)
    if X.ndim != 2:
        raise ValueError(f"expected a 2-d array of truth tables, got shape {X.shape}")
    if X.shape[0] == 0:
        raise ValueError("empty batch")
    size = X.shape[1]
    if size < 2 or size & (size - 1):
        raise ValueError(f"{size} columns is not a power of two >= 2")
    if not np.isin(X, (0, 1)).all():
        raise ValueError("truth tables must contain only 0 and 1")
    found = check_n(size.bit_length() - 1)
    if n is not None and found != n:
        raise ValueError(f"X has tables on {found} variables, expected {n}")
    return X.astype(np.uint8), found


class _TableTransformer(TransformerMixin, BaseEstimator):
    def fit(self, X, y=None):
        _, self.n_vars_ = check_truth_tables(X)
        self.n_features_in_ = 1 << self.n_vars_
        return self

    def _validated(self, X):
        check_is_fitted(self, "n_vars_")
        X, _ = check_truth_tables(X, self.n_vars_)
        return X


class MobiusTransformer(_TableTransformer):
    """Maps each truth table to its ANF coefficient table.

    The transform is an involution, so ``inverse_transform`` is the same map.
    """

    def transform(self, X):
        X = self._validated(X)
        return _bits.unpack(_bits.mobius(_bits.pack(X), self.n_vars_), self.n_vars_)

    def inverse_transform(self, X):
        return self.transform(X)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_vars_")
        return np.array([f"anf_{u}" for u in range(self.n_features_in_)], dtype=object)


class CoincidentProjector(_TableTransformer):
    """f -> f ⊕ μ(f), projecting every table onto the coincident functions."""

    def transform(self, X):
        X = self._validated(X)
        words = _bits.pack(X)
        return _bits.unpack(words ^ _bits.mobius(words, self.n_vars_), self.n_vars_)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_vars_")
        return np.array([f"t_{k}" for k in range(self.n_features_in_)], dtype=object)


class BooleanFunctionFeatures(_TableTransformer):
    """One row of exact measures per truth table.

    Degree of the zero function is reported as ``-inf``; the other
    columns are integers (booleans as 0/1) stored in a float array.
    """

    def __init__(self, metrics=FEATURES, monotone_direction="up"):
        self.metrics = metrics
        self.monotone_direction = monotone_direction

    def fit(self, X, y=None):
        unknown = set(self.metrics) - set(FEATURES)
        if unknown:
            raise ValueError(f"unknown metrics {sorted(unknown)}")
        super().fit(X, y)
        if {"nl", "ci1"} & set(self.metrics) and self.n_vars_ > WALSH_N_MAX:
            raise ValueError(f"nl and ci1 need n <= {WALSH_N_MAX}")
        return self

    def transform(self, X):
        X = self._validated(X)
        n = self.n_vars_
        words = _bits.pack(X)
        columns = []
        for name in self.metrics:
            columns.append(_feature(name, words, X, n, self.monotone_direction))
        return np.column_stack(columns).astype(np.float64)

    def get_feature_names_out(self, input_features=None):
        return np.array(list(self.metrics), dtype=object)


def _monotone_rows(X, n, direction):
    idx = np.arange(1 << n)
    ok = np.ones(X.shape[0], dtype=bool)
    for i in range(n):
        low = idx[(idx >> i) & 1 == 0]
        lo, hi = X[:, low], X[:, low | (1 << i)]
        bad = (lo > hi) if direction == "up" else (hi > lo)
        ok &= ~bad.any(axis=1)
    return ok


def _feature(name, words, X, n, direction):
    if name == "weight":
        return _bits.popcount(words)
    if name == "degree":
        deg = _bits.degree(_bits.mobius(words, n), n).astype(np.float64)
        deg[deg < 0] = -np.inf
        return deg
    if name == "balanced":
        return _bits.popcount(words) == 1 << (n - 1)
    if name == "nl":
        return nonlinearity_words(words, n)
    if name == "ci1":
        return ci1_words(words, n)
    if name == "coincident":
        return np.all(_bits.mobius(words, n) == words, axis=-1)
    if name == "monotonic":
        return _monotone_rows(X, n, direction)
    raise ValueError(name)
