"""Cryptographic measures of Boolean functions.

Everything here is exact integer arithmetic; no floating point.
"""

from dataclasses import dataclass

import numpy as np

from . import _bits
from .core import Anf, DimensionError, check_n

WALSH_N_MAX = 24


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Walsh-Hadamard values W_f(u) indexed by the mask of u."""

    n: int
    values: np.ndarray

    def __getitem__(self, u):
        return int(self.values[u])

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    def max_abs(self):
        return int(np.abs(self.values).max())

    def satisfies_parseval(self):
        return int(np.sum(self.values.astype(np.int64) ** 2)) == 1 << (2 * self.n)


def _check_walsh_n(n):
    if n > WALSH_N_MAX:
        raise DimensionError(f"Walsh spectrum limited to n <= {WALSH_N_MAX}, got n={n}")


def walsh(f):
    """W_f(u) = Σ_a (-1)^(f(a) ⊕ u·a), by the fast in-place transform."""
    _check_walsh_n(f.n)
    values = _bits.walsh(f.to_array())
    values.flags.writeable = False
    return Spectrum(f.n, values)


def walsh_words(words, n):
    """Spectra of a batch of packed tables, shape ``(batch, 2**n)``."""
    _check_walsh_n(n)
    return _bits.walsh(_bits.unpack(words, n))


def nonlinearity(f):
    return (1 << (f.n - 1)) - walsh(f).max_abs() // 2


def nonlinearity_words(words, n):
    spectra = walsh_words(words, n)
    return (1 << (n - 1)) - np.abs(spectra).max(axis=-1).astype(np.int64) // 2


def is_balanced(f):
    return f.popcount() == 1 << (f.n - 1)


def correlation_immune_1(f):
    """First-order correlation immunity: W_f vanishes on every weight-one u."""
    spectrum = walsh(f)
    return all(spectrum[1 << i] == 0 for i in range(f.n))


def ci1_words(words, n):
    """Batched first-order correlation immunity.

    W_f(e_i) = 0 exactly when the support splits evenly on x_i, i.e.
    wt(f) == 2 * wt(f · x_i); this avoids building full spectra.
    """
    total = _bits.popcount(words)
    ok = np.ones(total.shape, dtype=bool)
    for i in range(n):
        var = _bits.superset_indicator(1 << i, n)
        ok &= total == 2 * _bits.popcount(words & var)
    return ok


def degree_distribution(g):
    """Number of ANF monomials of each degree 0..n."""
    if not isinstance(g, Anf):
        raise TypeError("degree_distribution expects an Anf")
    check_n(g.n)
    return _bits.degree_profile(g.words, g.n)


def monomial_count(g):
    return g.popcount()
