"""Coincident functions: fixed points of the Möbius transform.

Every coincident h on n >= 2 variables is determined by its upper Shannon
half g (the *generator*): h = (1 ⊕ x_n) φ_{n-1}(g) ⊕ x_n g.
"""

from collections import defaultdict

import numpy as np

from . import _bits
from .core import BooleanFunction, DimensionError, Valuation, check_n, minterm_anf
from .decompose import shannon_join, shannon_split
from .mobius import is_coincident, phi


class NotCoincidentError(ValueError):
    pass


def _require_coincident(h):
    if not is_coincident(h):
        raise NotCoincidentError("function is not coincident")


def _top(n):
    return BooleanFunction._wrap(n, minterm_anf(Valuation.top(n)).words.copy())


def h_of(u):
    """h_u = x^u ⊕ M_u: ones on the strict supersets of u."""
    words = _bits.superset_indicator(u.mask, u.n)
    words[u.mask >> 6] ^= np.uint64(1 << (u.mask & 63))
    return BooleanFunction._wrap(u.n, words)


def from_generator(g):
    """The coincident function on g.n + 1 variables whose upper half is g."""
    return shannon_join(phi(g), g)


def generator_of(h):
    _require_coincident(h)
    if h.n < 2:
        raise DimensionError("generators exist for n >= 2 only")
    return shannon_split(h)[1]


def from_generator_words(words, n):
    """Batched :func:`from_generator`: ``words`` are tables on n - 1 variables."""
    low = words ^ _bits.mobius(words, n - 1)
    return _bits.join_halves(low, words, n - 1)


def coincident_words(n):
    """All 2**(2**(n-1)) coincident tables on n variables, as packed words.

    Ordered by generator value; intended for n <= 5.
    """
    n = check_n(n, high=5)
    if n == 1:
        return np.array([[0], [0b10]], dtype=np.uint64)
    half = 1 << (n - 1)
    gens = np.arange(1 << half, dtype=np.uint64)[:, None]
    return from_generator_words(gens, n)


def random_coincident(n, rng):
    """Uniform element of C_n: a uniform generator pushed through
    :func:`from_generator`."""
    n = check_n(n)
    if n == 1:
        bit = int(rng.integers(0, 2))
        return BooleanFunction._wrap(1, np.array([bit << 1], dtype=np.uint64))
    return from_generator(BooleanFunction.random(n - 1, rng))


def random_coincident_words(n, rng, batch):
    """``batch`` uniform coincident tables as a ``(batch, nwords)`` array."""
    n = check_n(n)
    if n == 1:
        return rng.integers(0, 2, size=(batch, 1), dtype=np.uint64) << np.uint64(1)
    gens = _bits.random_words(n - 1, rng, (batch,))
    return from_generator_words(gens, n)


def basis(n):
    """h_a for every a with a_n = 0; an F_2 basis of C_n."""
    n = check_n(n)
    return [h_of(Valuation(a, n)) for a in range(1 << (n - 1))]


def dual(h):
    """h ⊕ φ_n(1)."""
    _require_coincident(h)
    return h ^ phi(BooleanFunction.one(h.n))


def toggle_parity(h):
    """h ⊕ x_1...x_n, flipping the weight parity while staying coincident."""
    _require_coincident(h)
    return h ^ _top(h.n)


def monotone_coincident(u):
    """f_u = h_u ⊕ h_ū ⊕ x_1...x_n."""
    return h_of(u) ^ h_of(u.complement()) ^ _top(u.n)


def is_monotonic(f, direction="up"):
    """Whether the support of f is closed upward (``"up"``) or downward
    (``"down"``) in the subset order."""
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    table = f.to_array()
    idx = np.arange(1 << f.n)
    for i in range(f.n):
        low = idx[(idx >> i) & 1 == 0]
        lo, hi = table[low], table[low | (1 << i)]
        if direction == "up" and (lo > hi).any():
            return False
        if direction == "down" and (hi > lo).any():
            return False
    return True


def inf_set(f):
    """Minimal elements of the support of f."""
    table = f.to_array().astype(bool)
    below = table.copy()  # below[u]: some v ⪯ u is in the support
    for i in range(f.n):
        v = below.reshape(-1, 2, 1 << i)
        v[:, 1, :] |= v[:, 0, :]
    strictly = np.zeros_like(table)
    idx = np.arange(1 << f.n)
    for i in range(f.n):
        has = (idx >> i) & 1 == 1
        strictly[has] |= below[idx[has] ^ (1 << i)]
    return {Valuation(int(u), f.n) for u in np.flatnonzero(table & ~strictly)}


def monotone_examples(n):
    """The f_u constructions and their duals, deduplicated.

    Returns a dict mapping each distinct function to the labels that
    produce it, e.g. ``{f: ["f_3", "dual f_4"]}``.
    """
    found = defaultdict(list)
    for mask in range(1 << n):
        f = monotone_coincident(Valuation(mask, n))
        found[f].append(f"f_{mask}")
        found[dual(f)].append(f"dual f_{mask}")
    return dict(found)
