"""Shannon and Reed-Muller decompositions on the last variable x_n.

Because x_n is the most significant index bit, both decompositions are the
lower and upper halves of the relevant table.
"""

from . import _bits
from .core import Anf, BooleanFunction, DimensionError, _same_n, check_n


def _split(table, kind):
    if not isinstance(table, kind):
        raise TypeError(f"expected {kind.__name__}, got {type(table).__name__}")
    if table.n < 2:
        raise DimensionError("splitting needs n >= 2")
    n = table.n
    return (
        kind._wrap(n - 1, _bits.lower_half(table.words, n)),
        kind._wrap(n - 1, _bits.upper_half(table.words, n)),
    )


def _join(low, high, kind):
    if not (isinstance(low, kind) and isinstance(high, kind)):
        raise TypeError(f"expected two {kind.__name__} values")
    n = _same_n(low, high)
    check_n(n + 1)
    return kind._wrap(n + 1, _bits.join_halves(low.words, high.words, n))


def shannon_split(f):
    """(f_S^0, f_S^1) with f = (1 ⊕ x_n) f_S^0 ⊕ x_n f_S^1."""
    return _split(f, BooleanFunction)


def shannon_join(f0, f1):
    return _join(f0, f1, BooleanFunction)


def reed_muller_split(g):
    """(f_R^0, f_R^1) with f = f_R^0 ⊕ x_n f_R^1, over ANF tables."""
    return _split(g, Anf)


def rm_join(g0, g1):
    return _join(g0, g1, Anf)
