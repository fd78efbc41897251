"""The Möbius transform over F_2 and the coincidence operator built on it."""

import numpy as np

from . import _bits
from .core import BooleanFunction, DimensionError, _same_n, check_n

ORACLE_N_MAX = 14


def transform(f):
    """Möbius transform: the function whose truth table is A(f)."""
    return BooleanFunction._wrap(f.n, _bits.mobius(f.words, f.n))


def butterfly_trace(f):
    """Hex dump of the table after each butterfly layer, one line per layer."""
    lines = []
    words = np.array(f.words, copy=True)

    def record(i, w):
        snapshot = BooleanFunction._wrap(f.n, w.copy())
        lines.append(f"layer {i + 1}: {snapshot.to_hex()}")

    _bits.mobius_inplace(words, f.n, callback=record)
    return lines


def _submasks(u):
    subs = []
    s = u
    while True:
        subs.append(s)
        if s == 0:
            return subs
        s = (s - 1) & u


def transform_naive_bits(bits):
    """Reference transform of a ``(batch, 2**n)`` 0/1 array.

    For each u the value is the XOR of f(v) over every submask v of u,
    walked one submask at a time.  The batch is bit-sliced so a single
    reduction serves every function at once.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.ndim == 1:
        return transform_naive_bits(bits[None, :])[0]
    batch, size = bits.shape
    n = size.bit_length() - 1
    check_n(n, high=ORACLE_N_MAX)
    cols = np.packbits(bits.T, axis=1, bitorder="little")
    cols = np.ascontiguousarray(np.pad(cols, ((0, 0), (0, -cols.shape[1] % 8)))).view(np.uint64)
    out = np.empty_like(cols)
    for u in range(size):
        out[u] = np.bitwise_xor.reduce(cols[_submasks(u)], axis=0)
    out = out.view(np.uint8)
    return np.unpackbits(out, axis=1, count=batch, bitorder="little").T.copy()


def transform_naive(f):
    """Subset-sum oracle for :func:`transform`; limited to n <= 14."""
    if f.n > ORACLE_N_MAX:
        raise DimensionError(f"oracle transform limited to n <= {ORACLE_N_MAX}")
    return BooleanFunction.from_bits(transform_naive_bits(f.to_array()))


def phi(f):
    """f ⊕ μ(f); always coincident."""
    return BooleanFunction._wrap(f.n, f.words ^ _bits.mobius(f.words, f.n))


def is_coincident(f):
    return bool(np.array_equal(_bits.mobius(f.words, f.n), f.words))


def is_coincident_lattice(f):
    """Coincidence via the lattice: every u sees an even number of strict
    predecessors in the support."""
    if f.n > ORACLE_N_MAX:
        raise DimensionError(f"lattice check limited to n <= {ORACLE_N_MAX}")
    table = f.to_array()
    for u in range(1, 1 << f.n):
        acc = 0
        for v in _submasks(u)[1:]:
            acc ^= int(table[v])
        if acc:
            return False
    return True


def same_class(f1, f2):
    """Whether f1 and f2 share the same image under phi."""
    _same_n(f1, f2)
    return phi(f1) == phi(f2)


def disjoint_product(f1, f2):
    """f(x) = f1(x_1..x_k) * f2(x_{k+1}..x_n) on n = k + m variables."""
    n = f1.n + f2.n
    check_n(n)
    table = np.outer(f2.to_array(), f1.to_array()).reshape(-1)
    return BooleanFunction.from_bits(table)


def transform_disjoint_product(f1, f2):
    """μ of the product of functions on disjoint variable blocks."""
    k = f1.n
    n = k + f2.n
    if not 0 < k < n:
        raise ValueError("invalid split")
    return transform(disjoint_product(f1, f2))


def lift_upper(f, n):
    """A function on the last ``f.n`` of ``n`` variables, as a table on n."""
    k = n - f.n
    if k < 0:
        raise DimensionError("cannot lift to fewer variables")
    if k == 0:
        return f
    low = BooleanFunction.one(k)
    return disjoint_product(low, f)


__all__ = [
    "ORACLE_N_MAX",
    "butterfly_trace",
    "disjoint_product",
    "is_coincident",
    "is_coincident_lattice",
    "lift_upper",
    "phi",
    "same_class",
    "transform",
    "transform_disjoint_product",
    "transform_naive",
    "transform_naive_bits",
]
