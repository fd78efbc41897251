"""Truth tables, ANF coefficient tables and the operations between them.

Valuations are ``n``-bit masks with ``x_1`` in the least significant bit.
Bit ``k`` of a truth table holds ``f(a)`` for the valuation ``a`` with mask
``k``; bit ``k`` of an ANF table holds the coefficient of ``x^u`` for
``u.mask == k``.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from . import _bits

N_MAX = int(os.environ.get("MOBIUSLAB_N_MAX", 28))

#: Degree of the zero function.  Compares below every integer and absorbs
#: additions, so ``max(deg(g0), deg(g1) + 1)`` stays meaningful.
ZERO_DEGREE = -math.inf


class DimensionError(ValueError):
    """Operands live on different numbers of variables, or n is out of range."""


def check_n(n, low=1, high=None):
    high = N_MAX if high is None else high
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DimensionError(f"n must be an integer, got {n!r}")
    if not low <= n <= high:
        raise DimensionError(f"n={n} outside [{low}, {high}]")
    return int(n)


def _same_n(*items):
    ns = {item.n for item in items}
    if len(ns) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(ns)}")
    return ns.pop()


@dataclass(frozen=True, order=False)
class Valuation:
    """An element of K_2^n.  ``u <= v`` is the subset order u ⪯ v."""

    mask: int
    n: int

    def __post_init__(self):
        check_n(self.n)
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask} does not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, bits):
        """From ``(u_1, ..., u_n)``."""
        bits = list(bits)
        return cls(sum(int(b) << i for i, b in enumerate(bits)), len(bits))

    @classmethod
    def top(cls, n):
        return cls((1 << n) - 1, n)

    @property
    def weight(self):
        return self.mask.bit_count()

    def bits(self):
        return tuple((self.mask >> i) & 1 for i in range(self.n))

    def complement(self):
        return Valuation(self.mask ^ ((1 << self.n) - 1), self.n)

    def precedes(self, other, strict=False):
        _same_n(self, other)
        below = (self.mask & ~other.mask) == 0
        return below and (not strict or self.mask != other.mask)

    def __le__(self, other):
        return self.precedes(other)

    def __lt__(self, other):
        return self.precedes(other, strict=True)

    def __ge__(self, other):
        return other.precedes(self)

    def __gt__(self, other):
        return other.precedes(self, strict=True)


class BitTable:
    """Immutable packed sequence of ``2**n`` bits."""

    __slots__ = ("n", "_words")

    def __init__(self, n, words):
        n = check_n(n)
        words = np.array(words, dtype=np.uint64).reshape(-1)
        if words.shape[0] != _bits.nwords(n):
            raise ValueError(f"expected {_bits.nwords(n)} words for n={n}, got {words.shape[0]}")
        if n < _bits.WORD_LOG:
            words &= _bits.tail_mask(n)
        words.flags.writeable = False
        self.n = n
        self._words = words

    @classmethod
    def _wrap(cls, n, words):
        # trusted path: words already canonical and owned by the new value
        obj = cls.__new__(cls)
        words.flags.writeable = False
        obj.n = n
        obj._words = words
        return obj

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls._wrap(check_n(n), _bits.zeros(n))

    @classmethod
    def from_bits(cls, bits):
        """From a 0/1 sequence (or a string like ``"0110"``), index 0 first."""
        if isinstance(bits, str):
            bits = [int(c) for c in bits if not c.isspace()]
        arr = np.asarray(bits, dtype=np.int64).reshape(-1)
        size = arr.shape[0]
        if size < 2 or size & (size - 1):
            raise ValueError(f"table length {size} is not a power of two >= 2")
        if ((arr != 0) & (arr != 1)).any():
            raise ValueError("table entries must be 0 or 1")
        n = check_n(size.bit_length() - 1)
        return cls._wrap(n, _bits.pack(arr.astype(np.uint8)))

    @classmethod
    def from_int(cls, value, n):
        """Bit k of ``value`` becomes index k."""
        n = check_n(n)
        if not 0 <= value < (1 << (1 << n)):
            raise ValueError("value does not fit in the table")
        count = _bits.nwords(n)
        words = np.array([(value >> (64 * i)) & 0xFFFFFFFFFFFFFFFF for i in range(count)], dtype=np.uint64)
        return cls._wrap(n, words)

    @classmethod
    def from_indices(cls, n, indices):
        n = check_n(n)
        bits = np.zeros(1 << n, dtype=np.uint8)
        bits[np.asarray(list(indices), dtype=np.int64)] = 1
        return cls._wrap(n, _bits.pack(bits))

    @classmethod
    def random(cls, n, rng):
        return cls._wrap(check_n(n), _bits.random_words(n, rng))

    # access ---------------------------------------------------------------

    @property
    def words(self):
        return self._words

    def __len__(self):
        return 1 << self.n

    def __getitem__(self, k):
        if not 0 <= k < (1 << self.n):
            raise IndexError(k)
        return int((int(self._words[k >> 6]) >> (k & 63)) & 1)

    def to_array(self):
        return _bits.unpack(self._words, self.n)

    def to_bitstring(self):
        return "".join(map(str, self.to_array()))

    def to_int(self):
        return sum(int(w) << (64 * i) for i, w in enumerate(self._words))

    def support(self):
        return np.flatnonzero(self.to_array())

    def popcount(self):
        return int(_bits.popcount(self._words))

    # hex ------------------------------------------------------------------

    def to_hex(self):
        """``"n=<n>:<hex>"``; the bits t_1 ... t_{2^n} read as one big-endian number."""
        bits = self.to_array()
        if self.n >= 3:
            digits = np.packbits(bits, bitorder="big").tobytes().hex()
        else:
            digits = format(int("".join(map(str, bits)), 2), "x")
        return f"n={self.n}:{digits}"

    @classmethod
    def from_hex(cls, text):
        text = text.strip()
        head, sep, digits = text.partition(":")
        if not sep or not head.startswith("n="):
            raise ValueError(f"malformed table {text!r}")
        n = check_n(int(head[2:]))
        size = 1 << n
        width = max(1, size // 4)
        if not digits or len(digits) > width:
            raise ValueError(f"expected at most {width} hex digits for n={n}")
        value = int(digits, 16)
        if value >> size:
            raise ValueError("hex value exceeds the table size")
        if n >= 3:
            raw = np.frombuffer(value.to_bytes(size // 8, "big"), dtype=np.uint8)
            bits = np.unpackbits(raw, bitorder="big")
        else:
            bits = np.array([(value >> (size - 1 - k)) & 1 for k in range(size)], dtype=np.uint8)
        return cls._wrap(n, _bits.pack(bits))

    # comparison / algebra -------------------------------------------------

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._words, other._words)

    def __hash__(self):
        return hash((type(self).__name__, self.n, self._words.tobytes()))

    def __xor__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        _same_n(self, other)
        return type(self)._wrap(self.n, self._words ^ other._words)

    def __repr__(self):
        if self.n <= 5:
            return f"{type(self).__name__}('{self.to_bitstring()}')"
        return f"{type(self).__name__}({self.to_hex()!r})"


class BooleanFunction(BitTable):
    """A function K_2^n -> F_2 given by its truth table T(f)."""

    __slots__ = ()

    @classmethod
    def one(cls, n):
        n = check_n(n)
        return cls._wrap(n, np.full(_bits.nwords(n), _bits.tail_mask(n), dtype=np.uint64))

    @classmethod
    def variable(cls, i, n):
        """The projection x_i, 1 <= i <= n."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        return monomial_truth_table(Valuation(1 << (i - 1), n))

    def __call__(self, a):
        return evaluate(self, a)

    def __and__(self, other):
        return and_(self, other)

    def __invert__(self):
        return self ^ BooleanFunction.one(self.n)


class Anf(BitTable):
    """ANF coefficient table A(f): bit u is the coefficient of x^u."""

    __slots__ = ()

    def monomials(self):
        return [Valuation(int(u), self.n) for u in self.support()]

    def __str__(self):
        terms = []
        for u in self.support():
            u = int(u)
            if u == 0:
                terms.append("1")
            else:
                terms.append("".join(f"x{i + 1}" for i in range(self.n) if u >> i & 1))
        return " + ".join(terms) if terms else "0"


def _check_valuation(a, n):
    if not isinstance(a, Valuation):
        raise TypeError(f"expected a Valuation, got {type(a).__name__}")
    if a.n != n:
        raise DimensionError(f"valuation on {a.n} variables, function on {n}")


def evaluate(f, a):
    _check_valuation(a, f.n)
    return f[a.mask]


def evaluate_anf(g, a):
    """XOR of the coefficients at every u ⪯ a."""
    _check_valuation(a, g.n)
    result = 0
    u = a.mask
    while True:
        result ^= g[u]
        if u == 0:
            return result
        u = (u - 1) & a.mask


def weight(f):
    return f.popcount()


def degree(g):
    """Largest monomial degree of ``g``; ``ZERO_DEGREE`` for the zero ANF."""
    d = int(_bits.degree(g.words, g.n))
    return ZERO_DEGREE if d < 0 else d


def monomial_truth_table(u):
    """T(x^u): ones exactly on the valuations above u."""
    return BooleanFunction._wrap(u.n, _bits.superset_indicator(u.mask, u.n))


def minterm_anf(u):
    """A(M_u) = sum of x^v over u ⪯ v."""
    return Anf._wrap(u.n, _bits.superset_indicator(u.mask, u.n))


def xor(f, g):
    if type(f) is not type(g):
        raise TypeError("xor needs two values of the same kind")
    return f ^ g


def and_(f, g):
    if not (isinstance(f, BooleanFunction) and isinstance(g, BooleanFunction)):
        raise TypeError("pointwise AND is defined on truth tables")
    _same_n(f, g)
    return BooleanFunction._wrap(f.n, f.words & g.words)


def extend(f, k):
    """The same polynomial viewed on n + k variables (table repeated 2**k times)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    check_n(f.n + k)
    if k == 0:
        return f
    return type(f)._wrap(f.n + k, _bits.repeat(f.words, f.n, k))


def anf_of(f):
    """A(f) from T(f)."""
    return Anf._wrap(f.n, _bits.mobius(f.words, f.n))


def function_of(g):
    """T(f) from A(f)."""
    return BooleanFunction._wrap(g.n, _bits.mobius(g.words, g.n))
