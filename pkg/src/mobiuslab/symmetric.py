"""Symmetric Boolean functions described by level vectors.

A symmetric f on n variables is fixed by n + 1 bits in two ways:

* ``LambdaVector``: λ_k = 1 iff every monomial of degree k is in the ANF,
  so f = ⊕ λ_k Σ_k where Σ_k is the elementary symmetric polynomial;
* ``ValueVector``: v_k = f(a) for any valuation a of weight k.

The level-k monomials contribute C(j, k) mod 2 = [k ⪯ j] to the value at a
weight-j valuation, so v_j = ⊕_{k ⪯ j} λ_k.
"""

from dataclasses import dataclass

import numpy as np

from . import _bits
from .core import BooleanFunction, check_n


def lucas(k, j):
    """C(k, j) mod 2, which is 1 iff the binary digits of j are among those of k."""
    if k < 0 or j < 0:
        raise ValueError("lucas coefficients need non-negative arguments")
    return int(j & ~k == 0)


@dataclass(frozen=True)
class _LevelVector:
    bits: tuple

    prefix = ""

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if len(bits) < 2 or any(b not in (0, 1) for b in bits):
            raise ValueError("level vector needs n + 1 >= 2 entries in {0, 1}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def unit(cls, k, n):
        return cls(tuple(int(i == k) for i in range(n + 1)))

    @classmethod
    def zero(cls, n):
        return cls((0,) * (n + 1))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith(cls.prefix + "="):
            text = text[len(cls.prefix) + 1 :]
        return cls(tuple(int(c) for c in text))

    @property
    def n(self):
        return len(self.bits) - 1

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, k):
        return self.bits[k]

    def __xor__(self, other):
        if type(other) is not type(self) or other.n != self.n:
            return NotImplemented
        return type(self)(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __str__(self):
        return f"{self.prefix}={''.join(map(str, self.bits))}"


class LambdaVector(_LevelVector):
    """λ_0 ... λ_n: which full degree levels occur in the ANF."""

    prefix = "λ"


class ValueVector(_LevelVector):
    """v_0 ... v_n: the value taken on each weight level."""

    prefix = "v"


def _level_transform(bits):
    n = len(bits) - 1
    return tuple(
        sum(bits[k] for k in range(j + 1) if lucas(j, k)) % 2 for j in range(n + 1)
    )


def lambda_to_values(lam):
    return ValueVector(_level_transform(lam.bits))


def values_to_lambda(v):
    """Inverse of :func:`lambda_to_values` (the level map is an involution)."""
    return LambdaVector(_level_transform(v.bits))


def symmetric_to_function(lam):
    n = check_n(lam.n)
    values = np.array(lambda_to_values(lam).bits, dtype=np.uint8)
    weights = np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)
    return BooleanFunction._wrap(n, _bits.pack(values[weights]))


def is_symmetric(f):
    weights = np.bitwise_count(np.arange(1 << f.n, dtype=np.uint64)).astype(np.int64)
    table = f.to_array()
    levels = table[(1 << np.arange(f.n + 1)) - 1]
    return bool(np.array_equal(levels[weights], table))


def values_of(f):
    if not is_symmetric(f):
        raise ValueError("function is not symmetric")
    return ValueVector(tuple(f[(1 << k) - 1] for k in range(f.n + 1)))


def lambda_of(f):
    return values_to_lambda(values_of(f))


def mu_sigma(k, n):
    """λ(μ_n(Σ_k)), which coincides with v(Σ_k): entry j is [k ⪯ j]."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return ValueVector(tuple(lucas(j, k) for j in range(n + 1)))


def _level_condition(bits, j):
    acc = 0
    for k in range(j):
        if lucas(j, k):
            acc ^= bits[k]
    return acc


def is_coincident_lambda(lam):
    """Coincidence read off λ: for every j the XOR of λ_k over k < j, k ⪯ j vanishes."""
    return all(_level_condition(lam.bits, j) == 0 for j in range(lam.n + 1))


def coincident_lambda_masks(n):
    """Boolean mask over all 2**(n+1) λ (as integers, λ_0 in bit 0) that
    satisfy :func:`is_coincident_lambda`; vectorised for exhaustive scans."""
    lams = np.arange(1 << (n + 1), dtype=np.uint64)
    ok = np.ones(lams.shape, dtype=bool)
    for j in range(n + 1):
        sel = sum(1 << k for k in range(j) if lucas(j, k))
        ok &= np.bitwise_count(lams & np.uint64(sel)) % 2 == 0
    return ok


def enumerate_coincident_symmetric(n):
    """Yield every coincident symmetric λ-vector on n variables, each once,
    in lexicographic order of (λ_0, ..., λ_n).

    Levels are appended one at a time; an odd level m first requires the
    XOR of λ_k over k < m, k ⪯ m to vanish on the prefix.
    """
    n = check_n(n, high=64)

    def grow(prefix, m):
        if m > n:
            yield LambdaVector(prefix)
            return
        if m % 2 and _level_condition(prefix, m):
            return
        for b in (0, 1):
            yield from grow(prefix + (b,), m + 1)

    for start in ((0, 0), (0, 1)):
        yield from grow(start, 2)


def random_coincident_symmetric(n, rng):
    """Uniform coincident symmetric λ-vector, built level by level."""
    n = check_n(n, high=64)
    lam = [0, int(rng.integers(0, 2))]
    for m in range(2, n + 1):
        lam.append(int(rng.integers(0, 2)))
        if m % 2 and _level_condition(lam, m):
            lam[m - 1] ^= 1
    return LambdaVector(tuple(lam))


def phi_sigma_collisions(n):
    """Group the k in 0..n by the λ-vector of φ_n(Σ_k).

    Returns a list of groups with more than one k.
    """
    groups = {}
    for k in range(n + 1):
        image = LambdaVector.unit(k, n) ^ LambdaVector(mu_sigma(k, n).bits)
        groups.setdefault(image, []).append(k)
    return [ks for ks in groups.values() if len(ks) > 1]
