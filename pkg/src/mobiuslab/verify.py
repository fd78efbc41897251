"""Self-check suite behind ``mobiuslab verify``.

Each check runs against a Möbius kernel passed in by the caller, so a
deliberately broken kernel can be shown to fail the suite.
"""

import math
import time
from dataclasses import dataclass

import numpy as np

from . import _bits
from .experiments import coincident_ci_profile, cor1_count
from .mobius import transform_naive_bits
from .symmetric import coincident_lambda_masks, enumerate_coincident_symmetric


@dataclass
class CheckResult:
    name: str
    statement: str
    passed: bool
    seconds: float
    detail: str = ""


def _all_tables(n):
    return np.arange(1 << (1 << n), dtype=np.uint64)[:, None]


def _random(n, count, rng):
    return _bits.random_words(n, rng, (count,))


def _from_generator(mob, gens, n):
    return _bits.join_halves(gens ^ mob(gens, n - 1), gens, n - 1)


def check_fixed_points(mob, level, rng):
    for n in range(1, 5 if level == "full" else 4):
        tables = _all_tables(n)
        fixed = int(np.all(mob(tables, n) == tables, axis=-1).sum())
        if fixed != 1 << (1 << (n - 1)):
            return False, f"n={n}: {fixed} fixed points"
    return True, ""


def check_oracle(mob, level, rng):
    cases = [(n, None) for n in range(1, 4)]
    cases += [(8, 200), (10, 50)] if level == "quick" else [(8, 10_000), (12, 10_000), (14, 10_000)]
    for n, count in cases:
        words = _all_tables(n) if count is None else _random(n, count, rng)
        for start in range(0, words.shape[0], 2000):
            part = words[start : start + 2000]
            expected = transform_naive_bits(_bits.unpack(part, n))
            if not np.array_equal(_bits.unpack(mob(part, n), n), expected):
                return False, f"mismatch at n={n}"
    return True, ""


def check_involution(mob, level, rng):
    for n in list(range(1, 4)) + [8, 16, 20]:
        words = _all_tables(n) if n <= 3 else _random(n, 20, rng)
        if not np.array_equal(mob(mob(words, n), n), words):
            return False, f"n={n}"
    return True, ""


def check_linearity(mob, level, rng):
    for n in (3, 9, 16):
        a, b = _random(n, 50, rng), _random(n, 50, rng)
        if not np.array_equal(mob(a ^ b, n), mob(a, n) ^ mob(b, n)):
            return False, f"n={n}"
    return True, ""


def check_fixed_origin(mob, level, rng):
    for n in (1, 4, 12):
        words = _random(n, 200, rng)
        if not np.array_equal(mob(words, n)[:, 0] & 1, words[:, 0] & 1):
            return False, f"n={n}"
    return True, ""


def check_monomials(mob, level, rng):
    for n in range(1, 7 if level == "full" else 5):
        for u in range(1 << n):
            monomial = _bits.superset_indicator(u, n)
            minterm = _bits.zeros(n)
            minterm[u >> 6] = np.uint64(1 << (u & 63))
            if not np.array_equal(mob(monomial, n), minterm):
                return False, f"n={n}, u={u}"
    return True, ""


def check_degree_bound(mob, level, rng):
    for n in range(2, 5):
        h = _from_generator(mob, _all_tables(n - 1), n)
        deg = _bits.degree(h, n)
        if (deg[deg >= 0] < math.ceil(n / 2)).any():
            return False, f"n={n}"
    n = 20 if level == "full" else 12
    h = _from_generator(mob, _random(n - 1, 200, rng), n)
    deg = _bits.degree(h, n)
    if (deg[deg >= 0] < math.ceil(n / 2)).any():
        return False, f"n={n}"
    return True, ""


def check_generators(mob, level, rng):
    for n in range(2, 6 if level == "full" else 5):
        h = _from_generator(mob, _all_tables(n - 1), n)
        if not np.all(mob(h, n) == h):
            return False, f"n={n}: image not coincident"
        if len({row.tobytes() for row in h}) != h.shape[0]:
            return False, f"n={n}: generator map not injective"
    return True, ""


def check_degree_sum(mob, level, rng):
    for n in range(1, 5):
        words = _all_tables(n)[1:]
        total = _bits.degree(mob(words, n), n) + _bits.degree(mob(mob(words, n), n), n)
        if (total < n).any():
            return False, f"n={n}"
    return True, ""


def check_symmetric_count(mob, level, rng):
    for n in range(1, 17 if level == "full" else 11):
        count = sum(1 for _ in enumerate_coincident_symmetric(n))
        if count != 1 << (n // 2 + 1) or count != int(coincident_lambda_masks(n).sum()):
            return False, f"n={n}: {count}"
    return True, ""


def check_ci_totals(mob, level, rng):
    totals = [sum(coincident_ci_profile(n).values()) for n in range(1, 6)]
    if totals != [1, 2, 2, 8, 152]:
        return False, f"totals {totals}"
    if level == "full" and cor1_count(4) != 648:
        return False, "cor_1(4)"
    return True, ""


CHECKS = [
    ("fixed-points", "card C_n = 2^(2^(n-1))", check_fixed_points),
    ("oracle", "butterfly equals the subset-sum transform", check_oracle),
    ("involution", "mu(mu(f)) = f", check_involution),
    ("linearity", "mu(f + g) = mu(f) + mu(g)", check_linearity),
    ("fixed-origin", "mu(f)(0) = f(0)", check_fixed_origin),
    ("monomials", "mu(x^u) = M_u", check_monomials),
    ("degree-bound", "deg(h) >= n/2 for coincident h != 0", check_degree_bound),
    ("generators", "g -> (1+x_n) phi(g) + x_n g is a bijection onto C_n", check_generators),
    ("degree-sum", "deg(f) + deg(mu(f)) >= n", check_degree_sum),
    ("symmetric-count", "|CS_n| = 2^(floor(n/2)+1)", check_symmetric_count),
    ("ci-totals", "coincident CI(1) totals 1, 2, 2, 8, 152", check_ci_totals),
]


def run_verify(level="quick", mob=_bits.mobius, seed=0):
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    rng = np.random.default_rng(seed)
    results = []
    for name, statement, check in CHECKS:
        start = time.perf_counter()
        try:
            passed, detail = check(mob, level, rng)
        except Exception as exc:  # a broken kernel may raise instead of mismatching
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, statement, passed, time.perf_counter() - start, detail))
    return results
