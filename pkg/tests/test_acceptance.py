"""Acceptance criteria, one test each, at their stated tolerances.

Each test prints a single PASS/FAIL line.  Run with ``--long`` to include
the exhaustive cor_1(5) count and the n = 20 nonlinearity runs.
"""

import math
import time

import numpy as np
import pytest

from mobiuslab import _bits
from mobiuslab.coincident import (
    basis,
    coincident_words,
    from_generator,
    generator_of,
    is_monotonic,
    monotone_coincident,
    random_coincident,
    random_coincident_words,
)
from mobiuslab.core import BooleanFunction, Valuation, extend
from mobiuslab.decompose import shannon_join
from mobiuslab.experiments import ci_table, cor1_count, degree_n_frequency, ks_test, sample_metric
from mobiuslab.mobius import is_coincident, transform, transform_naive_bits
from mobiuslab.symmetric import LambdaVector, enumerate_coincident_symmetric, symmetric_to_function

from helpers import gf2_rank

SEEDS = range(10)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" [{detail}]" if detail else ""))
        assert ok, detail

    return emit


@pytest.fixture
def long_run(request):
    return request.config.getoption("--long")


def all_tables(n):
    return np.arange(1 << (1 << n), dtype=np.uint64)[:, None]


def test_01_fixed_point_count(report):
    start = time.perf_counter()
    counts = [int(np.all(_bits.mobius(t, n) == t, axis=-1).sum()) for n, t in ((n, all_tables(n)) for n in range(1, 5))]
    seconds = time.perf_counter() - start
    ok = counts == [2, 4, 16, 256] and seconds < 10
    report(1, "fixed points of the transform for n = 1..4", ok, f"counts={counts}, {seconds:.2f}s")


def test_02_oracle_equivalence(report):
    rng = np.random.default_rng(2)
    start = time.perf_counter()
    mismatches = []
    for n in (1, 2, 3):
        words = all_tables(n)
        if not np.array_equal(_bits.unpack(_bits.mobius(words, n), n), transform_naive_bits(_bits.unpack(words, n))):
            mismatches.append(n)
    for n in (8, 12, 14):
        words = _bits.random_words(n, rng, (10_000,))
        if not np.array_equal(_bits.unpack(_bits.mobius(words, n), n), transform_naive_bits(_bits.unpack(words, n))):
            mismatches.append(n)
    seconds = time.perf_counter() - start
    report(2, "butterfly equals subset-sum oracle", not mismatches and seconds < 30, f"mismatches={mismatches}, {seconds:.2f}s")


def test_03_transform_laws(report):
    rng = np.random.default_rng(3)
    failures = []
    for n in range(1, 21):
        if n <= 3:
            a = all_tables(n)
            b = a[rng.permutation(a.shape[0])]
        else:
            a, b = _bits.random_words(n, rng, (50,)), _bits.random_words(n, rng, (50,))
        mu_a = _bits.mobius(a, n)
        if not np.array_equal(_bits.mobius(mu_a, n), a):
            failures.append(("involution", n))
        if not np.array_equal(_bits.mobius(a ^ b, n), mu_a ^ _bits.mobius(b, n)):
            failures.append(("linearity", n))
        if not np.array_equal(mu_a[:, 0] & np.uint64(1), a[:, 0] & np.uint64(1)):
            failures.append(("origin", n))
        masks = range(1 << n) if n <= 3 else rng.integers(0, 1 << n, 20)
        for u in masks:
            minterm = _bits.zeros(n)
            minterm[int(u) >> 6] = np.uint64(1 << (int(u) & 63))
            if not np.array_equal(_bits.mobius(_bits.superset_indicator(int(u), n), n), minterm):
                failures.append(("monomial", n, int(u)))
    report(3, "involution, linearity, monomials, value at the origin", not failures, f"failures={failures[:5]}")


def test_04_extension_identities(report):
    rng = np.random.default_rng(4)
    failures = 0
    for _ in range(10_000):
        n = int(rng.integers(2, 17))
        f = BooleanFunction.random(n - 1, rng)
        mu_f, zero = transform(f), BooleanFunction.zero(n - 1)
        lifted = extend(f, 1)
        x_n = BooleanFunction.variable(n, n)
        failures += transform(lifted) != shannon_join(mu_f, zero)
        failures += transform(x_n & lifted) != shannon_join(zero, mu_f)
        failures += transform(~x_n & lifted) != extend(mu_f, 1)
    report(4, "extension identities on 10^4 random pairs", failures == 0, f"failures={failures}")


def test_05_degree_bound(report):
    violations = 0
    for n in range(1, 5):
        h = coincident_words(n)
        deg = _bits.degree(_bits.mobius(h, n), n)
        violations += int((deg[deg >= 0] < math.ceil(n / 2)).sum())
    rng = np.random.default_rng(5)
    for _ in range(100):
        h = random_coincident_words(20, rng, 1000)
        deg = _bits.degree(h, 20)  # ANF table of a coincident function is itself
        violations += int((deg[deg >= 0] < 10).sum())
    report(5, "degree of nonzero coincident functions is at least n/2", violations == 0, f"violations={violations}")


def test_06_generator_bijection(report):
    failures = 0
    for n in (2, 3, 4):
        for row in coincident_words(n):
            h = BooleanFunction(n, row)
            failures += from_generator(generator_of(h)) != h
    rng = np.random.default_rng(6)
    for _ in range(10_000):
        h = random_coincident(16, rng)
        failures += from_generator(generator_of(h)) != h
    report(6, "generator round trip", failures == 0, f"failures={failures}")


def test_07_basis(report):
    details = []
    ok = True
    for n in range(1, 5):
        b = basis(n)
        rank = gf2_rank([h.to_int() for h in b])
        span = set()
        for mask in range(1 << len(b)):
            acc = 0
            for i, h in enumerate(b):
                if mask >> i & 1:
                    acc ^= h.to_int()
            span.add(acc)
        target = {BooleanFunction(n, row).to_int() for row in coincident_words(n)}
        ok &= rank == 2 ** (n - 1) and span == target
        details.append(f"n={n}: rank {rank}")
    report(7, "basis rank and span", ok, ", ".join(details))


def test_08_symmetric_counts(report):
    bad = []
    for n in range(1, 17):
        found = list(enumerate_coincident_symmetric(n))
        if len(found) != 2 ** (n // 2 + 1):
            bad.append(n)
        if n <= 12:
            brute = set()
            for mask in range(1 << (n + 1)):
                lam = tuple(mask >> k & 1 for k in range(n + 1))
                if is_coincident(symmetric_to_function(LambdaVector(lam))):
                    brute.add(lam)
            if brute != {lam.bits for lam in found}:
                bad.append(("filter", n))
    report(8, "coincident symmetric counts", not bad, f"bad={bad}")


def test_09_ci_table(report, long_run):
    start = time.perf_counter()
    rows = ci_table(5)
    seconds = time.perf_counter() - start
    expected_profile = {0: 1, 6: 5, 10: 70, 18: 70, 22: 5, 30: 1}
    totals = [r.total for r in rows]
    checks = {
        "totals": totals == [1, 2, 2, 8, 152],
        "n=5 profile": rows[4].profile == expected_profile,
        "cor_1(4)": rows[3].cor1 == 648,
        "runtime": seconds <= 120,
    }
    if long_run:
        checks["cor_1(5)"] = cor1_count(5) == 3140062
    detail = ", ".join(f"{k} {'ok' if v else 'differs'}" for k, v in checks.items())
    detail += f"; measured n=5 profile {rows[4].profile}"
    report(9, "correlation-immunity table", all(checks.values()), detail)


def test_10_monotone_constructions(report):
    failures = []
    for n in range(1, 6):
        for u in range(1 << n):
            f = monotone_coincident(Valuation(u, n))
            if not (is_coincident(f) and is_monotonic(f, "up")):
                failures.append((n, u))
    report(10, "monotone coincident constructions", not failures, f"{len(failures)} failures: {failures}")


def ks_passes(kind, n):
    passes = 0
    for seed in SEEDS:
        a = sample_metric(kind, "coincident", n, 1000, seed)
        b = sample_metric(kind, "uniform", n, 1000, seed)
        passes += ks_test(a, b)[1] > 0.01
    return passes


def degree_outliers(n):
    outliers = []
    for population in ("coincident", "uniform"):
        profiles = sample_metric("degree", population, n, 1000, seed=0)
        means = profiles.mean(axis=0)
        sigma = profiles.std(axis=0, ddof=1) / math.sqrt(profiles.shape[0])
        for d in range(n + 1):
            if population == "coincident" and d in (0, 1):
                continue
            expected = math.comb(n, d) / 2
            if abs(means[d] - expected) > 3 * max(sigma[d], math.sqrt(math.comb(n, d) / 4 / 1000)):
                outliers.append((population, n, d))
    return outliers


def test_11_distributions(report, long_run):
    results = {}
    for n in (10, 11, 20):
        results[f"weight n={n}"] = ks_passes("weight", n)
    for n in (10, 11, 20) if long_run else (10, 11):
        results[f"nl n={n}"] = ks_passes("nl", n)
    outliers = [o for n in (10, 11, 20) for o in degree_outliers(n)]
    ok = all(v >= 9 for v in results.values()) and not outliers
    detail = ", ".join(f"{k}: {v}/10" for k, v in results.items()) + f"; degree outliers {outliers}"
    report(11, "coincident and uniform distributions agree", ok, detail)


def test_12_degree_n_probability(report):
    freq, trials = degree_n_frequency(12, 100_000, seed=12)
    report(12, "Pr(deg mu(f) = n) near 1/2", trials == 100_000 and abs(freq - 0.5) <= 0.005, f"{freq:.5f}")


def test_13_performance(report):
    f = BooleanFunction.random(24, np.random.default_rng(13))
    transform(f)
    times = []
    for _ in range(5):
        start = time.perf_counter()
        transform(f)
        times.append(time.perf_counter() - start)
    median = sorted(times)[2]
    report(13, "transform at n = 24 under 250 ms", median < 0.25, f"median {median * 1000:.1f} ms")
