"""Bulk experiments over streams of functions.

Sampling is split into fixed-size chunks, each with its own generator
derived from ``(seed, population, chunk)``, so results do not depend on how
chunks are spread over workers.
"""

import json
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from . import _bits
from .coincident import coincident_words, random_coincident_words
from .core import check_n
from .metrics import ci1_words, nonlinearity_words

POPULATIONS = ("coincident", "uniform")
CHUNK = 64


def chunk_rng(seed, population, chunk):
    key = (POPULATIONS.index(population), chunk)
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def sample_chunk(population, n, size, rng):
    if population == "coincident":
        return random_coincident_words(n, rng, size)
    if population == "uniform":
        return _bits.random_words(n, rng, (size,))
    raise ValueError(f"unknown population {population!r}")


# ---------------------------------------------------------------------------
# correlation immunity


def coincident_ci_profile(n):
    """Weight -> number of first-order correlation-immune coincident functions."""
    words = coincident_words(n)
    ok = ci1_words(words, n)
    weights = _bits.popcount(words[ok])
    return dict(sorted(Counter(int(w) for w in weights).items()))


def cor1_count(n, chunk_bits=22, checkpoint=None, progress=None):
    """Number of first-order correlation-immune functions on n <= 5 variables,
    by exhaustive scan over all 2**(2**n) truth tables.

    ``checkpoint`` names a JSON file updated after every chunk so an
    interrupted n = 5 scan resumes where it stopped.
    """
    n = check_n(n, high=5)
    total = 1 << (1 << n)
    chunk = min(total, 1 << chunk_bits)
    nchunks = total // chunk
    start, count = 0, 0
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            state = json.load(fh)
        if state.get("n") == n and state.get("chunk") == chunk:
            start, count = state["next"], state["count"]
    if progress is not None:
        progress.total = nchunks
        progress.update(start)
    variables = [_bits.superset_indicator(1 << i, n)[0] for i in range(n)]
    for c in range(start, nchunks):
        tables = np.arange(c * chunk, (c + 1) * chunk, dtype=np.uint64)
        weight = np.bitwise_count(tables)
        ok = np.ones(chunk, dtype=bool)
        for var in variables:
            ok &= weight == 2 * np.bitwise_count(tables & var)
        count += int(ok.sum())
        if checkpoint:
            with open(checkpoint, "w") as fh:
                json.dump({"n": n, "chunk": chunk, "next": c + 1, "count": count}, fh)
        if progress is not None:
            progress.update(1)
    return count


@dataclass
class CIRow:
    n: int
    profile: dict
    cor1: int = None

    @property
    def total(self):
        return sum(self.profile.values())


def ci_table(n_max, long=False, checkpoint=None, progress=None):
    """Rows n = 1..n_max of the coincident CI(1) table.

    cor_1(n) is filled for n <= 4, and for n = 5 only when ``long``.
    """
    if not 1 <= n_max <= 5:
        raise ValueError("ci table covers 1 <= n <= 5")
    rows = []
    for n in range(1, n_max + 1):
        row = CIRow(n, coincident_ci_profile(n))
        if n <= 4 or long:
            row.cor1 = cor1_count(n, checkpoint=checkpoint if n == 5 else None, progress=progress if n == 5 else None)
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# distributions

METRICS = ("weight", "degree", "nl", "balanced")


def _chunk_metric(args):
    kind, population, n, size, seed, chunk = args
    words = sample_chunk(population, n, size, chunk_rng(seed, population, chunk))
    if kind == "weight":
        return _bits.popcount(words)
    if kind == "balanced":
        return (_bits.popcount(words) == 1 << (n - 1)).astype(np.int64)
    if kind == "nl":
        return nonlinearity_words(words, n)
    if kind == "degree":
        return _bits.degree_profile(_bits.mobius(words, n), n)
    raise ValueError(f"unknown metric {kind!r}")


def sample_metric(kind, population, n, samples, seed, jobs=1):
    """Metric values of ``samples`` random functions, in chunk order.

    Returns a 1-d array (weight, nl, balanced) or a ``(samples, n + 1)``
    array of monomial counts per degree (degree).
    """
    check_n(n)
    tasks = []
    for c, start in enumerate(range(0, samples, CHUNK)):
        tasks.append((kind, population, n, min(CHUNK, samples - start), seed, c))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_chunk_metric, tasks))
    else:
        parts = [_chunk_metric(t) for t in tasks]
    return np.concatenate(parts, axis=0)


def ks_test(a, b):
    """Two-sample Kolmogorov-Smirnov statistic with its asymptotic p-value."""
    result = stats.ks_2samp(a, b, method="asymp")
    return float(result.statistic), float(result.pvalue)


def histogram(values, bins=None, value_range=None):
    """(left, right, count) triples; unit bins over the integer range when
    ``bins`` is None."""
    values = np.asarray(values)
    if bins is None:
        lo, hi = (int(values.min()), int(values.max())) if value_range is None else value_range
        counts = np.bincount(values.astype(np.int64) - lo, minlength=hi - lo + 1)
        return [(lo + i, lo + i, int(c)) for i, c in enumerate(counts) if c]
    counts, edges = np.histogram(values, bins=bins, range=value_range)
    return [(float(edges[i]), float(edges[i + 1]), int(c)) for i, c in enumerate(counts)]


def balanced_probability(n):
    """C(2^n, 2^(n-1)) / 2^(2^n) for uniform random functions."""
    size = 1 << n
    return math.comb(size, size // 2) / 2**size


def degree_n_frequency(n, samples, seed, conditioned=False):
    """Empirical frequency of deg(μ(f)) = n over uniform f.

    With ``conditioned`` only functions of degree n are counted.
    """
    rng = np.random.default_rng(seed)
    hits = trials = 0
    for start in range(0, samples, 4096):
        words = _bits.random_words(n, rng, (min(4096, samples - start),))
        mu = _bits.mobius(words, n)
        deg_mu = _bits.degree(_bits.mobius(mu, n), n)
        if conditioned:
            keep = _bits.degree(mu, n) == n
            deg_mu = deg_mu[keep]
        hits += int((deg_mu == n).sum())
        trials += deg_mu.shape[0]
    return hits / trials, trials


@dataclass
class DistributionReport:
    kind: str
    n: int
    samples: int
    seed: int
    values: dict = field(default_factory=dict)
    ks: tuple = None


def run_distribution(kind, populations, n, samples, seed, jobs=1):
    if kind not in METRICS:
        raise ValueError(f"unknown metric {kind!r}")
    report = DistributionReport(kind, n, samples, seed)
    for population in populations:
        report.values[population] = sample_metric(kind, population, n, samples, seed, jobs)
    if len(populations) == 2 and kind in ("weight", "nl"):
        report.ks = ks_test(*(report.values[p] for p in populations))
    return report
