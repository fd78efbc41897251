"""Word-parallel kernels over packed truth tables.

A table of ``2**n`` bits is stored as little-endian ``uint64`` words: index
``k`` lives in word ``k >> 6`` at bit ``k & 63``.  Tables with ``n < 6``
occupy a single word whose bits above ``2**n - 1`` are kept at zero.

Every kernel works on the last axis, so a ``(batch, nwords)`` array is a
batch of tables.
"""

import numpy as np

WORD_BITS = 64
WORD_LOG = 6

# LOW_MASKS[i] selects the positions j inside a word with bit i of j clear.
LOW_MASKS = np.array(
    [
        0x5555555555555555,
        0x3333333333333333,
        0x0F0F0F0F0F0F0F0F,
        0x00FF00FF00FF00FF,
        0x0000FFFF0000FFFF,
        0x00000000FFFFFFFF,
    ],
    dtype=np.uint64,
)

# WEIGHT_MASKS[k] selects positions j in 0..63 with popcount(j) == k.
WEIGHT_MASKS = np.array(
    [sum(1 << j for j in range(64) if bin(j).count("1") == k) for k in range(7)],
    dtype=np.uint64,
)


def nwords(n):
    return max(1, (1 << n) >> WORD_LOG)


def tail_mask(n):
    """Mask of the meaningful bits in a single-word table."""
    if n >= WORD_LOG:
        return np.uint64(0xFFFFFFFFFFFFFFFF)
    return np.uint64((1 << (1 << n)) - 1)


def zeros(n, batch=()):
    return np.zeros(tuple(batch) + (nwords(n),), dtype=np.uint64)


def random_words(n, rng, batch=()):
    words = rng.integers(0, 1 << 64, size=tuple(batch) + (nwords(n),), dtype=np.uint64)
    if n < WORD_LOG:
        words &= tail_mask(n)
    return words


def pack(bits):
    """Pack a ``(..., 2**n)`` array of 0/1 values into words."""
    bits = np.asarray(bits, dtype=np.uint8)
    size = bits.shape[-1]
    if size < WORD_BITS:
        pad = np.zeros(bits.shape[:-1] + (WORD_BITS - size,), dtype=np.uint8)
        bits = np.concatenate([bits, pad], axis=-1)
    packed = np.packbits(bits, axis=-1, bitorder="little")
    packed = np.ascontiguousarray(packed)
    return packed.view("<u8").astype(np.uint64)


def unpack(words, n):
    words = np.ascontiguousarray(words, dtype="<u8")
    raw = words.view(np.uint8)
    bits = np.unpackbits(raw, axis=-1, bitorder="little")
    return bits[..., : 1 << n]


def mobius_inplace(words, n, callback=None):
    """Butterfly over F_2: for each variable i the lower half of every
    block is XORed into the upper half.  ``callback(i, words)`` is invoked
    after each layer."""
    for i in range(n):
        if i < WORD_LOG:
            words ^= (words & LOW_MASKS[i]) << np.uint64(1 << i)
        else:
            stride = 1 << (i - WORD_LOG)
            view = words.reshape(words.shape[:-1] + (-1, 2, stride))
            view[..., 1, :] ^= view[..., 0, :]
        if callback is not None:
            callback(i, words)
    return words


def mobius(words, n):
    return mobius_inplace(np.array(words, dtype=np.uint64, copy=True), n)


def popcount(words):
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)


def superset_indicator(u, n):
    """Words of the table with ones exactly at the indices v with u ⪯ v."""
    idx = np.arange(1 << n, dtype=np.int64)
    return pack(((idx & u) == u).astype(np.uint8))


def degree(words, n):
    """Largest popcount of a set index; -1 for the all-zero table.

    Degrees are tried from n downward and a row stops at its first hit, so
    dense tables only touch the few words holding high-weight indices.
    """
    words = np.asarray(words, dtype=np.uint64)
    flat = words.reshape(-1, words.shape[-1])
    high = np.bitwise_count(np.arange(flat.shape[-1], dtype=np.uint64))
    best = np.full(flat.shape[0], -1, dtype=np.int64)
    pending = np.arange(flat.shape[0])
    for d in range(n, -1, -1):
        if not pending.size:
            break
        hit = np.zeros(pending.size, dtype=bool)
        for k in range(min(d, WORD_LOG) + 1):
            cols = np.flatnonzero(high == d - k)
            if cols.size:
                hit |= (flat[np.ix_(pending, cols)] & WEIGHT_MASKS[k]).any(axis=1)
        best[pending[hit]] = d
        pending = pending[~hit]
    return best.reshape(words.shape[:-1])


def degree_profile(words, n):
    """Number of set indices of each popcount 0..n."""
    words = np.asarray(words, dtype=np.uint64)
    count = words.shape[-1]
    high = np.bitwise_count(np.arange(count, dtype=np.uint64)).astype(np.int64)
    out = np.zeros(words.shape[:-1] + (n + 1,), dtype=np.int64)
    for k in range(min(n, WORD_LOG) + 1):
        per_word = np.bitwise_count(words & WEIGHT_MASKS[k]).astype(np.int64)
        for h in range(0, n - k + 1):
            sel = high == h
            if sel.any():
                out[..., h + k] += per_word[..., sel].sum(axis=-1)
    return out


def lower_half(words, n):
    if n - 1 >= WORD_LOG:
        return words[..., : words.shape[-1] // 2].copy()
    return words & tail_mask(n - 1)


def upper_half(words, n):
    if n - 1 >= WORD_LOG:
        return words[..., words.shape[-1] // 2 :].copy()
    return (words >> np.uint64(1 << (n - 1))) & tail_mask(n - 1)


def join_halves(low, high, n):
    """Concatenate two tables on n variables into one on n + 1."""
    if n >= WORD_LOG:
        return np.concatenate([low, high], axis=-1)
    return low | (high << np.uint64(1 << n))


def repeat(words, n, k):
    """Table repeated 2**k times, i.e. the same function on n + k variables."""
    words = np.array(words, dtype=np.uint64, copy=True)
    while k and n < WORD_LOG:
        words = words | (words << np.uint64(1 << n))
        n += 1
        k -= 1
    if k:
        reps = (1,) * (words.ndim - 1) + (1 << k,)
        words = np.tile(words, reps)
    return words


def walsh(bits):
    """Walsh-Hadamard spectrum of ``(..., 2**n)`` tables, exact int32."""
    values = 1 - 2 * np.asarray(bits, dtype=np.int32)
    size = values.shape[-1]
    h = 1
    while h < size:
        view = values.reshape(values.shape[:-1] + (-1, 2, h))
        a = view[..., 0, :].copy()
        b = view[..., 1, :]
        view[..., 0, :] += b
        b *= -1
        b += a
        h *= 2
    return values
