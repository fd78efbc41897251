"""Independent oracles shared by the tests."""

import itertools

from mobiuslab import BooleanFunction


def all_functions(n):
    """Every BooleanFunction on n variables."""
    for bits in itertools.product((0, 1), repeat=1 << n):
        yield BooleanFunction.from_bits(bits)


def poly_eval(coeffs, mask):
    """Evaluate ⊕ α_u x^u at the valuation ``mask`` term by term."""
    value = 0
    for u, alpha in enumerate(coeffs):
        if alpha and (u & mask) == u:
            value ^= 1
    return value


def gf2_rank(rows):
    """Rank over F_2 of rows given as Python ints, by elimination."""
    pivots = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)
