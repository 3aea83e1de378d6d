"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports the recurrences under test.
"""

import itertools
import math


def trial_division_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def set_partitions(elements):
    """Every set partition of ``elements`` as a list of blocks (recursive insertion)."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def bell_poly_by_enumeration(m):
    """Coefficient list of sum over partitions of [m] of x^(#blocks)."""
    coeffs = [0] * (m + 1)
    for part in set_partitions(list(range(m))):
        coeffs[len(part)] += 1
    return coeffs


def derangement_poly_by_enumeration(m):
    """Coefficient list of sum over permutations of [m] of x^(#fixed points)."""
    coeffs = [0] * (m + 1)
    for perm in itertools.permutations(range(m)):
        coeffs[sum(perm[i] == i for i in range(m))] += 1
    return coeffs


def expand_product(roots):
    """Coefficients of prod (x - r) by repeated multiplication."""
    coeffs = [1]
    for r in roots:
        coeffs = [(coeffs[i - 1] if i else 0) - r * (coeffs[i] if i < len(coeffs) else 0)
                  for i in range(len(coeffs) + 1)]
    return coeffs


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def mod_coeffs(coeffs, p):
    return trim([c % p for c in coeffs])
