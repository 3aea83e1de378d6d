"""Stirling triangles, number sequences and brute-force enumeration oracles.

The closed forms here are grown by recurrence and memoized. The oracles in
the second half never touch those tables: they walk every set partition
(as a restricted growth string) and every permutation, and count.
"""

import itertools
import math
import threading
from dataclasses import dataclass, field

from .numeric import DomainError

__all__ = [
    "CensusResult",
    "DEFAULT_PARTITION_CAP",
    "DEFAULT_PERMUTATION_CAP",
    "binomial",
    "stirling_first",
    "stirling_second",
    "stirling_first_row",
    "stirling_second_row",
    "bell_number",
    "derangement_number",
    "singleton_free_count",
    "restricted_growth_strings",
    "oracle_census",
]

DEFAULT_PARTITION_CAP = 11
DEFAULT_PERMUTATION_CAP = 9


class _Table:
    """Rows produced by ``step(prev_row, m)``, grown on demand.

    Capacity doubles so that sweeps with creeping maxima do not re-enter the
    lock once per row. Readers see only fully built rows.
    """

    def __init__(self, first, step):
        self._rows = [first]
        self._step = step
        self._lock = threading.Lock()

    def row(self, m):
        rows = self._rows
        if m < len(rows):
            return rows[m]
        with self._lock:
            rows = list(self._rows)
            target = max(m + 1, 2 * len(rows))
            while len(rows) < target:
                rows.append(self._step(rows[-1], len(rows) - 1))
            self._rows = rows
        return rows[m]


def _stirling1_step(row, m):
    # s(m+1, j) = s(m, j-1) - m s(m, j)
    nxt = [0] * (len(row) + 1)
    for j, c in enumerate(row):
        nxt[j + 1] += c
        nxt[j] -= m * c
    return tuple(nxt)


def _stirling2_step(row, m):
    # S(m+1, j) = S(m, j-1) + j S(m, j)
    nxt = [0] * (len(row) + 1)
    for j, c in enumerate(row):
        nxt[j + 1] += c
        nxt[j] += j * c
    return tuple(nxt)


def _sequence_step(fn):
    # adapter so 1-D sequences can reuse _Table: a "row" is the value itself
    return lambda prev, m: fn(prev, m + 1)


_STIRLING1 = _Table((1,), _stirling1_step)
_STIRLING2 = _Table((1,), _stirling2_step)
# D_n = n D_{n-1} + (-1)^n
_DERANGEMENTS = _Table(1, _sequence_step(lambda d, n: n * d + (-1) ** n))
_BELL = [1]
_BELL_LOCK = threading.Lock()


def _check_index(m, j):
    if m < 0 or not 0 <= j <= m:
        raise DomainError(f"index (m={m}, j={j}) outside 0 <= j <= m")


def stirling_first(m, j):
    """Signed Stirling number of the first kind ``s(m, j)``."""
    _check_index(m, j)
    return _STIRLING1.row(m)[j]


def stirling_second(m, j):
    """Stirling number of the second kind ``S(m, j)``."""
    _check_index(m, j)
    return _STIRLING2.row(m)[j]


def stirling_first_row(m):
    """Tuple ``(s(m,0), ..., s(m,m))``."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    return _STIRLING1.row(m)


def stirling_second_row(m):
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    return _STIRLING2.row(m)


def binomial(n, k):
    if n < 0:
        raise DomainError(f"binomial expects n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def bell_number(n):
    """``B_n`` from ``B_{n+1} = sum_j C(n, j) B_j``, memoized."""
    if n < 0:
        raise DomainError(f"bell_number expects n >= 0, got {n}")
    if n >= len(_BELL):
        with _BELL_LOCK:
            seq = list(_BELL)
            while len(seq) <= n:
                k = len(seq) - 1
                seq.append(sum(math.comb(k, j) * seq[j] for j in range(k + 1)))
            _BELL[:] = seq
    return _BELL[n]


def derangement_number(n):
    if n < 0:
        raise DomainError(f"derangement_number expects n >= 0, got {n}")
    return _DERANGEMENTS.row(n)


def singleton_free_count(n):
    """``V_n``: set partitions of [n] with no singleton block."""
    if n < 0:
        raise DomainError(f"singleton_free_count expects n >= 0, got {n}")
    return sum((-1) ** (n - k) * math.comb(n, k) * bell_number(k) for k in range(n + 1))


# --- enumeration oracles --------------------------------------------------


def restricted_growth_strings(n):
    """Yield every restricted growth string of length ``n`` in lexicographic order.

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; each string encodes one set
    partition of ``{0, ..., n-1}`` (element ``i`` sits in block ``a[i]``).
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    # b[i] = 1 + max(a[:i]), the largest value allowed at position i
    b = [1] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(b[i], a[i] + 1)
        for k in range(i + 1, n):
            a[k] = 0
            b[k] = top


def _cycle_count(perm):
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = perm[i]
    return cycles


@dataclass
class CensusResult:
    """Counts obtained by exhaustive enumeration of structures on [n].

    ``cycles_by_count`` and ``derangements`` are ``None`` when ``n`` exceeds
    the permutation cap.
    """

    n: int
    bell: int
    stirling2_by_blocks: list = field(default_factory=list)
    singleton_free: int = 0
    cycles_by_count: list | None = None
    derangements: int | None = None


def oracle_census(n, partition_cap=DEFAULT_PARTITION_CAP, permutation_cap=DEFAULT_PERMUTATION_CAP):
    if n < 0:
        raise DomainError(f"oracle_census expects n >= 0, got {n}")
    if n > partition_cap:
        raise DomainError(f"n={n} exceeds the partition enumeration cap {partition_cap}")

    by_blocks = [0] * (n + 1)
    total = singleton_free = 0
    for rgs in restricted_growth_strings(n):
        total += 1
        sizes = [0] * (max(rgs, default=-1) + 1)
        for block in rgs:
            sizes[block] += 1
        by_blocks[len(sizes)] += 1
        if 1 not in sizes:
            singleton_free += 1
    result = CensusResult(n=n, bell=total, stirling2_by_blocks=by_blocks,
                          singleton_free=singleton_free)

    if n <= permutation_cap:
        cycles = [0] * (n + 1)
        deranged = 0
        for perm in itertools.permutations(range(n)):
            cycles[_cycle_count(perm)] += 1
            if all(perm[i] != i for i in range(n)):
                deranged += 1
        result.cycles_by_count = cycles
        result.derangements = deranged
    return result
