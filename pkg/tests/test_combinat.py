import math
import threading

import pytest
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from oracles import set_partitions
from ucl import combinat
from ucl.combinat import (
    binomial,
    bell_number,
    derangement_number,
    oracle_census,
    restricted_growth_strings,
    singleton_free_count,
    stirling_first,
    stirling_second,
)
from ucl.numeric import DomainError, primes_up_to


def test_stirling_first_examples():
    assert stirling_first(0, 0) == 1
    assert stirling_first(4, 2) == 11
    assert stirling_first(4, 1) == -6
    with pytest.raises(DomainError):
        stirling_first(3, 4)
    with pytest.raises(DomainError):
        stirling_first(3, -1)


def test_stirling_second_examples():
    assert stirling_second(3, 3) == 1
    assert stirling_second(4, 2) == 7
    assert stirling_second(5, 3) == 25
    with pytest.raises(DomainError):
        stirling_second(2, 3)


def test_binomial_examples():
    assert binomial(5, 0) == 1
    assert binomial(5, 2) == 10
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0


def test_sequence_examples():
    assert [bell_number(n) for n in (0, 4, 7)] == [1, 15, 877]
    assert [derangement_number(n) for n in (0, 4, 7)] == [1, 9, 1854]
    assert [singleton_free_count(n) for n in (0, 1, 4)] == [1, 0, 4]


def test_stirling_tables_against_sympy():
    for m in range(25):
        for j in range(m + 1):
            assert stirling_second(m, j) == sympy_stirling(m, j)
            assert stirling_first(m, j) == sympy_stirling(m, j, kind=1, signed=True)


def test_stirling_table_invariants():
    for m in range(1, 30):
        assert stirling_first(m, 0) == 0 and stirling_first(m, m) == 1
        assert stirling_second(m, 0) == 0
        assert stirling_second(m, 1) == stirling_second(m, m) == 1
        for j in range(1, m + 1):
            s = stirling_first(m, j)
            assert s != 0 and (s > 0) == ((m - j) % 2 == 0)


def test_row_sums():
    for m in range(21):
        assert sum(stirling_second(m, j) for j in range(m + 1)) == bell_number(m)
        assert sum(stirling_first(m, j) for j in range(m + 1)) == int(m <= 1)


def test_second_kind_divisibility():
    for p in primes_up_to(31):
        assert stirling_second(p, 1) == stirling_second(p, p) == 1
        assert all(stirling_second(p, k) % p == 0 for k in range(2, p))


def test_orthogonality():
    for m in range(16):
        for k in range(m + 1):
            total = sum(stirling_first(m, j) * stirling_second(j, k) for j in range(k, m + 1))
            assert total == int(m == k)


def test_large_values_are_exact():
    # B_25 exceeds 2^64
    assert bell_number(25) == 4638590332229999353
    assert bell_number(30) == 846749014511809332450147
    assert derangement_number(20) == 895014631192902121
    assert all(derangement_number(n) == round(math.factorial(n) / math.e) for n in range(1, 18))


def test_v_counts_singleton_free_partitions():
    for n in range(9):
        brute = sum(all(len(b) > 1 for b in part) for part in set_partitions(list(range(n))))
        assert singleton_free_count(n) == brute


def test_restricted_growth_strings():
    assert list(restricted_growth_strings(0)) == [()]
    assert list(restricted_growth_strings(3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    for n in range(1, 8):
        strings = list(restricted_growth_strings(n))
        assert strings == sorted(strings)
        assert len(set(strings)) == len(strings) == bell_number(n)
        for a in strings:
            assert a[0] == 0
            assert all(a[i] <= 1 + max(a[:i]) for i in range(1, n))


def test_census_examples():
    c = oracle_census(0)
    assert (c.bell, c.derangements, c.singleton_free) == (1, 1, 1)
    c = oracle_census(3)
    assert c.bell == 5 and c.stirling2_by_blocks == [0, 1, 3, 1]
    assert c.derangements == 2 and c.singleton_free == 1
    assert oracle_census(4).cycles_by_count == [0, 6, 11, 6, 1]


def test_census_caps():
    with pytest.raises(DomainError):
        oracle_census(12)
    with pytest.raises(DomainError):
        oracle_census(5, partition_cap=4)
    c = oracle_census(6, permutation_cap=5)
    assert c.cycles_by_count is None and c.derangements is None
    assert c.bell == 203


def test_census_invariants():
    for n in range(9):
        c = oracle_census(n)
        assert c.bell == sum(c.stirling2_by_blocks)
        assert sum(c.cycles_by_count) == math.factorial(n)


def test_oracle_equivalence():
    for n in range(11):
        c = oracle_census(n, permutation_cap=9)
        assert c.bell == bell_number(n)
        assert c.stirling2_by_blocks == [stirling_second(n, k) for k in range(n + 1)]
        assert c.singleton_free == singleton_free_count(n)
        if n <= 9:
            assert c.cycles_by_count == [(-1) ** (n - k) * stirling_first(n, k) for k in range(n + 1)]
            assert c.derangements == derangement_number(n)


def test_memoization_is_order_independent():
    fresh = combinat._Table((1,), combinat._stirling2_step)
    rows = {m: fresh.row(m) for m in (17, 3, 40, 0, 25)}
    assert all(rows[m] == combinat.stirling_second_row(m) for m in rows)


def test_concurrent_readers_agree():
    table = combinat._Table((1,), combinat._stirling1_step)
    results = {}

    def work(i):
        results[i] = [table.row(m) for m in range(60 - i, 0, -7)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for i, rows in results.items():
        assert rows == [combinat.stirling_first_row(m) for m in range(60 - i, 0, -7)]
