"""Exit criteria. Each test prints one PASS/FAIL line (also shown in the terminal summary)."""

import json
import time

from hypothesis import given, settings, strategies as st

from ucl import bell, combinat, congruence as c
from ucl.cli import main
from ucl.congruence import EXCLUDED, HOLDS
from ucl.numeric import primes_up_to
from ucl.poly import falling_factorial

N_MAX, M_MAX, P_MAX = 6, 10, 61
PRIMES = primes_up_to(P_MAX)
GRID = [(n, m, p) for p in PRIMES for m in range(1, M_MAX + 1) if m % p for n in range(N_MAX + 1)]


def all_hold(verdicts):
    return all(v.status in (HOLDS, EXCLUDED) for v in verdicts) and any(v.status == HOLDS for v in verdicts)


def test_1_headline_constant(acceptance, capsys, fresh_caches):
    start = time.perf_counter()
    code = main(["sweep", "--m", "8", "--pmax", "199", "--format", "json"])
    elapsed = time.perf_counter() - start
    doc = json.loads(capsys.readouterr().out)
    rows = {int(v["params"]["p"]): v for v in doc["verdicts"]}
    ok = (
        code == 0
        and doc["constant"] == "-1853"
        and all(rows[p]["status"] == HOLDS and rows[p]["lhs"] == str(-1853 % p) for p in primes_up_to(199)[1:])
        and elapsed < 5
    )
    assert acceptance(1, ok, f"{len(rows) - 1} primes, {elapsed:.2f}s")


def test_2_generalized_congruence(acceptance, fresh_caches):
    start = time.perf_counter()
    verdicts = [v for n, m, p in GRID for v in c.verify_reciprocal_sum_general(n, m, p)]
    elapsed = time.perf_counter() - start
    ok = len(verdicts) == 2 * len(GRID) and all(v.status == HOLDS for v in verdicts) and elapsed < 60
    assert acceptance(2, ok, f"{len(GRID)} cells, {len(verdicts)} verdicts, {elapsed:.2f}s")


def test_3_base_congruence_and_scalar_forms(acceptance):
    base = [c.verify_reciprocal_sum(m, p) for p in PRIMES for m in range(1, M_MAX + 1) if m % p]
    scalar = [v for n, m, p in GRID for v in c.verify_reciprocal_sum_numbers(n, m, p)]
    chain = True
    for n, m, p in GRID:
        poly = c.reciprocal_sum_general_sides(n, m, p)
        nums = c.reciprocal_sum_numbers_sides(n, m, p)
        for form in ("stirling2", "stirling1"):
            big, _, rhs = poly[form]
            chain &= (big(1), rhs(1)) == (nums[form][0], nums[form][2])
    ok = all(v.status == HOLDS for v in base + scalar) and chain
    assert acceptance(3, ok, f"{len(base)} base, {len(scalar)} scalar verdicts, chain={chain}")


def test_4_exact_identities(acceptance, fresh_caches):
    start = time.perf_counter()
    verdicts = [c.verify_falling_identity(m, n) for m in range(11) for n in range(11)]
    verdicts += [c.verify_shifted_identity(m) for m in range(1, 16)]
    verdicts += [c.verify_shifted_identity_numbers(m) for m in range(1, 16)]
    verdicts += [c.verify_orthogonality(m) for m in range(16)]
    verdicts += [v for m in range(9) for n in range(9) for v in c.verify_bell_addition(m, n)]
    elapsed = time.perf_counter() - start
    ok = all(v.status == HOLDS for v in verdicts) and elapsed < 10
    assert acceptance(4, ok, f"{len(verdicts)} verdicts, {elapsed:.2f}s")


_shift_law_failures = []
_shift_law_cases = []


@settings(max_examples=250, deadline=None, database=None, derandomize=True)
@given(st.lists(st.integers(-9, 9), max_size=6), st.integers(0, 5))
def _shift_law(f_coeffs, m):
    f = bell.UmbralPolynomial(f_coeffs)
    lhs = bell.umbral_eval(bell.UmbralPolynomial.from_int_poly(falling_factorial(m)) * f)
    _shift_law_cases.append((tuple(f_coeffs), m))
    if lhs != bell.umbral_eval(f.translate(m)).shift(m):
        _shift_law_failures.append((f_coeffs, m))


def test_5_umbral_laws(acceptance):
    _shift_law()
    distinct = len(set(_shift_law_cases))
    laws = [c.verify_umbral_falling_law(m, n) for m in range(11) for n in range(11)]
    laws += [c.verify_umbral_shifted_law(m) for m in range(1, 11)]
    ok = not _shift_law_failures and distinct >= 200 and all(v.status == HOLDS for v in laws)
    assert acceptance(5, ok, f"{distinct} random f, {len(laws)} law instances")


def test_6_congruence_family(acceptance):
    verdicts = []
    for p in PRIMES:
        verdicts += c.verify_bell_derangement(p)
        for n in range(11):
            verdicts += c.verify_touchard_family(n, p)
            for m in range(11):
                verdicts += c.verify_derangement_bell_family(n, m, p)
        for m in range(1, 11):
            if m % p:
                verdicts += c.verify_shifted_reciprocal_sums(m, p)
    excluded = [v for v in verdicts if v.status == EXCLUDED]
    ok = all_hold(verdicts) and all(v.check_id == "bell_block_sum" and v.params["n"] == 0 for v in excluded)
    assert acceptance(6, ok, f"{len(verdicts)} verdicts, {len(excluded)} out of scope")


def test_7_oracle_equivalence(acceptance):
    start = time.perf_counter()
    verdicts = [v for n in range(11) for v in c.verify_oracle(n, partition_cap=10, permutation_cap=9)]
    elapsed = time.perf_counter() - start
    evaluated = {(v.check_id, v.params["n"]) for v in verdicts if v.status == HOLDS}
    ok = (
        all(v.status != c.FAILS for v in verdicts)
        and all(("oracle.bell", n) in evaluated and ("oracle.singleton_free", n) in evaluated for n in range(11))
        and all(("oracle.derangements", n) in evaluated and ("oracle.stirling1", n) in evaluated for n in range(10))
        and elapsed < 60
    )
    assert acceptance(7, ok, f"{len(evaluated)} checks, {elapsed:.2f}s")


def test_8_dual_path_guard(acceptance):
    mismatches = 0
    cells = 0
    for n, m, p in GRID:
        for big, fld, _ in c.reciprocal_sum_general_sides(n, m, p).values():
            mismatches += big != fld
        for big, fld, _ in c.reciprocal_sum_numbers_sides(n, m, p).values():
            mismatches += big != fld
        cells += 1
    for p in PRIMES:
        for m in range(1, M_MAX + 1):
            if m % p:
                big, fld, _ = c.reciprocal_sum_sides(m, p)
                mismatches += big != fld
    guarded = c.run_suite(c.SuiteConfig(suite="congruences"))
    tripped = [v for v in guarded.verdicts if v.note == c.GUARD_NOTE]
    ok = mismatches == 0 and not tripped and not guarded.counterexamples
    assert acceptance(8, ok, f"{cells} cells compared directly, {len(guarded.verdicts)} guarded verdicts")


def test_9_fault_injection(acceptance, capsys, corrupted_bell_table):
    code = main(["verify", "--nmax", "2", "--mmax", "3", "--pmax", "7", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    ok = code == 1 and len(doc["counterexamples"]) > 0
    assert acceptance(9, ok, f"exit {code}, {len(doc['counterexamples'])} counterexamples")


def test_default_acceptance_run(acceptance, capsys):
    code = main(["verify", "--suite", "all", "--nmax", "6", "--mmax", "10", "--pmax", "61", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    ok = code == 0 and doc["counterexamples"] == [] and doc["summary"]["fails"] == 0
    assert acceptance("default-run", ok, f"{doc['summary']}")
