"""Checkers for the Bell/derangement identities and congruences.

Every checker returns :class:`Verdict` objects whose two sides are rendered
canonically (decimal strings, or lists of them for polynomials). Polynomial
congruences are coefficientwise: two sides agree iff their canonical
``ModPolynomial`` forms are identical, never merely as functions on GF(p).

Sums of the form ``sum_{k=1}^{p-1} F_k / (-m)^k`` are computed twice:

* big-integer route: ``sum F_k * (-m)^(p-1-k)`` exactly over Z, reduced once
  at the end (uses ``(-m)^(p-1) = 1`` in GF(p), no inverse needed);
* field route: Bell polynomials generated modulo p and the inverse of
  ``-m`` from the extended Euclidean algorithm, reduced at every step.

A checker only reports ``holds`` when both routes agree with each other and
with the right-hand side.
"""

import functools
import time
from dataclasses import dataclass, field

from . import bell, combinat
from .numeric import DomainError, PrimeModulus, mod_inverse, primes_up_to
from .poly import ONE, ZERO, IntPolynomial, ModPolynomial, X, falling_factorial, reduce_mod

__all__ = [
    "ExcludedCaseError",
    "Verdict",
    "SuiteReport",
    "SuiteConfig",
    "HOLDS",
    "FAILS",
    "EXCLUDED",
    "verify_lagrange",
    "verify_falling_identity",
    "verify_shifted_identity",
    "verify_shifted_identity_numbers",
    "verify_orthogonality",
    "verify_bell_addition",
    "verify_umbral_falling_law",
    "verify_umbral_shifted_law",
    "verify_reciprocal_sum",
    "verify_reciprocal_sum_general",
    "verify_reciprocal_sum_numbers",
    "verify_touchard_family",
    "verify_bell_derangement",
    "verify_shifted_reciprocal_sums",
    "verify_derangement_bell_family",
    "verify_oracle",
    "reciprocal_sum_sides",
    "reciprocal_sum_general_sides",
    "reciprocal_sum_numbers_sides",
    "sweep_constant",
    "sweep_prediction",
    "run_suite",
    "clear_caches",
]

HOLDS = "holds"
FAILS = "fails"
EXCLUDED = "excluded"

GUARD_NOTE = "exactness guard: big-integer and GF(p) routes disagree"


class ExcludedCaseError(DomainError):
    """The parameters fall outside the hypotheses (``p`` divides ``m``)."""


def render(value):
    """Canonical rendering used on both sides of a verdict."""
    if isinstance(value, (IntPolynomial, ModPolynomial)):
        return tuple(str(c) for c in value.coeffs)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return tuple(str(v) for v in value)
    raise TypeError(f"cannot render {type(value).__name__}")


@dataclass(frozen=True)
class Verdict:
    check_id: str
    params: dict
    status: str
    lhs: object = None
    rhs: object = None
    note: str | None = None

    @property
    def holds(self):
        return self.status == HOLDS

    def sort_key(self):
        return (self.check_id, tuple(sorted(self.params.items())))

    def to_dict(self):
        def out(side):
            return list(side) if isinstance(side, tuple) else side

        d = {
            "check_id": self.check_id,
            "params": {k: str(v) for k, v in self.params.items()},
            "status": self.status,
            "lhs": out(self.lhs),
            "rhs": out(self.rhs),
        }
        if self.note:
            d["note"] = self.note
        return d


def _verdict(check_id, params, lhs, rhs, alt_lhs=None, note=None):
    lhs_r, rhs_r = render(lhs), render(rhs)
    ok = lhs_r == rhs_r
    if alt_lhs is not None and render(alt_lhs) != lhs_r:
        ok = False
        note = GUARD_NOTE
    return Verdict(check_id, dict(params), HOLDS if ok else FAILS, lhs_r, rhs_r, note)


def _excluded(check_id, params, note):
    return Verdict(check_id, dict(params), EXCLUDED, None, None, note)


@dataclass
class SuiteReport:
    suite_name: str
    generated_for: dict
    verdicts: list = field(default_factory=list)
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.verdicts = sorted(self.verdicts, key=Verdict.sort_key)

    @property
    def counterexamples(self):
        return [v for v in self.verdicts if v.status == FAILS]

    def summary(self):
        counts = {HOLDS: 0, FAILS: 0, EXCLUDED: 0}
        for v in self.verdicts:
            counts[v.status] += 1
        return {"total": len(self.verdicts), **counts}


@functools.cache
def _inverse_of_neg(m, p):
    # inverse of -m in GF(p); only the field route uses it
    return mod_inverse(-m, p)


def _check_scope(m, p):
    p = PrimeModulus(p)
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if m % p == 0:
        raise ExcludedCaseError(f"p={int(p)} divides m={m}")
    return p


def _sign(e):
    return -1 if e % 2 else 1


# --- reciprocal sums, both routes -----------------------------------------


@functools.cache
def _poly_sum_big(j, m, p):
    """``sum_{k=1}^{p-1} B_{j+k}(x) (-m)^(p-1-k)`` over Z."""
    acc = []
    for k in range(1, p):
        c = (-m) ** (p - 1 - k)
        coeffs = bell.bell_polynomial(j + k).coeffs
        if len(acc) < len(coeffs):
            acc.extend([0] * (len(coeffs) - len(acc)))
        for i, b in enumerate(coeffs):
            acc[i] += c * b
    return IntPolynomial(acc)


@functools.cache
def _poly_sum_mod(j, m, p):
    """The same sum in GF(p): ``sum B_{j+k}(x) * inv(-m)^k``."""
    inv = _inverse_of_neg(m, p)
    acc = ModPolynomial((), p)
    w = 1
    for k in range(1, p):
        w = w * inv % p
        acc = acc + bell.bell_polynomial_mod(j + k, p).scale(w)
    return acc


def _num_sum_big(j, m, p, lo=1):
    return sum(combinat.bell_number(j + k) * (-m) ** (p - 1 - k) for k in range(lo, p))


def _num_sum_mod(j, m, p, lo=1):
    inv = _inverse_of_neg(m, p)
    return sum(bell.bell_number_mod(j + k, p) * pow(inv, k, p) for k in range(lo, p)) % p


def clear_caches():
    """Drop every memo table, including the polynomial caches in :mod:`ucl.bell`."""
    bell.clear_caches()
    for fn in (_poly_sum_big, _poly_sum_mod, _inverse_of_neg, _reflected_mod):
        fn.cache_clear()


@functools.cache
def _reflected_mod(k, p):
    return reduce_mod(bell.derangement_reflected(k), p)


# --- exact identities over Z ----------------------------------------------


def verify_falling_identity(m, n):
    """``sum_j s(m,j) B_{j+n}(x) == x^m sum_j C(n,j) B_j(x) m^(n-j)``."""
    if m < 0 or n < 0:
        raise DomainError("m, n must be >= 0")
    lhs = ZERO
    for j, s in enumerate(combinat.stirling_first_row(m)):
        lhs = lhs + bell.bell_polynomial(j + n).scale(s)
    rhs = ZERO
    for j in range(n + 1):
        rhs = rhs + bell.bell_polynomial(j).scale(combinat.binomial(n, j) * m ** (n - j))
    return _verdict("falling_identity", {"m": m, "n": n}, lhs, rhs.shift(m))


def verify_shifted_identity(m):
    """``sum_j s(m,j) B_{j-1}(x) == (-1)^(m-1) D_{m-1}(1-x)``; the ``j = 0`` term vanishes."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    row = combinat.stirling_first_row(m)
    lhs = ZERO
    for j in range(1, m + 1):
        lhs = lhs + bell.bell_polynomial(j - 1).scale(row[j])
    rhs = bell.derangement_reflected(m - 1).scale(_sign(m - 1))
    return _verdict("shifted_identity", {"m": m}, lhs, rhs)


def verify_shifted_identity_numbers(m):
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    row = combinat.stirling_first_row(m)
    lhs = sum(row[j] * combinat.bell_number(j - 1) for j in range(1, m + 1))
    rhs = _sign(m - 1) * combinat.derangement_number(m - 1)
    return _verdict("shifted_identity_numbers", {"m": m}, lhs, rhs)


def verify_orthogonality(m):
    """``sum_{j=k}^m s(m,j) S(j,k) == [m == k]`` for every ``k`` in ``0..m``."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    sums = [
        sum(combinat.stirling_first(m, j) * combinat.stirling_second(j, k) for j in range(k, m + 1))
        for k in range(m + 1)
    ]
    delta = [int(k == m) for k in range(m + 1)]
    return _verdict("stirling_orthogonality", {"m": m}, sums, delta)


def verify_bell_addition(m, n):
    """``B_{m+n}(x) == sum_k S(m,k) x^k sum_j C(n,j) B_j(x) k^(n-j)``.

    Returns the polynomial verdict and its ``x = 1`` specialization.
    """
    if m < 0 or n < 0:
        raise DomainError("m, n must be >= 0")
    params = {"m": m, "n": n}
    rhs = ZERO
    rhs_num = 0
    for k, s in enumerate(combinat.stirling_second_row(m)):
        if not s:
            continue
        inner = ZERO
        inner_num = 0
        for j in range(n + 1):
            w = combinat.binomial(n, j) * k ** (n - j)
            inner = inner + bell.bell_polynomial(j).scale(w)
            inner_num += w * combinat.bell_number(j)
        rhs = rhs + inner.shift(k).scale(s)
        rhs_num += s * inner_num
    return (
        _verdict("bell_addition", params, bell.bell_polynomial(m + n), rhs),
        _verdict("bell_addition_numbers", params, combinat.bell_number(m + n), rhs_num),
    )


def verify_umbral_falling_law(m, n):
    """Umbral ``y(y-1)...(y-m+1) y^n`` against ``x^m (y+m)^n`` evaluated."""
    lhs = bell.umbral_falling_product(m, n)
    rhs = bell.umbral_eval(bell.UmbralPolynomial.shifted_power(m, n)).shift(m)
    return _verdict("umbral_falling_law", {"m": m, "n": n}, lhs, rhs)


def verify_umbral_shifted_law(m):
    lhs = bell.umbral_shifted_product(m)
    rhs = bell.derangement_reflected(m - 1).scale(_sign(m - 1))
    return _verdict("umbral_shifted_law", {"m": m}, lhs, rhs)


# --- congruences in GF(p) -------------------------------------------------


def verify_lagrange(p):
    """``x(x-1)...(x-p+1) == x^p - x`` coefficientwise modulo ``p``."""
    p = PrimeModulus(p)
    big = reduce_mod(falling_factorial(p), p)
    field_route = ModPolynomial((1,), p)
    for i in range(p):
        field_route = field_route * ModPolynomial((-i, 1), p)
    rhs = reduce_mod(IntPolynomial.monomial(p) - X, p)
    return _verdict("lagrange", {"p": int(p)}, big, rhs, alt_lhs=field_route)


def reciprocal_sum_sides(m, p):
    """``(big_lhs, field_lhs, rhs)`` for the degree-weighted reciprocal Bell sum.

    ``(-x)^m sum_{k=1}^{p-1} B_k(x)/(-m)^k`` against
    ``(-x)^p sum_{k=0}^{m-1} ((m-1)!/k!) (-x)^k``.
    """
    p = _check_scope(m, p)
    sign = _sign(m)
    big = reduce_mod(_poly_sum_big(0, m, int(p)).shift(m).scale(sign), p)
    field_route = _poly_sum_mod(0, m, int(p)).shift(m).scale(sign)
    rhs = ZERO
    for k in range(m):
        ratio = 1
        for i in range(k + 1, m):
            ratio *= i
        rhs = rhs + IntPolynomial.monomial(k, ratio * _sign(k))
    rhs = rhs.shift(p).scale(_sign(p))
    return big, field_route, reduce_mod(rhs, p)


def verify_reciprocal_sum(m, p):
    big, field_route, rhs = reciprocal_sum_sides(m, p)
    return _verdict("reciprocal_sum", {"m": m, "p": int(p)}, big, rhs, alt_lhs=field_route)


def reciprocal_sum_general_sides(n, m, p):
    """Sides of both forms of the generalized sum, as ``ModPolynomial``s.

    Returns ``{"stirling2": (big, field, rhs), "stirling1": (big, field, rhs)}``:

    * stirling2: ``x^m sum_k B_{n+k}(x)/(-m)^k`` against
      ``x^p sum_k S(n,k) (-1)^(m+k-1) D_{m+k-1}(1-x)``;
    * stirling1: ``x^m sum_j s(n,j) sum_k B_{j+k}(x)/(-m)^k`` against
      ``(-1)^(m+n-1) x^p D_{m+n-1}(1-x)``.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    p = _check_scope(m, p)
    ip = int(p)

    big2 = reduce_mod(_poly_sum_big(n, m, ip).shift(m), p)
    field2 = _poly_sum_mod(n, m, ip).shift(m)
    rhs2 = ZERO
    for k, s in enumerate(combinat.stirling_second_row(n)):
        if s:
            rhs2 = rhs2 + bell.derangement_reflected(m + k - 1).scale(s * _sign(m + k - 1))
    rhs2 = reduce_mod(rhs2.shift(ip), p)

    row = combinat.stirling_first_row(n)
    big1 = ZERO
    field1 = ModPolynomial((), p)
    for j, s in enumerate(row):
        if s:
            big1 = big1 + _poly_sum_big(j, m, ip).scale(s)
            field1 = field1 + _poly_sum_mod(j, m, ip).scale(s)
    big1 = reduce_mod(big1.shift(m), p)
    field1 = field1.shift(m)
    rhs1 = _reflected_mod(m + n - 1, ip).shift(ip).scale(_sign(m + n - 1))
    return {"stirling2": (big2, field2, rhs2), "stirling1": (big1, field1, rhs1)}


def verify_reciprocal_sum_general(n, m, p):
    sides = reciprocal_sum_general_sides(n, m, p)
    params = {"m": m, "n": n, "p": int(p)}
    return tuple(
        _verdict(f"reciprocal_sum_general.{form}", params, big, rhs, alt_lhs=fld)
        for form, (big, fld, rhs) in sides.items()
    )


def reciprocal_sum_numbers_sides(n, m, p):
    """Scalar (``x = 1``) sides, residues in ``[0, p-1]``, keyed like the polynomial form."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    p = _check_scope(m, p)
    ip = int(p)
    big2 = _num_sum_big(n, m, ip) % ip
    field2 = _num_sum_mod(n, m, ip)
    rhs2 = sum(
        s * _sign(m + k - 1) * combinat.derangement_number(m + k - 1)
        for k, s in enumerate(combinat.stirling_second_row(n))
    ) % ip
    row = combinat.stirling_first_row(n)
    big1 = sum(s * _num_sum_big(j, m, ip) for j, s in enumerate(row)) % ip
    field1 = sum(s * _num_sum_mod(j, m, ip) for j, s in enumerate(row)) % ip
    rhs1 = _sign(m + n - 1) * combinat.derangement_number(m + n - 1) % ip
    return {"stirling2": (big2, field2, rhs2), "stirling1": (big1, field1, rhs1)}


def verify_reciprocal_sum_numbers(n, m, p):
    sides = reciprocal_sum_numbers_sides(n, m, p)
    params = {"m": m, "n": n, "p": int(p)}
    return tuple(
        _verdict(f"reciprocal_sum_numbers.{form}", params, big, rhs, alt_lhs=fld)
        for form, (big, fld, rhs) in sides.items()
    )


def verify_touchard_family(n, p):
    """``B_{p+n}(x) == x^p B_n(x) + B_{n+1}(x)`` and ``B_{p+n} == B_n + B_{n+1}`` mod ``p``."""
    p = PrimeModulus(p)
    ip = int(p)
    params = {"n": n, "p": ip}
    poly_rhs = bell.bell_polynomial(n).shift(ip) + bell.bell_polynomial(n + 1)
    poly = _verdict(
        "touchard_poly", params,
        reduce_mod(bell.bell_polynomial(ip + n), p), reduce_mod(poly_rhs, p),
        alt_lhs=bell.bell_polynomial_mod(ip + n, p),
    )
    num = _verdict(
        "touchard", params,
        combinat.bell_number(ip + n) % ip,
        (combinat.bell_number(n) + combinat.bell_number(n + 1)) % ip,
        alt_lhs=bell.bell_number_mod(ip + n, p),
    )
    return poly, num


def verify_bell_derangement(p):
    """``B_{p-1}(x) == 1 + D_{p-1}(1-x)`` and ``B_{p-1} == 1 + D_{p-1}`` mod ``p``."""
    p = PrimeModulus(p)
    ip = int(p)
    params = {"p": ip}
    poly = _verdict(
        "bell_derangement_poly", params,
        reduce_mod(bell.bell_polynomial(ip - 1), p),
        reduce_mod(ONE + bell.derangement_reflected(ip - 1), p),
        alt_lhs=bell.bell_polynomial_mod(ip - 1, p),
    )
    num = _verdict(
        "bell_derangement", params,
        combinat.bell_number(ip - 1) % ip,
        (1 + combinat.derangement_number(ip - 1)) % ip,
        alt_lhs=bell.bell_number_mod(ip - 1, p),
    )
    return poly, num


def verify_shifted_reciprocal_sums(m, p):
    """``sum B_{k+1}/(-m)^k == (-1)^m D_m`` and ``sum B_{k+2}/(-m)^k == (-1)^m (D_m - D_{m+1})``."""
    p = _check_scope(m, p)
    ip = int(p)
    params = {"m": m, "p": ip}
    d_m, d_next = combinat.derangement_number(m), combinat.derangement_number(m + 1)
    first = _verdict(
        "shifted_reciprocal_sum.1", params,
        _num_sum_big(1, m, ip) % ip, _sign(m) * d_m % ip,
        alt_lhs=_num_sum_mod(1, m, ip),
    )
    second = _verdict(
        "shifted_reciprocal_sum.2", params,
        _num_sum_big(2, m, ip) % ip, _sign(m) * (d_m - d_next) % ip,
        alt_lhs=_num_sum_mod(2, m, ip),
    )
    return first, second


def verify_derangement_bell_family(n, m, p):
    """Three scalar congruences for any prime ``p`` and ``n, m >= 0``.

    * ``D_{pn+m} == (-1)^n D_m``;
    * ``sum_{k=1}^{p-1} (-1)^k B_{n+k} == V_n``;
    * ``sum_{k=1}^{p-1} B_{n+k} - sum_{k=1}^{n-1} B_k == D_{p-1}``, only for
      ``n >= 1``: at ``n = 0`` the empty-sum reading is off by ``B_0``, so
      that cell is reported as excluded.
    """
    if n < 0 or m < 0:
        raise DomainError("n, m must be >= 0")
    p = PrimeModulus(p)
    ip = int(p)
    params = {"m": m, "n": n, "p": ip}
    periodic = _verdict(
        "derangement_periodicity", params,
        combinat.derangement_number(ip * n + m) % ip,
        _sign(n) * combinat.derangement_number(m) % ip,
        alt_lhs=bell.derangement_number_mod(ip * n + m, p),
    )
    alternating = _verdict(
        "alternating_bell_sum", params,
        sum(_sign(k) * combinat.bell_number(n + k) for k in range(1, ip)) % ip,
        combinat.singleton_free_count(n) % ip,
        alt_lhs=sum(_sign(k) * bell.bell_number_mod(n + k, p) for k in range(1, ip)) % ip,
    )
    if n == 0:
        block = _excluded("bell_block_sum", params, "requires n >= 1")
    else:
        block = _verdict(
            "bell_block_sum", params,
            (sum(combinat.bell_number(n + k) for k in range(1, ip))
             - sum(combinat.bell_number(k) for k in range(1, n))) % ip,
            combinat.derangement_number(ip - 1) % ip,
            alt_lhs=(sum(bell.bell_number_mod(n + k, p) for k in range(1, ip))
                     - sum(bell.bell_number_mod(k, p) for k in range(1, n))) % ip,
        )
    return periodic, alternating, block


# --- enumeration oracles --------------------------------------------------


def verify_oracle(n, partition_cap=combinat.DEFAULT_PARTITION_CAP,
                  permutation_cap=combinat.DEFAULT_PERMUTATION_CAP, census=None):
    """Compare exhaustive counts on [n] with the closed forms."""
    if census is None:
        census = combinat.oracle_census(n, partition_cap, permutation_cap)
    params = {"n": n}
    out = [
        _verdict("oracle.bell", params, census.bell, combinat.bell_number(n)),
        _verdict("oracle.stirling2", params, census.stirling2_by_blocks,
                 list(combinat.stirling_second_row(n))),
        _verdict("oracle.singleton_free", params, census.singleton_free,
                 combinat.singleton_free_count(n)),
    ]
    if census.cycles_by_count is None:
        note = f"n exceeds permutation cap {permutation_cap}"
        out.append(_excluded("oracle.stirling1", params, note))
        out.append(_excluded("oracle.derangements", params, note))
    else:
        unsigned = [abs(s) for s in combinat.stirling_first_row(n)]
        out.append(_verdict("oracle.stirling1", params, census.cycles_by_count, unsigned))
        out.append(_verdict("oracle.derangements", params, census.derangements,
                            combinat.derangement_number(n)))
    return out


# --- sweeps and suites ----------------------------------------------------


def sweep_prediction(m, include_k0=True):
    """The integer every residue should match: ``[include_k0] + (-1)^(m-1) D_{m-1}``."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return int(include_k0) + _sign(m - 1) * combinat.derangement_number(m - 1)


def sweep_constant(m, p_max, include_k0=True):
    """Residues of ``sum_k B_k / (-m)^k`` over every prime ``p <= p_max``.

    The sum runs over ``k = 0..p-1`` (or ``1..p-1`` without ``include_k0``);
    primes dividing ``m`` are reported as excluded.
    """
    start = time.perf_counter()
    constant = sweep_prediction(m, include_k0)
    lo = 0 if include_k0 else 1
    verdicts = []
    for p in primes_up_to(p_max):
        params = {"m": m, "p": p}
        if m % p == 0:
            verdicts.append(_excluded("sweep_constant", params, f"p={p} divides m={m}"))
            continue
        verdicts.append(_verdict(
            "sweep_constant", params,
            _num_sum_mod(0, m, p, lo), constant % p,
            alt_lhs=_num_sum_big(0, m, p, lo) % p,
        ))
    return SuiteReport(
        suite_name="sweep",
        generated_for={"m": m, "p_max": p_max, "include_k0": include_k0},
        verdicts=verdicts,
        elapsed=time.perf_counter() - start,
        extra={"constant": str(constant)},
    )


SUITES = ("all", "identities", "congruences", "oracles")


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 6
    m_max: int = 10
    p_max: int = 61
    partition_cap: int = 10
    permutation_cap: int = 9
    suite: str = "all"

    def __post_init__(self):
        if self.suite not in SUITES:
            raise DomainError(f"unknown suite {self.suite!r}")
        for name in ("n_max", "p_max", "partition_cap", "permutation_cap"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")
        if self.m_max < 1:
            raise DomainError("m_max must be >= 1")

    def as_dict(self):
        return {
            "n_max": self.n_max, "m_max": self.m_max, "p_max": self.p_max,
            "partition_cap": self.partition_cap, "permutation_cap": self.permutation_cap,
            "suite": self.suite,
        }


# check ids produced by each scoped checker, for recording p | m cells
_SCOPED_IDS = {
    verify_reciprocal_sum: ("reciprocal_sum",),
    verify_reciprocal_sum_general: ("reciprocal_sum_general.stirling2",
                                    "reciprocal_sum_general.stirling1"),
    verify_reciprocal_sum_numbers: ("reciprocal_sum_numbers.stirling2",
                                    "reciprocal_sum_numbers.stirling1"),
    verify_shifted_reciprocal_sums: ("shifted_reciprocal_sum.1", "shifted_reciprocal_sum.2"),
}


def _scoped(fn, params, *args):
    try:
        out = fn(*args)
    except ExcludedCaseError as exc:
        return [_excluded(cid, params, str(exc)) for cid in _SCOPED_IDS[fn]]
    return list(out) if isinstance(out, tuple) else [out]


def _identity_verdicts(cfg):
    out = []
    for m in range(cfg.m_max + 1):
        out.append(verify_orthogonality(m))
        for n in range(cfg.n_max + 1):
            out.append(verify_falling_identity(m, n))
            out.extend(verify_bell_addition(m, n))
            out.append(verify_umbral_falling_law(m, n))
        if m >= 1:
            out.append(verify_shifted_identity(m))
            out.append(verify_shifted_identity_numbers(m))
            out.append(verify_umbral_shifted_law(m))
    return out


def _congruence_verdicts(cfg):
    out = []
    for p in primes_up_to(cfg.p_max):
        out.append(verify_lagrange(p))
        out.extend(verify_bell_derangement(p))
        for n in range(cfg.n_max + 1):
            out.extend(verify_touchard_family(n, p))
            for m in range(cfg.m_max + 1):
                out.extend(verify_derangement_bell_family(n, m, p))
        for m in range(1, cfg.m_max + 1):
            out.extend(_scoped(verify_reciprocal_sum, {"m": m, "p": p}, m, p))
            out.extend(_scoped(verify_shifted_reciprocal_sums, {"m": m, "p": p}, m, p))
            for n in range(cfg.n_max + 1):
                params = {"m": m, "n": n, "p": p}
                out.extend(_scoped(verify_reciprocal_sum_general, params, n, m, p))
                out.extend(_scoped(verify_reciprocal_sum_numbers, params, n, m, p))
    return out


def _oracle_verdicts(cfg):
    out = []
    for n in range(cfg.partition_cap + 1):
        out.extend(verify_oracle(n, cfg.partition_cap, cfg.permutation_cap))
    return out


def run_suite(config=None):
    """Run every checker over the configured ranges and collect a report."""
    cfg = config or SuiteConfig()
    start = time.perf_counter()
    verdicts = []
    if cfg.suite in ("all", "identities"):
        verdicts.extend(_identity_verdicts(cfg))
    if cfg.suite in ("all", "congruences"):
        verdicts.extend(_congruence_verdicts(cfg))
    if cfg.suite in ("all", "oracles"):
        verdicts.extend(_oracle_verdicts(cfg))
    return SuiteReport(
        suite_name=cfg.suite,
        generated_for=cfg.as_dict(),
        verdicts=verdicts,
        elapsed=time.perf_counter() - start,
    )
