"""Bell and derangement polynomials, and the Bell-umbra evaluator.

Both polynomial families are available by two independent routes:

* ``"definition"``: ``B_m(x) = sum_j S(m,j) x^j`` and
  ``D_m(x) = sum_j C(m,j) j! (x-1)^(m-j)``;
* ``"recurrence"``: ``B_{m+1}(x) = x sum_j C(m,j) B_j(x)`` and
  ``D_m(x) = m D_{m-1}(x) + (x-1)^m``.

Each route has its own cache, so comparing them compares two code paths.
The recurrence route is the one the verification engine consumes.

The umbral evaluator is the linear map ``y^j -> B_j(x)`` applied to a
polynomial in ``y`` whose coefficients are polynomials in ``x``.
"""

import math
import threading

from . import combinat
from .numeric import DomainError, PrimeModulus
from .poly import ONE, ZERO, IntPolynomial, ModPolynomial, falling_factorial, substitute_one_minus_x

__all__ = [
    "ROUTES",
    "UmbralPolynomial",
    "bell_polynomial",
    "derangement_polynomial",
    "derangement_reflected",
    "bell_polynomial_mod",
    "bell_number_mod",
    "derangement_number_mod",
    "umbral_eval",
    "umbral_falling_product",
    "umbral_shifted_product",
    "clear_caches",
]

ROUTES = ("definition", "recurrence")

_lock = threading.RLock()
_bell = {route: [] for route in ROUTES}
_derangement = {route: [] for route in ROUTES}
_reflected = {}
_bell_mod = {}
_bell_number_mod = {}
_derangement_mod = {}


def clear_caches():
    """Drop every memoized polynomial (tests use this after fault injection)."""
    with _lock:
        for cache in (_bell, _derangement):
            for rows in cache.values():
                rows.clear()
        _reflected.clear()
        _bell_mod.clear()
        _bell_number_mod.clear()
        _derangement_mod.clear()


def _check_route(route):
    if route not in ROUTES:
        raise DomainError(f"unknown route {route!r}; expected one of {ROUTES}")


def _bell_definition(m):
    return IntPolynomial(combinat.stirling_second_row(m))


def _bell_recurrence_next(rows):
    m = len(rows) - 1
    acc = [0] * (m + 1)
    for j, b in enumerate(rows):
        c = math.comb(m, j)
        for i, coeff in enumerate(b.coeffs):
            acc[i] += c * coeff
    return IntPolynomial(acc).shift(1)


def bell_polynomial(m, route="recurrence"):
    """The Bell polynomial ``B_m(x)``."""
    _check_route(route)
    if m < 0:
        raise DomainError(f"bell_polynomial expects m >= 0, got {m}")
    rows = _bell[route]
    if m < len(rows):
        return rows[m]
    with _lock:
        if route == "definition":
            while len(rows) <= m:
                rows.append(_bell_definition(len(rows)))
        else:
            if not rows:
                rows.append(ONE)
            while len(rows) <= m:
                rows.append(_bell_recurrence_next(rows))
    return rows[m]


def _derangement_definition(m):
    x_minus_1 = IntPolynomial((-1, 1))
    out = ZERO
    for j in range(m + 1):
        out = out + (x_minus_1 ** (m - j)).scale(math.comb(m, j) * math.factorial(j))
    return out


def derangement_polynomial(m, route="recurrence"):
    """The derangement polynomial ``D_m(x)``."""
    _check_route(route)
    if m < 0:
        raise DomainError(f"derangement_polynomial expects m >= 0, got {m}")
    rows = _derangement[route]
    if m < len(rows):
        return rows[m]
    with _lock:
        if route == "definition":
            while len(rows) <= m:
                rows.append(_derangement_definition(len(rows)))
        else:
            if not rows:
                rows.append(ONE)
            x_minus_1 = IntPolynomial((-1, 1))
            while len(rows) <= m:
                k = len(rows)
                rows.append(rows[-1].scale(k) + x_minus_1 ** k)
    return rows[m]


def derangement_reflected(m):
    """``D_m(1 - x)``, memoized."""
    poly = _reflected.get(m)
    if poly is None:
        poly = substitute_one_minus_x(derangement_polynomial(m))
        with _lock:
            _reflected[m] = poly
    return poly


# --- routes carried in GF(p) throughout ----------------------------------


def bell_polynomial_mod(m, p):
    """``B_m(x)`` over GF(p) by the recurrence, reducing after every step.

    Never touches the integer caches: this is the second route of the
    exactness guard.
    """
    p = PrimeModulus(p)
    if m < 0:
        raise DomainError(f"bell_polynomial_mod expects m >= 0, got {m}")
    with _lock:
        rows = _bell_mod.setdefault(int(p), [ModPolynomial((1,), p)])
        while len(rows) <= m:
            k = len(rows) - 1
            acc = [0] * (k + 1)
            for j, b in enumerate(rows):
                c = math.comb(k, j) % p
                if c:
                    for i, coeff in enumerate(b.coeffs):
                        acc[i] = (acc[i] + c * coeff) % p
            rows.append(ModPolynomial([0] + acc, p))
        return rows[m]


def bell_number_mod(m, p):
    """``B_m mod p`` by ``B_{k+1} = sum_j C(k,j) B_j`` carried in GF(p)."""
    p = PrimeModulus(p)
    if m < 0:
        raise DomainError(f"bell_number_mod expects m >= 0, got {m}")
    with _lock:
        seq = _bell_number_mod.setdefault(int(p), [1])
        while len(seq) <= m:
            k = len(seq) - 1
            seq.append(sum(math.comb(k, j) * b for j, b in enumerate(seq)) % p)
        return seq[m]


def derangement_number_mod(n, p):
    """``D_n mod p`` by ``D_n = n D_{n-1} + (-1)^n`` carried in GF(p)."""
    p = PrimeModulus(p)
    if n < 0:
        raise DomainError(f"derangement_number_mod expects n >= 0, got {n}")
    with _lock:
        seq = _derangement_mod.setdefault(int(p), [1])
        while len(seq) <= n:
            k = len(seq)
            seq.append((k * seq[-1] + (-1) ** k) % p)
        return seq[n]


# --- umbral calculus ------------------------------------------------------


class UmbralPolynomial:
    """Polynomial in the umbra ``y`` with ``IntPolynomial`` coefficients in ``x``.

    ``coeffs[j]`` multiplies ``y^j``. Trailing zero coefficients are trimmed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [c if isinstance(c, IntPolynomial) else IntPolynomial.constant(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UmbralPolynomial is immutable")

    @classmethod
    def from_int_poly(cls, poly):
        """Lift a polynomial with integer coefficients to a polynomial in ``y``."""
        return cls(poly.coeffs)

    @classmethod
    def shifted_power(cls, shift, n):
        """``(y + shift)^n`` via the binomial theorem."""
        return cls([math.comb(n, j) * shift ** (n - j) for j in range(n + 1)])

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, UmbralPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UmbralPolynomial", self.coeffs))

    def __repr__(self):
        return f"UmbralPolynomial({[list(c.coeffs) for c in self.coeffs]})"

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UmbralPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, (int, IntPolynomial)):
            return UmbralPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, UmbralPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UmbralPolynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UmbralPolynomial(out)

    __rmul__ = __mul__

    def translate(self, shift):
        """``g(y + shift)`` expanded exactly."""
        out = UmbralPolynomial()
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + UmbralPolynomial.shifted_power(shift, j) * c
        return out


def umbral_eval(g, route="recurrence"):
    """Apply ``y^j -> B_j(x)`` linearly to ``g``."""
    out = ZERO
    for j, c in enumerate(g.coeffs):
        if not c.is_zero():
            out = out + c * bell_polynomial(j, route)
    return out


def umbral_falling_product(m, n):
    """Evaluate ``y (y-1) ... (y-m+1) y^n`` under the Bell umbra."""
    if m < 0 or n < 0:
        raise DomainError(f"umbral_falling_product expects m, n >= 0, got ({m}, {n})")
    g = UmbralPolynomial([0] * n + list(falling_factorial(m).coeffs))
    return umbral_eval(g)


def umbral_shifted_product(m):
    """Evaluate ``(y-1)(y-2) ... (y-m+1)`` under the Bell umbra (1 when ``m == 1``)."""
    if m < 1:
        raise DomainError(f"umbral_shifted_product expects m >= 1, got {m}")
    g = UmbralPolynomial((1,))
    for i in range(1, m):
        g = g * UmbralPolynomial((-i, 1))
    return umbral_eval(g)
