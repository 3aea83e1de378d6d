"""Dense univariate polynomials over Z and over GF(p).

A polynomial ``c0 + c1 x + ... + cd x^d`` is stored as the tuple
``(c0, c1, ..., cd)`` with ``cd != 0``; the zero polynomial is ``()``.
Over GF(p) every coefficient is a canonical residue in ``[0, p-1]``, so two
``ModPolynomial`` objects are congruent exactly when they compare equal.
"""

from .numeric import DomainError, PrimeModulus

__all__ = [
    "IntPolynomial",
    "ModPolynomial",
    "X",
    "ONE",
    "ZERO",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "substitute_one_minus_x",
    "falling_factorial",
    "reduce_mod",
    "mod_poly_arith",
]


def _trim(coeffs):
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


def _convolve(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


class IntPolynomial:
    """Immutable polynomial with integer coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"integer coefficients expected, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    @property
    def degree(self):
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        # coefficients beyond the degree read as zero
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                if mono and c in (1, -1):
                    terms.append(("-" if c < 0 else "") + mono)
                else:
                    terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return IntPolynomial(_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise DomainError("negative polynomial power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        return IntPolynomial([c * a for a in self.coeffs]) if c else ZERO

    def shift(self, k):
        """Multiply by ``x**k``."""
        if not self.coeffs or k == 0:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def __call__(self, v):
        return poly_eval(self, v)

    def compose_affine(self, a, b):
        """The polynomial ``self(a + b*x)``, expanded by Horner's scheme."""
        lin = IntPolynomial((a, b))
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def to_json(self):
        return [str(c) for c in self.coeffs]


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


class ModPolynomial:
    """Polynomial over GF(p) with canonical coefficients."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs, modulus):
        p = PrimeModulus(modulus)
        object.__setattr__(self, "modulus", p)
        object.__setattr__(self, "coeffs", _trim([c % p for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("ModPolynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if not isinstance(other, ModPolynomial):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("ModPolynomial", int(self.modulus), self.coeffs))

    def __repr__(self):
        return f"ModPolynomial({list(self.coeffs)}, p={int(self.modulus)})"

    def _check(self, other):
        if not isinstance(other, ModPolynomial):
            return False
        if other.modulus != self.modulus:
            raise DomainError(
                f"modulus mismatch: {int(self.modulus)} vs {int(other.modulus)}"
            )
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ModPolynomial(out, self.modulus)

    def __neg__(self):
        return ModPolynomial([-c for c in self.coeffs], self.modulus)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        return ModPolynomial(_convolve(self.coeffs, other.coeffs), self.modulus)

    __rmul__ = __mul__

    def scale(self, r):
        return ModPolynomial([r * c for c in self.coeffs], self.modulus)

    def shift(self, k):
        if not self.coeffs or k == 0:
            return self
        return ModPolynomial([0] * k + list(self.coeffs), self.modulus)

    def __call__(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % self.modulus
        return acc

    def lift(self):
        """Canonical integer representative as an ``IntPolynomial``."""
        return IntPolynomial(self.coeffs)

    def to_json(self):
        return [str(c) for c in self.coeffs]


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_eval(a, v):
    """Exact value of ``a`` at the integer ``v`` (Horner)."""
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * v + c
    return acc


def substitute_one_minus_x(a):
    """Return the expansion of ``a(1 - x)``."""
    return a.compose_affine(1, -1)


def falling_factorial(m):
    """``x (x-1) ... (x-m+1)`` expanded; the constant 1 when ``m == 0``."""
    if m < 0:
        raise DomainError(f"falling_factorial expects m >= 0, got {m}")
    coeffs = [1]
    for i in range(m):
        # multiply by (x - i)
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= i * c
        coeffs = nxt
    return IntPolynomial(coeffs)


def reduce_mod(a, p):
    return ModPolynomial(a.coeffs, p)


def mod_poly_arith(a, b, op):
    """Arithmetic on ``ModPolynomial``s.

    ``op`` is ``"add"``, ``"mul"`` or ``"scale"``; for ``"scale"`` the second
    operand is an integer residue.
    """
    if op == "add":
        return a + b
    if op == "mul":
        if not isinstance(b, ModPolynomial):
            raise TypeError("mul expects two ModPolynomials")
        return a * b
    if op == "scale":
        return a.scale(b)
    raise DomainError(f"unknown operation {op!r}")
