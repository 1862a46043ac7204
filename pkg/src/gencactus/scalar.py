"""Exact scalar arithmetic: rationals and real cyclotomic numbers.

The irrational numbers that appear in Coxeter Gram matrices are the values
cos(pi/m).  We represent them inside Q[x]/Phi_N(x) where Phi_N is the N-th
cyclotomic polynomial and x stands for exp(2*pi*i/N), so that

    cos(pi/m) = (x**(N/(2m)) + x**(N - N/(2m))) / 2        (2m divides N).

Rationals are plain ``fractions.Fraction``.  Zero-testing of a CycloReal is
exact (reduce and compare coefficients); the sign of a nonzero value is
certified by interval evaluation of the embedding x -> exp(2*pi*i/N) at
increasing precision until the interval excludes zero.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Union

import mpmath

__all__ = [
    "Rational",
    "Scalar",
    "CycloReal",
    "cyclotomic_polynomial",
    "cos_pi_over",
    "rational_cos_pi_over",
    "scalar_sign",
    "format_scalar",
    "parse_scalar",
]

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.  Phi_1 = x - 1."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_int_divide(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_int_divide(num: list[int], den: list[int]) -> list[int]:
    # den is monic; the division is exact for cyclotomic factors.
    out = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for k in range(len(out) - 1, -1, -1):
        c = rem[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                rem[k + i] -= c * d
    if any(rem):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    """Reduce a coefficient list modulo Phi_n to degree < deg(Phi_n)."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    work = coeffs
    for k in range(len(work) - 1, d - 1, -1):
        c = work[k]
        if c:
            for i in range(d + 1):
                work[k - d + i] -= c * phi[i]
    del work[d:]
    while len(work) < d:
        work.append(_ZERO)
    return tuple(work)


class CycloReal:
    """An element of Q[x]/Phi_N(x), used only for values fixed by x -> 1/x.

    Instances are immutable.  Arithmetic between different conductors lifts
    both operands to the least common conductor.  Hashing is consistent with
    equality for rational values at any conductor and for irrational values
    sharing a conductor; code in this package keeps each Coxeter system at a
    single fixed conductor.
    """

    __slots__ = ("conductor", "coeffs", "_sign", "_hash")

    def __init__(self, conductor: int, coeffs) -> None:
        coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        self.conductor = conductor
        self.coeffs = _reduce(coeffs, conductor)
        self._sign = None
        self._hash = None

    @classmethod
    def from_rational(cls, value, conductor: int = 1) -> "CycloReal":
        return cls(conductor, [Fraction(value)])

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self.coeffs[0]

    def lift(self, conductor: int) -> "CycloReal":
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError("target conductor must be a multiple")
        step = conductor // self.conductor
        out = [_ZERO] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            out[k * step] = c
        return CycloReal(conductor, out)

    def conjugate(self) -> "CycloReal":
        """Image under x -> x**(N-1), i.e. complex conjugation."""
        n = self.conductor
        out = [_ZERO] * n
        for k, c in enumerate(self.coeffs):
            out[(n - k) % n] += c
        return CycloReal(n, out)

    def is_conjugation_fixed(self) -> bool:
        return self.conjugate() == self

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloReal):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloReal(self.conductor, [Fraction(other)])
        return None

    def _aligned(self, other: "CycloReal"):
        if self.conductor == other.conductor:
            return self, other
        n = math.lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        return CycloReal(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloReal(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        return CycloReal(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        if a.is_rational():
            q = a.coeffs[0]
            return CycloReal(b.conductor, [q * c for c in b.coeffs])
        if b.is_rational():
            q = b.coeffs[0]
            return CycloReal(a.conductor, [q * c for c in a.coeffs])
        out = [_ZERO] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return CycloReal(a.conductor, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycloReal":
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_rational():
            return CycloReal(self.conductor, [1 / self.coeffs[0]])
        # extended Euclid against Phi_N over Q; Phi_N is irreducible, so the
        # gcd is a nonzero constant.
        n = self.conductor
        r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r1 = list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while any(r1):
            q, r = _poly_frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        g = _poly_trim(r0)
        if len(g) != 1:
            raise ArithmeticError("cyclotomic modulus not irreducible?")
        inv = [c / g[0] for c in s0]
        return CycloReal(n, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self.inverse() if k < 0 else self
        k = abs(k)
        out = CycloReal.from_rational(1, self.conductor)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycloReal):
            a, b = self._aligned(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    # -- sign and numeric evaluation ----------------------------------------

    def sign(self) -> int:
        """-1, 0 or +1, certified.  Zero is decided exactly."""
        if self._sign is None:
            self._sign = self._compute_sign()
        return self._sign

    def _compute_sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            q = self.coeffs[0]
            return -1 if q < 0 else 1
        if not self.is_conjugation_fixed():
            raise ValueError("sign of a non-real cyclotomic value")
        prec = 64
        while True:
            val = self._interval_value(prec)
            if val > 0:
                return 1
            if val < 0:
                return -1
            prec *= 2

    def _interval_value(self, prec: int):
        iv = mpmath.iv
        saved = iv.prec
        try:
            iv.prec = prec
            total = iv.mpf(0)
            n = self.conductor
            for k, c in enumerate(self.coeffs):
                if c:
                    coef = iv.mpf(c.numerator) / c.denominator
                    total += coef * iv.cos(iv.pi * (2 * k) / n)
            return total
        finally:
            iv.prec = saved

    def to_mpf(self, prec: int = 80):
        """High-precision floating approximation (for tests and display)."""
        with mpmath.workprec(prec):
            n = self.conductor
            total = mpmath.mpf(0)
            for k, c in enumerate(self.coeffs):
                if c:
                    total += mpmath.mpf(c.numerator) / c.denominator * mpmath.cos(
                        2 * mpmath.pi * k / n
                    )
            return total

    def __float__(self):
        return float(self.to_mpf())

    def __repr__(self):
        return f"CycloReal({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_frac_divmod(num, den):
    den = _poly_trim(list(den))
    rem = list(num)
    if len(den) == 1 and den[0] == 0:
        raise ZeroDivisionError("division by zero")
    q = [_ZERO] * max(1, len(rem) - len(den) + 1)
    lead = den[-1]
    for k in range(len(rem) - len(den), -1, -1):
        c = rem[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for i, d in enumerate(den):
                rem[k + i] -= c * d
    return q, _poly_trim(rem)


def rational_cos_pi_over(m: int) -> Fraction | None:
    """cos(pi/m) when it is rational (m in {1, 2, 3}), else None."""
    if m == 1:
        return Fraction(-1)
    if m == 2:
        return Fraction(0)
    if m == 3:
        return Fraction(1, 2)
    return None


def cos_pi_over(m: int, conductor: int | None = None) -> CycloReal:
    """Exact cos(pi/m) as a CycloReal.

    The value lives at conductor 2m by default; an explicit conductor must be
    a multiple of 2m (rational values accept any conductor).
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    q = rational_cos_pi_over(m)
    if q is not None:
        return CycloReal.from_rational(q, conductor or 1)
    n = conductor or 2 * m
    if n % (2 * m):
        raise ValueError(f"conductor {n} does not contain cos(pi/{m})")
    e = n // (2 * m)
    coeffs = [_ZERO] * n
    coeffs[e] += Fraction(1, 2)
    coeffs[n - e] += Fraction(1, 2)
    return CycloReal(n, coeffs)


Scalar = Union[Fraction, CycloReal]


def scalar_sign(x: Scalar) -> int:
    if isinstance(x, CycloReal):
        return x.sign()
    return -1 if x < 0 else (0 if x == 0 else 1)


def format_scalar(x: Scalar) -> str:
    """Exact string form: "p/q" for rationals, else c(k,N) polynomial terms.

    c(k,N) denotes x**k at conductor N under x -> exp(2*pi*i/N); for example
    cos(pi/4) prints as "-1/2*c(3,8)+1/2*c(1,8)".
    """
    if isinstance(x, CycloReal):
        if x.is_rational():
            return str(x.coeffs[0])
        parts = []
        n = x.conductor
        for k in range(len(x.coeffs) - 1, 0, -1):
            c = x.coeffs[k]
            if not c:
                continue
            if c == 1:
                term = f"c({k},{n})"
            elif c == -1:
                term = f"-c({k},{n})"
            else:
                term = f"{c}*c({k},{n})"
            parts.append(term)
        if x.coeffs[0]:
            parts.append(str(x.coeffs[0]))
        out = "+".join(parts)
        return out.replace("+-", "-")
    return str(x)


def parse_scalar(text: str) -> Scalar:
    """Inverse of format_scalar."""
    text = text.strip().replace(" ", "")
    if "c(" not in text:
        return Fraction(text)
    # split into signed terms
    terms: list[str] = []
    depth_start = 0
    for i, ch in enumerate(text):
        if ch == "+" and i > depth_start and text[i - 1] != "(":
            terms.append(text[depth_start:i])
            depth_start = i + 1
        elif ch == "-" and i > depth_start and text[i - 1] not in "(*+/":
            terms.append(text[depth_start:i])
            depth_start = i
    terms.append(text[depth_start:])
    conductor = None
    pieces: list[tuple[Fraction, int]] = []
    for term in terms:
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign = -1
            term = term[1:]
        if "c(" in term:
            if term.startswith("c("):
                coef = Fraction(1)
                rest = term
            else:
                coef_text, rest = term.split("*c(", 1)
                coef = Fraction(coef_text)
                rest = "c(" + rest
            inside = rest[2:-1]
            k_text, n_text = inside.split(",")
            k, n = int(k_text), int(n_text)
            if conductor is None:
                conductor = n
            elif conductor != n:
                raise ValueError("mixed conductors in scalar string")
            pieces.append((sign * coef, k))
        else:
            pieces.append((sign * Fraction(term), 0))
    assert conductor is not None
    coeffs = [_ZERO] * conductor
    for coef, k in pieces:
        coeffs[k] += coef
    return CycloReal(conductor, coeffs)
