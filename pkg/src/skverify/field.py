"""Exact arithmetic in the degree-12 cyclotomic field.

Scalars live in Q[t]/(t^4 - t^2 + 1), t being a fixed primitive 12th root of
unity.  This is the smallest field containing every constant the engine needs:

    i      = t^3          (fourth root of unity)
    omega  = t^4          (third root of unity)
    -1     = t^6
    sqrt 3 = 2t - t^3

Reduction uses t^4 = t^2 - 1 (hence t^5 = t^3 - t, t^6 = -1).  Coefficients
are fractions.Fraction, so everything downstream is exact by construction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UnsupportedOrderError

# Exact rational scalar used throughout the package.
Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


class FieldElem:
    """Element of Q[t]/(t^4 - t^2 + 1), coefficient tuple low to high."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, coeffs) -> None:
        c = tuple(_as_fraction(x) for x in coeffs)
        if len(c) != 4:
            raise ValueError("FieldElem needs exactly 4 coefficients")
        self.coeffs = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(x) -> "FieldElem":
        """Coerce an int, Fraction or FieldElem."""
        if isinstance(x, FieldElem):
            return x
        return FieldElem((_as_fraction(x), 0, 0, 0))

    # -- structure ---------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        c = self.coeffs
        return not (c[1] or c[2] or c[3])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def conj(self) -> "FieldElem":
        """Complex conjugation, the automorphism t -> t^-1."""
        c0, c1, c2, c3 = self.coeffs
        return FieldElem((c0 + c2, c1, -c2, -c1 - c3))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        return FieldElem((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        return FieldElem((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "FieldElem":
        a = self.coeffs
        return FieldElem((-a[0], -a[1], -a[2], -a[3]))

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not (a[1] or a[2] or a[3]):           # rational fast path
            r = a[0]
            return FieldElem((r * b[0], r * b[1], r * b[2], r * b[3]))
        if not (b[1] or b[2] or b[3]):
            r = b[0]
            return FieldElem((r * a[0], r * a[1], r * a[2], r * a[3]))
        c0 = a[0] * b[0]
        c1 = a[0] * b[1] + a[1] * b[0]
        c2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        c3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        c4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
        c5 = a[2] * b[3] + a[3] * b[2]
        c6 = a[3] * b[3]
        # t^4 = t^2 - 1, t^5 = t^3 - t, t^6 = -1
        return FieldElem((c0 - c4 - c6, c1 - c5, c2 + c4, c3 + c5))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        """Multiplicative inverse via extended Euclid in Q[t]."""
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return FieldElem((1 / self.coeffs[0], 0, 0, 0))
        r0: list[Fraction] = [Fraction(1), Fraction(0), Fraction(-1), Fraction(0), Fraction(1)]
        r1 = [Fraction(c) for c in self.coeffs]
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while _pdeg(r1) > 0:
            q, r2 = _pdivmod(r0, r1)
            s2 = _psub(s0, _pmul(q, s1))
            r0, r1, s0, s1 = r1, r2, s1, s2
        lead = r1[0]   # nonzero constant: the modulus is irreducible over Q
        inv = [c / lead for c in s1]
        inv += [Fraction(0)] * (4 - len(inv))
        return FieldElem(tuple(inv[:4]))

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "FieldElem":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*z")
            else:
                parts.append(f"{c}*z^{k}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElem((x, 0, 0, 0))
    return None


# dense little polynomials over Q, low to high, for the inverse only

def _pdeg(p) -> int:
    d = len(p) - 1
    while d >= 0 and not p[d]:
        d -= 1
    return d


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _psub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
            for i in range(n)]


def _pdivmod(a, b):
    a = list(a)
    db, lead = _pdeg(b), None
    lead = b[db]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(_pdeg(a), db - 1, -1):
        if a[i]:
            f = a[i] / lead
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return q, a


ZERO = FieldElem((0, 0, 0, 0))
ONE = FieldElem((1, 0, 0, 0))
ZETA12 = FieldElem((0, 1, 0, 0))


def root_of_unity(n: int) -> FieldElem:
    """Primitive n-th root of unity; n must divide 12."""
    if n <= 0 or 12 % n != 0:
        raise UnsupportedOrderError(f"order {n} does not divide 12")
    return ZETA12 ** (12 // n)


def fe(x) -> FieldElem:
    """Shorthand coercion used throughout the package."""
    return FieldElem.of(x)
