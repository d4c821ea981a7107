"""Integer polynomials and rational functions in one variable."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

Number = Union[int, Fraction, float]

__all__ = ["IntPoly", "RatFunc", "X", "ONE", "ZERO"]


def _trim(coeffs: List[int]) -> Tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored in ascending degree order with no trailing
    zeros; the zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            cs.append(int(c))
        self.coeffs = _trim(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod_exact_lead(self, other: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        """Long division, raising if a quotient coefficient is not an integer."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPoly(), self
        quot = [0] * (dq + 1)
        lead = other.lead
        for shift in range(dq, -1, -1):
            c = rem[shift + len(other.coeffs) - 1]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ArithmeticError("quotient has a non-integer coefficient")
            quot[shift] = q
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= q * b
        return IntPoly(quot), IntPoly(rem)

    def __floordiv__(self, other):
        """Exact division; raises ArithmeticError unless ``other`` divides ``self``."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q, r = self.divmod_exact_lead(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- evaluation and transforms ----------------------------------------

    def __call__(self, x: Number):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def reverse(self, degree: int | None = None) -> "IntPoly":
        """``t**degree * p(1/t)``; ``degree`` defaults to ``self.degree``."""
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError(f"declared degree {degree} below actual degree {self.degree}")
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return IntPoly(reversed(padded))

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``x**k``."""
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else IntPoly()

    def low_order(self) -> int:
        """Largest k with x**k dividing self (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    # -- misc --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.format("x")

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


X = IntPoly([0, 1])
ONE = IntPoly([1])
ZERO = IntPoly()


def _to_fraction_poly(p: IntPoly) -> List[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _qpoly_mod(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        off = len(a) - len(b)
        for j, c in enumerate(b):
            a[off + j] -= q * c
        while a and a[-1] == 0:
            a.pop()
    return a


def primitive_part(p: IntPoly) -> IntPoly:
    c = p.content()
    if c == 0:
        return p
    if p.lead < 0:
        c = -c
    return IntPoly(x // c for x in p.coeffs)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (Euclid over Q)."""
    fa, fb = _to_fraction_poly(a), _to_fraction_poly(b)
    while fb:
        fa, fb = fb, _qpoly_mod(fa, fb)
    if not fa:
        return IntPoly()
    den = 1
    for c in fa:
        den = den * c.denominator // gcd(den, c.denominator)
    return primitive_part(IntPoly(c * den for c in fa))


class RatFunc:
    """Ratio ``num / den`` of integer polynomials.

    Not reduced automatically; equality is by cross-multiplication, so
    ``RatFunc(x*x - 1, x - 1) == RatFunc(x + 1)``.  The stored denominator
    always has a positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly | int, den: IntPoly | int = 1):
        num = IntPoly._coerce(num)
        den = IntPoly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if den.lead < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    def __eq__(self, other) -> bool:
        if isinstance(other, (IntPoly, int)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is not structural

    def __add__(self, other):
        if isinstance(other, (IntPoly, int)):
            other = RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (IntPoly, int)):
            other = RatFunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (IntPoly, int)):
            other = RatFunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (IntPoly, int)):
            other = RatFunc(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc(other) / self

    def __call__(self, x: Number):
        return self.num(x) / self.den(x)

    def reciprocal_substitute(self) -> "RatFunc":
        """Return r(1/t) as a ratio of polynomials in t."""
        dn, dd = max(self.num.degree, 0), self.den.degree
        num = self.num.reverse(dn) if not self.num.is_zero() else IntPoly()
        den = self.den.reverse(dd)
        # r(1/t) = t^{-dn} num_rev / (t^{-dd} den_rev)
        if dd >= dn:
            return RatFunc(num.shift(dd - dn), den)
        return RatFunc(num, den.shift(dn - dd))

    def cancel(self, factor: IntPoly) -> "RatFunc":
        """Divide out ``factor`` as often as it divides both sides exactly."""
        num, den = self.num, self.den
        while not num.is_zero():
            try:
                qn, rn = num.divmod_exact_lead(factor)
                qd, rd = den.divmod_exact_lead(factor)
            except ArithmeticError:
                break
            if not (rn.is_zero() and rd.is_zero()):
                break
            num, den = qn, qd
        return RatFunc(num, den)

    def simplified(self) -> "RatFunc":
        """Strip common powers of the variable and common integer content."""
        if self.num.is_zero():
            return RatFunc(IntPoly(), IntPoly([1]))
        k = min(self.num.low_order(), self.den.low_order())
        num = IntPoly(self.num.coeffs[k:])
        den = IntPoly(self.den.coeffs[k:])
        c = gcd(num.content(), den.content())
        if c > 1:
            num = IntPoly(x // c for x in num.coeffs)
            den = IntPoly(x // c for x in den.coeffs)
        return RatFunc(num, den)

    def reduced(self) -> "RatFunc":
        """Lowest terms via a rational Euclidean gcd; meant for small degrees."""
        if self.num.is_zero():
            return RatFunc(IntPoly(), IntPoly([1]))
        g = poly_gcd(self.num, self.den)
        num, den = self.num // g, self.den // g
        c = gcd(num.content(), den.content())
        if c > 1:
            num = IntPoly(x // c for x in num.coeffs)
            den = IntPoly(x // c for x in den.coeffs)
        return RatFunc(num, den)

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def format(self, var: str = "x") -> str:
        return f"({self.num.format(var)}) / ({self.den.format(var)})"

    def __str__(self) -> str:
        return self.format("x")
