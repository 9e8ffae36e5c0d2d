"""Exact scalar field Q(λ): rational functions in one indeterminate.

A Scalar is a quotient num/den of dense integer-coefficient polynomials.
The representation is canonical: num and den share no polynomial factor
(including integer content) and the leading coefficient of den is positive,
so structural equality is field equality and Scalars are hashable.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Dense coefficient tuples, index = degree, no trailing zeros; () is the
# zero polynomial.
Coeffs = tuple[int, ...]

VAR_NAME = "λ"


def _trim(cs) -> Coeffs:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _add(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _neg(a: Coeffs) -> Coeffs:
    return tuple(-c for c in a)


def _sub(a: Coeffs, b: Coeffs) -> Coeffs:
    return _add(a, _neg(b))


def _mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _scale(a: Coeffs, k: int) -> Coeffs:
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def _content(a: Coeffs) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _primitive(a: Coeffs) -> Coeffs:
    g = _content(a)
    if g <= 1:
        return a
    return tuple(c // g for c in a)


def _to_fractions(a: Coeffs) -> list[Fraction]:
    return [Fraction(c) for c in a]


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a mod b over Q; b must be nonzero."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[i + shift] -= q * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _gcd_poly(a: Coeffs, b: Coeffs) -> Coeffs:
    """Polynomial gcd, returned primitive with positive leading coefficient.

    The gcd of the integer contents is folded in, so dividing num and den
    by the result leaves them coprime in Z[x].
    """
    if not a and not b:
        return ()
    if not a:
        c = _primitive(b)
        return c if c[-1] > 0 else _neg(c)
    if not b:
        c = _primitive(a)
        return c if c[-1] > 0 else _neg(c)
    fa, fb = _to_fractions(a), _to_fractions(b)
    while fb:
        fa, fb = fb, _frac_rem(fa, fb)
    # clear denominators, make primitive
    den_lcm = 1
    for c in fa:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = _trim(int(c * den_lcm) for c in fa)
    prim = _primitive(ints)
    if prim[-1] < 0:
        prim = _neg(prim)
    # content part of the gcd
    cont = math.gcd(_content(a), _content(b))
    if prim == (1,):
        return (cont,)
    return _scale(prim, cont) if cont > 1 else prim


def _divexact(a: Coeffs, b: Coeffs) -> Coeffs:
    """Exact polynomial division a / b; raises if not exact."""
    if not a:
        return ()
    fa, fb = _to_fractions(a), _to_fractions(b)
    db, lb = len(b) - 1, fb[-1]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(fa) - 1 >= db and any(fa):
        shift = len(fa) - 1 - db
        c = fa[-1] / lb
        q[shift] = c
        for i, cb in enumerate(fb):
            fa[i + shift] -= c * cb
        while fa and fa[-1] == 0:
            fa.pop()
    if fa:
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("inexact polynomial division")
        out.append(int(c))
    return _trim(out)


def _eval(a: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_str(a: Coeffs, var: str = VAR_NAME) -> str:
    if not a:
        return "0"
    terms = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        if d == 0:
            body = str(abs(c))
        else:
            v = var if d == 1 else f"{var}^{d}"
            body = v if abs(c) == 1 else f"{abs(c)}{v}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms)


class Scalar:
    """An element of Q(λ), kept in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (1,)
        else:
            g = _gcd_poly(num, den)
            if g != (1,):
                num, den = _divexact(num, g), _divexact(den, g)
            if den[-1] < 0:
                num, den = _neg(num), _neg(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def from_int(k: int) -> "Scalar":
        return Scalar((k,))

    @staticmethod
    def from_fraction(q) -> "Scalar":
        q = Fraction(q)
        return Scalar((q.numerator,), (q.denominator,))

    @staticmethod
    def variable() -> "Scalar":
        return Scalar((0, 1))

    @staticmethod
    def _coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return Scalar.from_int(x)
        if isinstance(x, Fraction):
            return Scalar.from_fraction(x)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        return len(self.num) <= 1 and len(self.den) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a constant: {self}")
        n = self.num[0] if self.num else 0
        return Fraction(n, self.den[0])

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(
            _add(_mul(self.num, other.den), _mul(other.num, self.den)),
            _mul(self.den, other.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(
            _sub(_mul(self.num, other.den), _mul(other.num, self.den)),
            _mul(self.den, other.den),
        )

    def __rsub__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(_mul(self.num, other.num), _mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(_mul(self.num, other.den), _mul(self.den, other.num))

    def __rtruediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return Scalar(_neg(self.num), self.den)

    def __eq__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def specialize(self, point) -> Fraction:
        """Evaluate at a rational point; raises ZeroDivisionError on a pole."""
        x = Fraction(point)
        d = _eval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return _eval(self.num, x) / d

    def render(self, var: str = VAR_NAME) -> str:
        n = _poly_str(self.num, var)
        if self.den == (1,):
            return n
        d = _poly_str(self.den, var)
        if " " in n or n.lstrip("-").count(var):
            n = f"({n})"
        if " " in d or d.count(var):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"Scalar({self.render()})"

    def __str__(self):
        return self.render()


ZERO = Scalar.from_int(0)
ONE = Scalar.from_int(1)
LAMBDA = Scalar.variable()


def rational_from_string(text: str) -> Fraction:
    """Parse "7/2", "-3" etc.; used by config and the --specialize flag."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def falling_factorial(x: Scalar, n: int) -> Scalar:
    """x(x-1)...(x-n+1), the n-th falling power."""
    acc = ONE
    for i in range(n):
        acc = acc * (x - Scalar.from_int(i))
    return acc
