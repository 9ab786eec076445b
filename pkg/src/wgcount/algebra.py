"""Exact univariate polynomials over the rationals.

Coefficients are stored densely in ascending order.  Integral coefficients are
kept as plain ``int`` and everything else as ``fractions.Fraction`` so that the
common integer case stays fast.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

MINUS_INFINITY = float("-inf")


class ExactDivisionError(ArithmeticError):
    """A division that was required to be exact left a nonzero remainder."""


def _norm(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


def binomial(n: int, k: int) -> int:
    """C(n, k) = n(n-1)...(n-k+1)/k!, valid for any integer n."""
    if k < 0:
        raise ValueError("binomial lower argument must be nonnegative")
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


class Poly:
    """Immutable dense polynomial in one variable ``x``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def monomial(cls, coeff, power: int) -> "Poly":
        return cls([0] * power + [coeff])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) <= db:
            return Poly(), self
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
                q = c // lead
            else:
                q = _norm(Fraction(c) / lead)
            quot[i - db] = q
            for j, cb in enumerate(other.coeffs):
                rem[i - db + j] -= q * cb
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ExactDivisionError(f"({self}) is not divisible by ({other}); remainder {r}")
        return q

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return _norm(acc) if isinstance(acc, (int, Fraction)) else acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def negate_x(self) -> "Poly":
        """p(-x)."""
        return Poly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def truncate(self, n: int) -> "Poly":
        return Poly(self.coeffs[:n])

    def padded(self, length: int) -> tuple:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)


def _format_coeff(c: Scalar) -> str:
    return str(c)


def format_poly(p: Poly, var: str = "x") -> str:
    """Canonical text: ascending powers, explicit ``*``, unit coefficients elided."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if i == 0:
            body = _format_coeff(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def poly_det(matrix: Sequence[Sequence]) -> Poly:
    """Determinant of a square polynomial matrix by Bareiss elimination.

    Every division is exact in the polynomial ring, so integer input stays
    integral throughout.
    """
    a = [[Poly._coerce(e) for e in row] for row in matrix]
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("poly_det needs a nonempty square matrix")
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly()
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]).exact_div(prev)
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def identity_minus_x(matrix: Sequence[Sequence[int]]) -> list[list[Poly]]:
    """The polynomial matrix I - x*M."""
    n = len(matrix)
    return [[Poly([1 if i == j else 0, -matrix[i][j]]) for j in range(n)] for i in range(n)]


class RationalFunction:
    """A quotient num/den of polynomials, compared by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = Poly._coerce(num), Poly._coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = num, den

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other):
        other = other if isinstance(other, RationalFunction) else RationalFunction(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = other if isinstance(other, RationalFunction) else RationalFunction(other)
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunction(other) - self

    def __mul__(self, other):
        other = other if isinstance(other, RationalFunction) else RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, RationalFunction) else RationalFunction(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction(other) / self

    def negate_x(self) -> "RationalFunction":
        return RationalFunction(self.num.negate_x(), self.den.negate_x())

    def series(self, terms: int) -> list:
        """First ``terms`` power-series coefficients (needs den(0) != 0)."""
        return series_quotient(self.num, self.den, terms)

    def __repr__(self) -> str:
        return f"RationalFunction(({self.num})/({self.den}))"


def series_quotient(num: Poly, den: Poly, terms: int) -> list:
    d0 = den[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at 0; no power series")
    out: list = []
    for k in range(terms):
        acc = num[k]
        for j in range(1, min(k, len(den.coeffs) - 1) + 1):
            acc -= den.coeffs[j] * out[k - j]
        out.append(_norm(Fraction(acc) / d0) if d0 != 1 else acc)
    return out
