"""Generating functions, quasi-polynomials and structural checks.

A counting sequence WG(0), WG(1), ... is turned into an exact rational function
``P(x) / ((1-x)^a (1+x)^b)`` by multiplying a truncated series against a
hypothesised denominator and insisting the surplus coefficients vanish.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from .algebra import Poly, _norm, format_poly, series_quotient
from .counting import DEFAULT_MAX_STATES, count_interior, series
from .graph import Graph, is_bipartite


class ReconstructionError(ArithmeticError):
    """Guard coefficients did not vanish: too few terms or a wrong denominator."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class TheoremViolation(AssertionError):
    """A structural identity that must hold did not; carries a witness."""

    def __init__(self, message: str, witness: Optional[dict] = None):
        super().__init__(message)
        self.witness = witness or {}


ONE_MINUS_X = Poly([1, -1])
ONE_PLUS_X = Poly([1, 1])


@dataclass(frozen=True)
class RationalGF:
    """``numerator / ((1-x)^exp_one * (1+x)^exp_minus)``."""

    numerator: Poly
    exp_one: int
    exp_minus: int = 0

    @property
    def denominator(self) -> Poly:
        return ONE_MINUS_X ** self.exp_one * ONE_PLUS_X ** self.exp_minus

    def canonical(self) -> "RationalGF":
        """Cancel common factors (1-x) first, then (1+x)."""
        num, a, b = self.numerator, self.exp_one, self.exp_minus
        if not num:
            return RationalGF(num, 0, 0)
        while a > 0 and num(1) == 0:
            num, a = num.exact_div(ONE_MINUS_X), a - 1
        while b > 0 and num(-1) == 0:
            num, b = num.exact_div(ONE_PLUS_X), b - 1
        return RationalGF(num, a, b)

    def series(self, terms: int) -> list:
        return series_quotient(self.numerator, self.denominator, terms)

    def text(self) -> str:
        """Canonical rendering, e.g. ``(1 + x + x^2)/((1 + x)*(1 - x)^4)``."""
        factors = []
        if self.exp_minus:
            factors.append(_power("(1 + x)", self.exp_minus))
        if self.exp_one:
            factors.append(_power("(1 - x)", self.exp_one))
        return f"({format_poly(self.numerator)})/({'*'.join(factors) or '1'})"

    def squared_text(self) -> str:
        """Rendering over ``(1-x)^(a-b) (1-x^2)^b`` when ``b <= a``."""
        a, b = self.exp_one, self.exp_minus
        if b > a:
            return self.text()
        factors = []
        if a - b:
            factors.append(_power("(1 - x)", a - b))
        if b:
            factors.append(_power("(1 - x^2)", b))
        return f"({format_poly(self.numerator)})/({'*'.join(factors) or '1'})"

    def to_document(self) -> dict:
        return {
            "numerator": [str(c) if isinstance(c, Fraction) else c for c in self.numerator.coeffs],
            "exp_one": self.exp_one,
            "exp_minus": self.exp_minus,
            "text": self.text(),
            "squared_form": self.squared_text(),
        }


def _power(base: str, k: int) -> str:
    return base if k == 1 else f"{base}^{k}"


def reconstruct(values: list, denominator: Poly, max_num_degree: int) -> Poly:
    """Numerator of ``sum(values[n] x^n) * denominator`` truncated to ``max_num_degree``.

    Coefficients with index in ``(max_num_degree, len(values))`` act as guards
    and must be zero.
    """
    if len(values) < max_num_degree + 3:
        raise ValueError(
            f"need at least {max_num_degree + 3} terms for numerator degree {max_num_degree}")
    dcs = denominator.coeffs
    product = []
    for k in range(len(values)):
        acc = 0
        for j in range(min(k, len(dcs) - 1) + 1):
            acc += dcs[j] * values[k - j]
        product.append(acc)
    for k in range(max_num_degree + 1, len(values)):
        if product[k] != 0:
            raise ReconstructionError(
                f"coefficient {k} of series*denominator is {product[k]}, not 0: "
                "insufficient terms or wrong denominator hypothesis", k)
    return Poly(product[: max_num_degree + 1])


def gf_from_series(values: list, m: int) -> RationalGF:
    """Canonical GF of an m-vertex counting sequence of length >= 2m+4."""
    k = m + 1
    denominator = (ONE_MINUS_X * ONE_PLUS_X) ** k
    numerator = reconstruct(list(values[: 2 * m + 4]), denominator, 2 * m + 1)
    gf = RationalGF(numerator, k, k).canonical()
    check = gf.series(len(values))
    if check != list(values):
        raise ReconstructionError("reconstructed function does not reproduce the series",
                                  next(i for i, (u, v) in enumerate(zip(check, values)) if u != v))
    return gf


def _rho_unchecked(g: Graph, method: str = "auto",
                   max_states: int = DEFAULT_MAX_STATES, workers: int = 1) -> RationalGF:
    return gf_from_series(series(g, 2 * g.m + 4, method, max_states, workers), g.m)


def rho(g: Graph, method: str = "auto", max_states: int = DEFAULT_MAX_STATES,
        workers: int = 1) -> RationalGF:
    """The generating function sum WG(n) x^n in canonical form."""
    gf = _rho_unchecked(g, method, max_states, workers)
    if gf.exp_one != g.m + 1:
        raise TheoremViolation(
            f"pole at x=1 has order {gf.exp_one}, expected {g.m + 1}",
            {"graph": g.to_document(), "gf": gf.text()})
    return gf


@dataclass(frozen=True)
class QuasiPolynomial:
    """f(n) = sum_i coeffs[n mod period][i] * n^i."""

    period: int
    degree: int
    coeffs: tuple

    def __call__(self, n: int):
        return _norm(sum((c * n**i for i, c in enumerate(self.coeffs[n % self.period])),
                         Fraction(0)))

    def constituent(self, residue: int) -> Poly:
        return Poly(self.coeffs[residue % self.period])

    def leading_coefficients(self) -> list:
        return [Poly(c)[self.degree] for c in self.coeffs]

    def to_document(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "constituents": [format_poly(Poly(c), "n") for c in self.coeffs],
            "coeffs": [[str(Fraction(x)) for x in c] for c in self.coeffs],
        }


def eval_quasi(qp: QuasiPolynomial, n: int):
    return qp(n)


def _newton_to_monomial(xs: list, ys: list) -> list:
    """Exact interpolating polynomial through (xs, ys), ascending coefficients."""
    k = len(xs)
    table = [Fraction(y) for y in ys]
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    poly = Poly([table[-1]])
    for i in range(k - 2, -1, -1):
        poly = poly * Poly([-xs[i], 1]) + table[i]
    return list(poly.padded(k)) if poly else [0] * k


def quasi_from_gf(gf: RationalGF, checks: int = 3) -> QuasiPolynomial:
    period = 2 if gf.exp_minus > 0 else 1
    degree = gf.exp_one - 1
    if degree < 0:
        raise ValueError("a generating function without a pole at 1 has no quasi-polynomial")
    start = max(0, len(gf.numerator) - len(gf.denominator) + 1)
    start += (-start) % period
    needed = degree + 1 + checks
    values = gf.series(start + period * needed)
    constituents = []
    for r in range(period):
        ns = [start + r + period * i for i in range(needed)]
        fit = _newton_to_monomial(ns[: degree + 1], [values[n] for n in ns[: degree + 1]])
        poly = Poly(fit)
        for n in ns[degree + 1:]:
            if poly(n) != values[n]:
                raise ArithmeticError(f"quasi-polynomial fit fails at n={n}")
        constituents.append(tuple(_norm(Fraction(c)) for c in Poly(fit).padded(degree + 1)))
    return QuasiPolynomial(period, degree, tuple(constituents))


@dataclass(frozen=True)
class HVector:
    entries: tuple


def h_vector(gf: RationalGF, g: Graph) -> HVector:
    if gf.exp_minus or not is_bipartite(g)[0]:
        raise ValueError("h-vectors are defined here for bipartite graphs only")
    if gf.exp_one != g.m + 1:
        raise TheoremViolation(f"denominator is not (1-x)^{g.m + 1}")
    entries = tuple(gf.numerator.padded(g.m + 1))
    if entries[0] != 1:
        raise TheoremViolation(f"h_0 = {entries[0]}, expected 1")
    return HVector(entries)


@dataclass
class Check:
    name: str
    status: str  # pass | fail | info | skip
    witness: dict = field(default_factory=dict)

    def to_document(self) -> dict:
        return {"check": self.name, "status": self.status, "witness": self.witness}


@dataclass
class VerifyReport:
    graph: Graph
    checks: list = field(default_factory=list)
    gf: Optional[RationalGF] = None
    quasi: Optional[QuasiPolynomial] = None

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, name: str, passed: bool, **witness) -> None:
        self.checks.append(Check(name, "pass" if passed else "fail", _jsonable(witness)))

    def to_document(self) -> list:
        return [c.to_document() for c in self.checks]


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Poly):
        return format_poly(obj)
    return obj


def verify_graph(g: Graph, method: str = "auto", max_states: int = DEFAULT_MAX_STATES,
                 reciprocity_range: int = 5) -> VerifyReport:
    """Run every structural check on ``g``; failures become report entries."""
    report = VerifyReport(g)
    m = g.m
    try:
        gf = _rho_unchecked(g, method, max_states)
    except ReconstructionError as exc:
        report.add("reconstruction", False, message=str(exc), index=exc.index)
        return report
    report.gf = gf
    report.add("pole_order", gf.exp_one == m + 1, expected=m + 1, actual=gf.exp_one,
               gf=gf.text())

    bipartite, witness = is_bipartite(g)
    num = gf.numerator
    if bipartite:
        form_ok = gf.exp_minus == 0 and num.degree <= m and num[0] == 1
        report.add("bipartite_form", form_ok, bipartite=True, coloring=witness,
                   exp_minus=gf.exp_minus, numerator=num)
        report.add("numerator_symmetry", num.is_palindromic(), numerator=num)
    else:
        report.add("bipartite_form", gf.exp_minus >= 1, bipartite=False, odd_cycle=witness,
                   exp_minus=gf.exp_minus)
        report.checks.append(Check("numerator_symmetry", "info",
                                   {"palindromic": num.is_palindromic(),
                                    "numerator": format_poly(num)}))

    qp = quasi_from_gf(gf)
    report.quasi = qp
    report.add("quasi_at_zero", qp(0) == 1, value=qp(0))

    rows = []
    ok = True
    for n in range(1, reciprocity_range + 1):
        interior = count_interior(g, n, method, max_states)
        reflected = (-1) ** m * qp(-n)
        rows.append({"n": n, "interior": interior, "signed_eval": reflected})
        ok &= interior == reflected
    report.add("reciprocity", ok, values=rows)

    if bipartite:
        h = num.padded(m + 1)
        h_m = h[m]
        report.add("h_top", h_m == (-1) ** m * qp(-1), h_m=h_m, signed_eval=(-1) ** m * qp(-1))
        top = max((i for i, c in enumerate(h) if c), default=0)
        j = next(j for j in range(m + 1) if all(qp(-i) == 0 for i in range(1, m - j + 1)))
        report.add("h_degree_zeros", top == j, h_degree=top, min_j=j)
        report.add("h_nonnegative", all(c >= 0 for c in h), h=list(h))
    else:
        report.checks.append(Check("h_top", "skip", {"reason": "not bipartite"}))

    expected_lead = Fraction(num(1)) / (factorial(m) * 2**gf.exp_minus)
    leads = qp.leading_coefficients()
    report.add("leading_coefficient", all(c == expected_lead for c in leads),
               expected=expected_lead, actual=leads)
    return report

