"""Closed formulas and transfer-matrix counts for named graph families."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import (ExactDivisionError, Poly, RationalFunction, _norm, binomial,
                      identity_minus_x, poly_det)
from .genfun import RationalGF, TheoremViolation, gf_from_series
from .graph import GraphError, family, parse_family


def transfer_matrix(n: int) -> list[list[int]]:
    """(n+1)x(n+1) 0/1 matrix with entry (i, j) = 1 iff i + j <= n."""
    return [[1 if i + j <= n else 0 for j in range(n + 1)] for i in range(n + 1)]


def octa_matrix(n: int, m: int) -> list[list[int]]:
    """Entry (i, j) = 0 iff max(i + j, max(i, j) + m) > n."""
    return [[0 if max(i + j, max(i, j) + m) > n else 1 for j in range(n + 1)]
            for i in range(n + 1)]


def mat_mul(a: list, b: list) -> list:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def mat_vec(a: list, v: list) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_pow(a: list, k: int) -> list:
    size = len(a)
    result = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(k):
        result = mat_mul(result, a)
    return result


def trace(a: list) -> int:
    return sum(a[i][i] for i in range(len(a)))


# Eulerian numbers ------------------------------------------------------------

@lru_cache(maxsize=None)
def eulerian_number(t: int, k: int) -> int:
    """Permutations of t letters with k-1 descents."""
    if t < 1:
        raise ValueError("Eulerian numbers need t >= 1")
    if k < 1 or k > t:
        return 0
    if t == 1:
        return 1
    return k * eulerian_number(t - 1, k) + (t - k + 1) * eulerian_number(t - 1, k - 1)


def eulerian_number_explicit(t: int, k: int) -> int:
    """Alternating-sum formula sum_i (-1)^i C(t+1, i) (k-i)^t."""
    return sum((-1) ** i * binomial(t + 1, i) * (k - i) ** t for i in range(k + 1))


def eulerian_poly(t: int, shifted: bool = False) -> Poly:
    """A_t(x) = sum_k A(t,k) x^k, or its shift A_t(x)/x; both are 1 for t = 0."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return Poly.one()
    coeffs = [eulerian_number(t, k) for k in range(1, t + 1)]
    return Poly(coeffs if shifted else [0] + coeffs)


# Paths and cycles ------------------------------------------------------------

def path_count(k: int, n: int) -> int:
    """WL_k(n) = J^t B(n)^(k-1) J."""
    if k < 1:
        raise ValueError("paths need at least one vertex")
    b = transfer_matrix(n)
    v = [1] * (n + 1)
    for _ in range(k - 1):
        v = mat_vec(b, v)
    return sum(v)


def cycle_count(k: int, n: int) -> int:
    """WC_k(n) = trace(B(n)^k) for k >= 2; a 1-cycle is a lone vertex with n+1 weights."""
    if k < 1:
        raise ValueError("cycles need at least one vertex")
    if k == 1:
        return n + 1
    return trace(mat_pow(transfer_matrix(n), k))


def q_poly(n: int) -> Poly:
    """det(I - x B(n)), with Q_{-1} = Q_{-2} = 1."""
    if n < -2:
        raise ValueError("q_poly is defined for n >= -2")
    if n < 0:
        return Poly.one()
    return poly_det(identity_minus_x(transfer_matrix(n)))


def q_poly_binomial(n: int) -> Poly:
    """Binomial-sum form of Q_n, summed up to x^(n+1)."""
    return Poly([binomial((n + k + 1) // 2, k) * (-1) ** ((k + 1) // 2) for k in range(n + 2)])


def path_gf(n: int) -> RationalFunction:
    """sum_k WL_{k+1}(n) x^k via the row-replaced determinants of I - xB(n)."""
    b = transfer_matrix(n)
    base = identity_minus_x(b)
    den = poly_det(base)
    num = Poly()
    for row in range(n + 1):
        replaced = [list(r) for r in base]
        replaced[row] = [Poly.one()] * (n + 1)
        num = num + poly_det(replaced)
    if den[0] < 0:
        num, den = -num, -den
    if den != q_poly(n):
        raise TheoremViolation(f"denominator {den} differs from Q_{n}")
    try:
        expected = (q_poly(n - 2) - Poly([1, 1]) * q_poly(n)).exact_div(Poly.monomial(1, 2))
    except ExactDivisionError as exc:
        raise TheoremViolation(str(exc), {"n": n}) from None
    if num != expected:
        raise TheoremViolation(f"numerator {num} differs from (Q_(n-2) - (1+x)Q_n)/x^2",
                               {"n": n, "expected": str(expected)})
    return RationalFunction(num, den)


def cycle_gf(n: int) -> RationalFunction:
    """sum_k WC_k(n) x^k = floor((n+1)/2) x - x Q_n'(x) / Q_n(x)."""
    q = q_poly(n)
    num = Poly.monomial((n + 1) // 2, 1) * q - Poly.x() * q.derivative()
    return RationalFunction(num, q)


# Other families --------------------------------------------------------------

def family_count(name: str, params: tuple, n: int) -> int:
    """Closed-form WG(n) for complete, star, discrete and biclique graphs."""
    if name == "complete":
        (t,) = params
        if t == 0:
            return 1
        return t * sum(r ** (t - 1) for r in range(1, (n + 1) // 2 + 1)) + ((n + 2) // 2) ** t
    if name == "star":
        (t,) = params
        return sum((n + 1 - i) ** t for i in range(n + 1))
    if name == "discrete":
        (t,) = params
        return (n + 1) ** t
    if name == "biclique":
        p, q = params
        if p == 0 or q == 0:
            return (n + 1) ** (p + q)
        return sum(((k + 1) ** p - k ** p) * (n + 1 - k) ** q for k in range(n + 1))
    raise GraphError(f"no closed-form count for family {name!r}")


def octa_count(n: int) -> int:
    """sum_m (2m+1) trace(B(n, m)^4)."""
    return sum((2 * m + 1) * trace(mat_pow(octa_matrix(n, m), 4)) for m in range(n + 1))


def octa_closed(n: int) -> int:
    """Even/odd polynomial forms of the octahedral count."""
    k, odd = divmod(n, 2)
    if odd:
        value = Fraction((k + 1) * (2 * k * k + 6 * k + 5) * (12 * k**3 + 42 * k * k + 51 * k + 20), 10)
    else:
        value = Fraction((k + 1) * (2 * k * k + 2 * k + 1) * (12 * k**3 + 30 * k * k + 27 * k + 10), 10)
    return _integral(value)


def octa_closed_unified(n: int) -> int:
    value = Fraction(6 * n**6 + 54 * n**5 + 210 * n**4 + 450 * n**3 + 559 * n**2 + 381 * n + 115
                     + (-1) ** n * (10 * n**3 + 45 * n**2 + 75 * n + 45), 160)
    return _integral(value)


def p_trace(r: int, m: int) -> int:
    """Closed form of trace((D(r-1) - S(r-1, m))^4)."""
    if r < 1 or m < 0:
        raise ValueError("p_trace needs r >= 1 and m >= 0")
    return (r**4 - 4 * binomial(m + 1, 2) * r**2
            + 4 * (binomial(m + 1, 3) + binomial(m + 2, 3)) * r
            - 4 * binomial(m + 2, 4) - binomial(m + 1, 2))


def corner_matrix(size_index: int, m: int) -> list[list[int]]:
    """D(s) - S(s, m): all ones except entries with i + j > 2s - m."""
    s = size_index
    return [[0 if i + j > 2 * s - m else 1 for j in range(s + 1)] for i in range(s + 1)]


def p_trace_matrix(r: int, m: int) -> int:
    return trace(mat_pow(corner_matrix(r - 1, m), 4))


def complete_closed(t: int, n: int) -> int:
    """Parity-split polynomial forms for K_3, K_4 and K_5."""
    sign = (-1) ** n
    if t == 3:
        value = Fraction(4 * n**3 + 18 * n**2 + 28 * n + 15 + sign, 16)
    elif t == 4:
        value = Fraction(2 * n**4 + 12 * n**3 + 28 * n**2 + 30 * n + 13 + sign * (2 * n + 3), 16)
    elif t == 5:
        value = Fraction(12 * n**5 + 90 * n**4 + 280 * n**3 + 450 * n**2 + 374 * n + 129
                         + sign * (30 * n**2 + 90 * n + 63), 192)
    else:
        raise ValueError("polynomial forms are tabulated for t = 3, 4, 5 only")
    return _integral(value)


def _integral(value: Fraction) -> int:
    value = _norm(value)
    if not isinstance(value, int):
        raise TheoremViolation(f"closed form produced non-integer {value}")
    return value


# Dispatch by family label ----------------------------------------------------

CLOSED_FAMILIES = ("null", "path", "cycle", "complete", "star", "discrete", "biclique",
                   "octahedron")


def _split_label(label: str) -> tuple[str, tuple]:
    parse_family(label)  # validates
    name, _, args = label.partition(":")
    return name, tuple(int(a) for a in args.split(",")) if args else ()


def closed_count(label: str, n: int) -> int:
    """WG(n) for a DSL-named graph using only the closed formulas."""
    name, params = _split_label(label)
    if name == "null":
        return 1
    if name == "path":
        return path_count(params[0], n)
    if name == "cycle":
        return cycle_count(params[0], n)
    if name == "octahedron":
        return octa_count(n)
    return family_count(name, params, n)


def family_gf(label: str) -> RationalGF:
    """Generating function of a named family from its closed formulas."""
    name, params = _split_label(label)
    if name == "star":
        (t,) = params
        return RationalGF(eulerian_poly(t, shifted=True), t + 2).canonical()
    if name == "biclique":
        p, q = params
        return RationalGF(eulerian_poly(p, True) * eulerian_poly(q, True), p + q + 1).canonical()
    if name == "discrete":
        (t,) = params
        return RationalGF(eulerian_poly(t, shifted=True), t + 1).canonical()
    if name not in CLOSED_FAMILIES:
        raise GraphError(f"no closed-form generating function for family {name!r}")
    m = family(name, *params).m
    return gf_from_series([closed_count(label, n) for n in range(2 * m + 4)], m)
