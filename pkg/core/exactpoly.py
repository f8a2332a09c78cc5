"""
Exact polynomials over Z[k][x], parameterized matrices, characteristic polynomials and
Sturm-sequence root isolation.

No floating point enters this module except the final midpoint returned by
largest_real_root.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from core.config import get_config
from core.errors import CapabilityError, DomainError

X, K = sympy.symbols("x k")

MAX_CHARPOLY_DIMENSION = 8

Number = Union[int, Fraction]


def _k_poly(expr: sympy.Expr) -> sympy.Poly:
    return sympy.Poly(expr, K, domain=sympy.ZZ)


def _render_k(coefficient: sympy.Poly) -> str:
    """Render an integer polynomial in k with positive leading coefficient."""
    parts = []
    for (power,), value in coefficient.terms():
        value = int(value)
        magnitude = abs(value)
        if power == 0:
            body = str(magnitude)
        else:
            body = ("" if magnitude == 1 else str(magnitude)) + ("k" if power == 1 else f"k^{power}")
        if not parts:
            parts.append(body if value > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if value > 0 else f"- {body}")
    return " ".join(parts)


class PolyZk:
    """Polynomial in x whose coefficients are integer polynomials in k."""

    def __init__(self, expr: sympy.Expr):
        self.poly = sympy.Poly(sympy.expand(expr), X, domain=sympy.ZZ[K])
        if self.poly.is_zero:
            raise DomainError("the zero polynomial has no leading coefficient")

    @property
    def degree(self) -> int:
        return int(self.poly.degree())

    def coefficient(self, power: int) -> sympy.Poly:
        return _k_poly(self.poly.as_expr().coeff(X, power))

    @property
    def degree_in_k(self) -> int:
        return max(self.coefficient(p).degree() for p in range(self.degree + 1))

    def as_expr(self) -> sympy.Expr:
        return self.poly.as_expr()

    def at(self, k: int) -> sympy.Poly:
        """Specialize k, giving an integer polynomial in x."""
        return sympy.Poly(self.as_expr().subs(K, k), X, domain=sympy.ZZ)

    def evaluate(self, t: Number, k: Number) -> sympy.Rational:
        return sympy.Rational(self.as_expr().subs({X: sympy.Rational(str(t)), K: sympy.Rational(str(k))}))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyZk):
            return NotImplemented
        return sympy.expand(self.as_expr() - other.as_expr()) == 0

    def __hash__(self) -> int:
        return hash(self.render())

    def __add__(self, other: "PolyZk") -> "PolyZk":
        return PolyZk(self.as_expr() + other.as_expr())

    def __mul__(self, other: "PolyZk") -> "PolyZk":
        return PolyZk(self.as_expr() * other.as_expr())

    def diff(self, other: "PolyZk") -> List[Tuple[int, str, str]]:
        """Powers of x whose coefficients differ, as (power, ours, theirs)."""
        top = max(self.degree, other.degree)
        result = []
        for power in range(top, -1, -1):
            ours, theirs = self.coefficient(power), other.coefficient(power)
            if ours != theirs:
                result.append((power, str(ours.as_expr()), str(theirs.as_expr())))
        return result

    def render(self) -> str:
        """Canonical ASCII: descending powers of x, k-coefficients with explicit signs."""
        terms = []
        for power in range(self.degree, -1, -1):
            coefficient = self.coefficient(power)
            if coefficient.is_zero:
                continue
            negative = coefficient.LC() < 0
            magnitude = -coefficient if negative else coefficient
            body = _render_k(magnitude)
            if len(magnitude.terms()) > 1:
                body = f"({body})"
            if power > 0:
                monomial = "x" if power == 1 else f"x^{power}"
                body = monomial if body == "1" else f"{body}*{monomial}"
            if not terms:
                terms.append(f"-{body}" if negative else body)
            else:
                terms.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PolyZk({self.render()})"


class MatrixZk:
    """Square matrix with entries affine in k."""

    def __init__(self, rows: Sequence[Sequence[sympy.Expr]]):
        self.matrix = sympy.Matrix(rows)
        if self.matrix.rows != self.matrix.cols:
            raise DomainError(f"matrix must be square, got {self.matrix.rows}x{self.matrix.cols}")
        for entry in self.matrix:
            if _k_poly(entry).degree() > 1:
                raise DomainError(f"entry {entry} is not affine in k")

    @property
    def dimension(self) -> int:
        return int(self.matrix.rows)

    def at(self, k: int) -> np.ndarray:
        return np.array(self.matrix.subs(K, k).tolist(), dtype=np.int64)

    def __repr__(self) -> str:
        return f"MatrixZk({self.matrix.tolist()})"


def charpoly(matrix: MatrixZk) -> PolyZk:
    """det(xI - M) by the division-free Berkowitz method."""
    if matrix.dimension > MAX_CHARPOLY_DIMENSION:
        raise CapabilityError(
            f"charpoly supports dimension <= {MAX_CHARPOLY_DIMENSION}, got {matrix.dimension}")
    shifted = X * sympy.eye(matrix.dimension) - matrix.matrix
    return PolyZk(shifted.det(method="berkowitz"))


def _fractions(poly: sympy.Poly) -> List[Fraction]:
    return [Fraction(int(c.p), int(c.q)) for c in (sympy.Rational(a) for a in poly.all_coeffs())]


def _horner(coefficients: Sequence[Fraction], t: Fraction) -> Fraction:
    value = Fraction(0)
    for c in coefficients:
        value = value * t + c
    return value


class SturmChain:
    """Sturm sequence of the square-free part of an integer polynomial in x."""

    def __init__(self, poly: sympy.Poly):
        if poly.degree() < 1:
            raise DomainError("root isolation needs a polynomial of positive degree")
        squarefree = poly.sqf_part()
        self.chain = [_fractions(p) for p in sympy.sturm(squarefree)]
        leading = _fractions(squarefree)
        self.bound = 1 + max(abs(c / leading[0]) for c in leading[1:])

    def sign_changes(self, t: Fraction) -> int:
        signs = [v > 0 for v in (_horner(c, t) for c in self.chain) if v != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in (lo, hi]."""
        return self.sign_changes(lo) - self.sign_changes(hi)


def largest_root_interval(p: PolyZk, k: int, tol: Optional[float] = None) -> Tuple[Fraction, Fraction]:
    """Rational (lo, hi] of width <= tol containing the largest real root."""
    tol = get_config().tolerances.root_width if tol is None else tol
    if tol < 1e-12:
        raise DomainError(f"root tolerance must be at least 1e-12, got {tol}")
    chain = SturmChain(p.at(k))
    lo, hi = -chain.bound, chain.bound
    if chain.count(lo, hi) == 0:
        raise DomainError(f"{p.render()} has no real root at k = {k}")
    width = Fraction(tol)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if chain.count(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def largest_real_root(p: PolyZk, k: int, tol: Optional[float] = None) -> float:
    lo, hi = largest_root_interval(p, k, tol)
    return float((lo + hi) / 2)


def count_real_roots(p: PolyZk, k: int, lo: Number, hi: Number) -> int:
    """Distinct real roots of p(k) in (lo, hi]."""
    return SturmChain(p.at(k)).count(Fraction(lo), Fraction(hi))


def root_exceeds(p: PolyZk, k: int, point: Number) -> bool:
    """Exactly decide whether the largest real root of p(k) is greater than `point`."""
    chain = SturmChain(p.at(k))
    point = Fraction(point)
    if point >= chain.bound:
        return False
    return chain.count(point, chain.bound) >= 1


def real_roots(p: PolyZk, k: int) -> List[float]:
    """All real roots of p(k) in increasing order, with multiplicity."""
    return sorted(float(r.evalf(30)) for r in sympy.real_roots(p.at(k)))
