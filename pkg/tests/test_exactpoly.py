from fractions import Fraction

import numpy as np
import pytest
import sympy

from core.errors import CapabilityError, DomainError
from core.exactpoly import (K, X, MatrixZk, PolyZk, SturmChain, charpoly, count_real_roots,
                            largest_real_root, largest_root_interval, real_roots, root_exceeds)
from core.families import FamilyId
from core.quotient import symbolic_quotient

L2_RENDERED = "x^4 - (2k + 7)*x^3 + (10k + 15)*x^2 - (14k + 9)*x + 4k"


class TestPolyZk:
    def test_render(self):
        p = PolyZk(X**4 - (2*K + 7)*X**3 + (10*K + 15)*X**2 - (14*K + 9)*X + 4*K)
        assert p.render() == L2_RENDERED
        assert str(p) == L2_RENDERED

    def test_render_simple_terms(self):
        assert PolyZk(X - 4).render() == "x - 4"
        assert PolyZk(X**2 - K).render() == "x^2 - k"

    def test_degree_and_coefficients(self):
        p = PolyZk((X - 2) * (X**2 - (2*K + 3)*X + 2*K))
        assert p.degree == 3
        assert p.degree_in_k == 1
        assert p.coefficient(0).as_expr() == -4 * K

    def test_equality_is_symbolic(self):
        assert PolyZk((X - K) * (X + K)) == PolyZk(X**2 - K**2)
        assert PolyZk(X - K) != PolyZk(X + K)

    def test_specialize_and_evaluate(self):
        p = PolyZk(X**2 - K)
        assert p.at(9).all_coeffs() == [1, 0, -9]
        assert p.evaluate(Fraction(1, 2), 1) == sympy.Rational(-3, 4)

    def test_diff_lists_differing_powers(self):
        ours = PolyZk(X**2 - (2*K + 3)*X + 2*K)
        theirs = PolyZk(X**2 - (2*K + 3)*X + 2*K + 1)
        assert ours.diff(theirs) == [(0, "2*k", "2*k + 1")]
        assert ours.diff(ours) == []

    def test_arithmetic(self):
        assert PolyZk(X - 1) * PolyZk(X + 1) == PolyZk(X**2 - 1)
        assert PolyZk(X) + PolyZk(K) == PolyZk(X + K)

    def test_zero_polynomial_rejected(self):
        with pytest.raises(DomainError):
            PolyZk(sympy.Integer(0))


class TestCharpoly:
    def test_single_entry(self):
        assert charpoly(MatrixZk([[4]])) == PolyZk(X - 4)

    def test_l2_template(self):
        assert charpoly(symbolic_quotient(FamilyId.L2)).render() == L2_RENDERED

    def test_kp2p1_template_factors(self):
        g = PolyZk((X - 2) * (X**2 - (2*K + 3)*X + 2*K))
        assert charpoly(symbolic_quotient(FamilyId.K1vKP2P1)) == g

    @pytest.mark.parametrize("family", [FamilyId.K1vS3P1, FamilyId.K1vS4P1, FamilyId.K1vKP2_S3])
    def test_specialization_commutes(self, family):
        matrix = symbolic_quotient(family)
        p = charpoly(matrix)
        for k in (3, 7, 20):
            concrete = sympy.Matrix(matrix.at(k).tolist()).charpoly(X).as_expr()
            assert sympy.expand(p.at(k).as_expr() - concrete) == 0

    @pytest.mark.parametrize("family", [FamilyId.L2, FamilyId.K1vKP2P1, FamilyId.K1vS3P1])
    def test_commutes_at_rational_points(self, family):
        rng = np.random.default_rng(20)
        matrix = symbolic_quotient(family)
        p = charpoly(matrix)
        for _ in range(20):
            t = sympy.Rational(int(rng.integers(-60, 61)), int(rng.integers(1, 13)))
            c = sympy.Rational(int(rng.integers(-40, 41)), int(rng.integers(1, 9)))
            shifted = t * sympy.eye(matrix.dimension) - matrix.matrix.subs(K, c)
            assert p.evaluate(t, c) == shifted.det()

    def test_matrix_validation(self):
        with pytest.raises(DomainError):
            MatrixZk([[1, 2, 3], [4, 5, 6]])
        with pytest.raises(DomainError):
            MatrixZk([[K**2]])

    def test_dimension_cap(self):
        with pytest.raises(CapabilityError):
            charpoly(MatrixZk(sympy.eye(9).tolist()))


class TestRootIsolation:
    def test_sturm_counts_distinct_roots(self):
        p = PolyZk((X - 1)**2 * (X - 2) * (X - 3))
        assert count_real_roots(p, 0, 0, Fraction(5, 2)) == 2
        assert count_real_roots(p, 0, 1, 3) == 2
        assert count_real_roots(p, 0, -10, 10) == 3

    def test_largest_root(self):
        assert largest_real_root(PolyZk(X - 4), 0) == pytest.approx(4.0, abs=1e-12)
        assert largest_real_root(PolyZk(X**2 - K), 4) == pytest.approx(2.0, abs=1e-12)

    def test_interval_width(self):
        lo, hi = largest_root_interval(PolyZk(X**2 - 2), 0, tol=1e-10)
        assert hi - lo <= Fraction(1e-10)
        assert lo ** 2 < 2 <= hi ** 2

    def test_kp2p1_root_is_closed_form(self):
        g = PolyZk((X - 2) * (X**2 - (2*K + 3)*X + 2*K))
        expected = (7 + 33 ** 0.5) / 2
        assert largest_real_root(g, 2) == pytest.approx(expected, abs=1e-11)

    def test_root_exceeds(self):
        g = PolyZk((X - 2) * (X**2 - (2*K + 3)*X + 2*K))
        assert root_exceeds(g, 2, 6)
        assert not root_exceeds(g, 2, 7)
        assert not root_exceeds(PolyZk(X - 4), 0, 4)
        assert root_exceeds(PolyZk(X - 4), 0, Fraction(7, 2))

    def test_real_roots_with_multiplicity(self):
        assert real_roots(PolyZk((X - 1)**2 * (X + 2)), 0) == pytest.approx([-2.0, 1.0, 1.0])

    def test_no_real_root(self):
        with pytest.raises(DomainError):
            largest_real_root(PolyZk(X**2 + 1), 0)

    def test_constant_polynomial(self):
        with pytest.raises(DomainError):
            SturmChain(PolyZk(sympy.Integer(5)).at(0))

    def test_tolerance_floor(self):
        with pytest.raises(DomainError):
            largest_root_interval(PolyZk(X - 1), 0, tol=1e-13)
