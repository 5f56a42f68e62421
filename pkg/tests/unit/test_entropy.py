"""Unit tests for Mahler measure oracles, periodic points and entropy classification."""

import math

import numpy as np
import pytest

from zd_rigidity import fixtures
from zd_rigidity.config import EngineSettings
from zd_rigidity.entropy import (
    entropy_classify,
    generator_annihilators,
    mahler_d1_exact,
    mahler_quadrature,
    mahler_roots_of_unity,
    periodic_point_growth,
)
from zd_rigidity.entropy.classify import mahler_upper
from zd_rigidity.entropy.mahler import lattice_shift
from zd_rigidity.errors import DimensionMismatchError, NumericalFailureError
from zd_rigidity.laurent import LaurentPoly, parse_poly
from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import (
    ExactEntropy,
    InfiniteEntropy,
    IntervalEntropy,
    MahlerMethod,
    UpperBoundEntropy,
    ZeroEntropy,
)

LEDRAPPIER_MAHLER = 0.3230659472

# One term dominates the sum of the others on the torus and the remaining monomials,
# divided by it, lie in an open half-plane, so the measure is log of that coefficient.
DOMINANT_TERM_SUITE = [
    ("3 + u1 + u2", 3),
    ("5 - 2*u1 + u2 + u1*u2", 5),
    ("u1 + 4*u2 + u1*u2", 4),
    ("1 + u1 + u2 + 7*u1*u2", 7),
    ("6 - u1^2 + 2*u1*u2 - u2^3", 6),
    ("2 + u1", 2),
    ("10 + 3*u1 - 3*u2 + 2*u1^2*u2^2", 10),
    ("u1^-1 + 5 + u2", 5),
    ("1 - 4*u1*u2 + u1^2", 4),
    ("8 + u1 + u1*u2 + u1^2*u2^3 + u2^2", 8),
]


class TestMahlerExact:
    """Tests for the one-variable root formula."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("u1 - 2", math.log(2)),
            ("2*u1 - 1", math.log(2)),
            ("3", math.log(3)),
            ("1 + u1", 0.0),
            ("u1^-1 + 3", math.log(3)),
            ("u1^2 - u1 - 1", math.log((1 + math.sqrt(5)) / 2)),
            ("u1^4 + u1^3 + u1^2 + u1 + 1", 0.0),
        ],
    )
    def test_known_values(self, text: str, expected: float) -> None:
        """Test Jensen's formula on polynomials with known measure."""
        estimate = mahler_d1_exact(parse_poly(text))
        assert estimate.estimate == pytest.approx(expected, abs=1e-9)
        assert estimate.method == MahlerMethod.ROOT_FORMULA

    def test_multiplicative(self) -> None:
        """Test that m(f*g) = m(f) + m(g) for one-variable products."""
        factors = [parse_poly(t) for t in ("u1 - 2", "3*u1^2 + u1 - 1", "u1^3 + 5", "2*u1 + 7")]
        for index, f in enumerate(factors):
            for g in factors[index + 1 :]:
                product = mahler_d1_exact(f * g).estimate
                separate = mahler_d1_exact(f).estimate + mahler_d1_exact(g).estimate
                assert product == pytest.approx(separate, abs=1e-9)

    @pytest.mark.parametrize("shift", [-3, 1, 4])
    def test_unit_invariant(self, shift: int) -> None:
        """Test that multiplying by ±u^n leaves the measure unchanged."""
        f = parse_poly("3*u1^2 + u1 - 1")
        unit = LaurentPoly.monomial([shift])
        expected = mahler_d1_exact(f).estimate
        assert mahler_d1_exact(unit * f).estimate == pytest.approx(expected, abs=1e-9)
        assert mahler_d1_exact(-unit * f).estimate == pytest.approx(expected, abs=1e-9)

    def test_agrees_with_quadrature(self) -> None:
        """Test the root formula against quadrature on random polynomials of degree ≤ 6."""
        rng = np.random.default_rng(5)
        compared = 0
        while compared < 40:
            coeffs = [int(c) for c in rng.integers(-5, 6, int(rng.integers(2, 8)))]
            if not any(coeffs):
                continue
            roots = np.roots(coeffs[::-1])
            if np.any(np.abs(np.abs(roots) - 1.0) < 0.02):
                continue
            f = LaurentPoly.from_univariate(coeffs)
            exact = mahler_d1_exact(f).estimate
            assert mahler_quadrature(f).estimate == pytest.approx(exact, abs=1e-6)
            compared += 1

    def test_zero_polynomial(self) -> None:
        """Test that the zero polynomial is rejected."""
        with pytest.raises(ValueError, match="zero polynomial"):
            mahler_d1_exact(LaurentPoly.zero(1))

    def test_multivariate_rejected(self) -> None:
        """Test that the root formula needs one variable."""
        with pytest.raises(DimensionMismatchError):
            mahler_d1_exact(parse_poly("1 + u1 + u2"))


class TestMahlerQuadrature:
    """Tests for shifted-lattice quadrature."""

    def test_one_variable_agrees_with_root_formula(self) -> None:
        """Test quadrature against the exact value for u - 2."""
        estimate = mahler_quadrature(parse_poly("u1 - 2"), grid=64)
        assert estimate.estimate == pytest.approx(math.log(2), abs=1e-6)
        assert estimate.method == MahlerMethod.QUADRATURE

    def test_ledrappier(self) -> None:
        """Test the measure of 1 + u1 + u2."""
        estimate = mahler_quadrature(parse_poly("1 + u1 + u2"), grid=256)
        assert 0.318 <= estimate.estimate <= 0.328
        assert estimate.resolution["fine_grid"] == 512

    def test_monomial_exact(self) -> None:
        """Test that monomials short-circuit to log|c|."""
        estimate = mahler_quadrature(parse_poly("3*u1*u2^-1"), grid=8)
        assert estimate.estimate == pytest.approx(math.log(3))
        assert estimate.error_indicator == 0.0

    def test_vanishing_factor(self) -> None:
        """Test a polynomial whose zero set is a whole circle of the torus."""
        estimate = mahler_quadrature(parse_poly("1 + u1", dim=2), grid=128)
        assert estimate.estimate == pytest.approx(0.0, abs=0.02)

    @pytest.mark.parametrize(("text", "coefficient"), DOMINANT_TERM_SUITE)
    def test_dominant_term_suite(self, text: str, coefficient: int) -> None:
        """Test quadrature and torsion averages against log of the dominant coefficient."""
        f = parse_poly(text, dim=2)
        quadrature = mahler_quadrature(f, grid=128)
        torsion = mahler_roots_of_unity(f, order=64)
        assert quadrature.estimate == pytest.approx(math.log(coefficient), abs=1e-6)
        assert torsion.estimate == pytest.approx(math.log(coefficient), abs=1e-6)
        assert abs(quadrature.estimate - torsion.estimate) <= (
            quadrature.error_indicator + torsion.error_indicator + 1e-6
        )
        assert quadrature.skipped == torsion.skipped == 0

    def test_multiplicative(self) -> None:
        """Test that m(f*g) = m(f) + m(g) within the error indicators."""
        polys = [parse_poly(text, dim=2) for text, _ in DOMINANT_TERM_SUITE[:6]]
        for index, f in enumerate(polys):
            for g in polys[index:]:
                whole = mahler_quadrature(f * g, grid=128)
                left = mahler_quadrature(f, grid=128)
                right = mahler_quadrature(g, grid=128)
                tolerance = 3 * (
                    whole.error_indicator + left.error_indicator + right.error_indicator
                )
                assert whole.estimate == pytest.approx(
                    left.estimate + right.estimate, abs=tolerance + 1e-9
                )

    @pytest.mark.parametrize("shift", [(1, 0), (-2, 3), (0, -1)])
    def test_unit_invariant(self, shift: tuple[int, int]) -> None:
        """Test that multiplying by ±u^n leaves the quadrature unchanged."""
        f = parse_poly("1 + u1 + u2")
        unit = LaurentPoly.monomial(list(shift))
        expected = mahler_quadrature(f, grid=128).estimate
        assert mahler_quadrature(unit * f, grid=128).estimate == pytest.approx(expected, abs=1e-10)
        assert mahler_quadrature(-unit * f, grid=128).estimate == pytest.approx(expected, abs=1e-10)
        torsion = mahler_roots_of_unity(f, order=32).estimate
        assert mahler_roots_of_unity(unit * f, order=32).estimate == pytest.approx(
            torsion, abs=1e-10
        )

    def test_grid_too_small(self) -> None:
        """Test that a grid of fewer than two points is rejected."""
        with pytest.raises(ValueError, match="at least 2"):
            mahler_quadrature(parse_poly("1 + u1"), grid=1)

    def test_lattice_shift_irrational(self) -> None:
        """Test that shifts lie strictly inside (0, 1)."""
        shift = lattice_shift(3)
        assert all(0.0 < s < 1.0 for s in shift)
        assert shift[0] == pytest.approx(math.sqrt(2) - 1)


class TestMahlerRootsOfUnity:
    """Tests for the torsion-point oracle."""

    def test_one_variable(self) -> None:
        """Test u - 2 at order 16."""
        estimate = mahler_roots_of_unity(parse_poly("u1 - 2"), order=16)
        assert estimate.estimate == pytest.approx(math.log(2), abs=1e-4)
        assert estimate.resolution["order"] == 16

    def test_ledrappier(self) -> None:
        """Test that torsion averages approach m(1 + u1 + u2)."""
        estimate = mahler_roots_of_unity(parse_poly("1 + u1 + u2"), order=64)
        assert estimate.estimate == pytest.approx(LEDRAPPIER_MAHLER, abs=1e-2)
        assert estimate.skipped == 0

    def test_zeros_skipped(self) -> None:
        """Test that torsion points on the zero variety are skipped."""
        estimate = mahler_roots_of_unity(parse_poly("1 + u1 + u2"), order=3)
        assert estimate.skipped == 2

    def test_vanishing_everywhere(self) -> None:
        """Test the failure when f vanishes at every torsion point."""
        with pytest.raises(NumericalFailureError, match="vanishes"):
            mahler_roots_of_unity(parse_poly("u1^2 - 1"), order=2)


class TestPeriodicPoints:
    """Tests for periodic_point_growth."""

    def test_times_two(self) -> None:
        """Test the counts 2^N - 1 for u - 2."""
        counts = periodic_point_growth(parse_poly("u1 - 2"), range(1, 11))
        assert [c.count for c in counts] == [2**n - 1 for n in range(1, 11)]
        assert counts[-1].growth == pytest.approx(math.log(1023) / 10)

    def test_ledrappier_small_levels(self) -> None:
        """Test Ledrappier counts including a degenerate level."""
        counts = periodic_point_growth(parse_poly("1 + u1 + u2"), [1, 2, 3])
        assert counts[0].count == 3
        assert counts[1].count == 3
        assert counts[1].growth == pytest.approx(math.log(3) / 4)
        assert counts[2].degenerate
        assert counts[2].count is None

    def test_one_variable_degenerate(self) -> None:
        """Test that a root of unity of order N makes level N degenerate."""
        counts = periodic_point_growth(parse_poly("u1 + 1"), [1, 2])
        assert counts[0].count == 2
        assert counts[1].degenerate

    def test_invalid_levels(self) -> None:
        """Test that levels must be positive."""
        with pytest.raises(ValueError, match="positive"):
            periodic_point_growth(parse_poly("u1 - 2"), [0])

    def test_zero_polynomial(self) -> None:
        """Test that the zero polynomial is rejected."""
        with pytest.raises(ValueError, match="zero polynomial"):
            periodic_point_growth(LaurentPoly.zero(1), [1])


class TestEntropyClassify:
    """Tests for entropy_classify."""

    def test_free_module_infinite(self) -> None:
        """Test that a free module has infinite entropy."""
        report = entropy_classify(fixtures.full_shift(2))
        assert not report.finite
        assert isinstance(report.value, InfiniteEntropy)

    def test_zero_module(self) -> None:
        """Test that the zero module has zero entropy."""
        report = entropy_classify(ModulePresentation.from_text(1, 1, ["1"]))
        assert report.finite
        assert isinstance(report.value, ZeroEntropy)

    def test_one_variable_exact(self, times_two: ModulePresentation) -> None:
        """Test the exact value log 2 for R_1/(u - 2)."""
        report = entropy_classify(times_two)
        assert isinstance(report.value, ExactEntropy)
        assert report.value.value == pytest.approx(math.log(2), abs=1e-9)
        assert report.value.method == MahlerMethod.ROOT_FORMULA

    def test_constant_relation(self, two_torsion: ModulePresentation) -> None:
        """Test that R_2/(2) has entropy log 2."""
        report = entropy_classify(two_torsion)
        assert isinstance(report.value, ExactEntropy)
        assert report.value.value == pytest.approx(math.log(2))

    def test_ledrappier_interval(
        self, ledrappier: ModulePresentation, fast_settings: EngineSettings
    ) -> None:
        """Test that two oracles bracket the Ledrappier entropy."""
        report = entropy_classify(ledrappier, fast_settings)
        value = report.value
        assert isinstance(value, IntervalEntropy)
        assert value.lo <= value.hi
        assert value.lo < 0.33
        assert value.hi > 0.315
        assert value.method == "quadrature+roots-of-unity-limit"
        assert report.diagnostics.quadrature_grid == 128
        assert report.diagnostics.roots_of_unity_order == 32
        assert report.diagnostics.discrepancy is not None

    def test_non_principal_ideal_bound(self) -> None:
        """Test the upper bound for R_1/(2, 1 + u)."""
        M = ModulePresentation.from_text(1, 1, ["2", "1 + u1"])
        report = entropy_classify(M)
        assert isinstance(report.value, UpperBoundEntropy)
        assert report.value.value == pytest.approx(0.0, abs=1e-9)
        assert report.diagnostics.bound_sources == ["2", "1 + u1"]

    def test_module_bound_uses_determinant(self, fast_settings: EngineSettings) -> None:
        """Test that a rank-two torsion module is bounded through its determinant."""
        M = ModulePresentation.from_text(2, 2, [["1 + u1", "1"], ["u1", "2 - u1 + u2"]])
        report = entropy_classify(M, fast_settings)
        assert isinstance(report.value, UpperBoundEntropy)
        determinant = str(parse_poly("2 + u2 - u1^2 + u1*u2"))
        assert report.diagnostics.bound_sources == [determinant, determinant]

    def test_non_torsion_module(self) -> None:
        """Test that a single relation on two generators leaves infinite entropy."""
        M = ModulePresentation.from_text(2, 2, [["1 + u1", "u2"]])
        report = entropy_classify(M)
        assert not report.finite
        assert isinstance(report.value, InfiniteEntropy)


class TestAnnihilators:
    """Tests for generator_annihilators and mahler_upper."""

    def test_diagonal_relations(self) -> None:
        """Test that single-column rows annihilate their generator."""
        M = ModulePresentation.from_text(2, 2, [["1 + u1 + u2", "0"], ["0", "2"]])
        found = generator_annihilators(M)
        assert found[0][0] == parse_poly("1 + u1 + u2")
        assert found[1][0] == parse_poly("2", 2)
        assert found[0][-1] == parse_poly("2 + 2*u1 + 2*u2")

    def test_mahler_upper_exact_in_one_variable(self, fast_settings: EngineSettings) -> None:
        """Test that one-variable bounds are exact."""
        bound, estimate = mahler_upper(parse_poly("u1 - 3"), fast_settings)
        assert bound == pytest.approx(math.log(3))
        assert estimate.method == MahlerMethod.ROOT_FORMULA
