"""Unit tests for strong Gröbner bases and Laurent submodule operations."""

from collections.abc import Iterator
from itertools import product

import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from tests.strategies import laurent_polys, nonzero_polys
from zd_rigidity.config import GroebnerLimits
from zd_rigidity.errors import BudgetExceededError, DimensionMismatchError
from zd_rigidity.grobner import (
    GREVLEX,
    LEX,
    MonomialOrder,
    OrderKind,
    SubmoduleHandle,
    elimination_order,
    is_member,
    module_colon,
    normal_form,
    normalize_vector,
    saturate_vars,
    strong_groebner,
    submodule_equal,
)
from zd_rigidity.analysis import is_connected, verify_connectedness_certificate
from zd_rigidity.laurent import LaurentPoly, parse_poly
from zd_rigidity.models.presentation import ModulePresentation


def ideal(*texts: str, dim: int = 1) -> SubmoduleHandle:
    return SubmoduleHandle([[parse_poly(t, dim)] for t in texts], rank=1, dim=dim)


def positive(f: LaurentPoly) -> LaurentPoly:
    return f.monomial_normalize()


def zero_divisor_witnesses(U: SubmoduleHandle, h: LaurentPoly) -> Iterator[LaurentPoly]:
    """Nonzero v on 1, u1, .., ud with coefficients in {-1, 0, 1}, v ∉ U and h·v ∈ U."""
    monomials = [(0,) * U.dim] + [
        tuple(int(i == j) for i in range(U.dim)) for j in range(U.dim)
    ]
    for coeffs in product((-1, 0, 1), repeat=len(monomials)):
        v = LaurentPoly(U.dim, {m: c for m, c in zip(monomials, coeffs, strict=True) if c})
        if v.is_zero():
            continue
        if is_member([h * v], U) and not is_member([v], U):
            yield v


TANGLED_IDEAL = (
    "2*u1 - u2 + u1*u2 - 2*u1^3*u2 + 2*u1^2*u2^2",
    "u1 - 2*u2 - u1*u2 - u1^2*u2^2",
)
TANGLED_DIVISOR = "-1 - 2*u1"


class TestMonomialOrder:
    """Tests for term orders."""

    def test_grevlex_degree_first(self) -> None:
        """Test that grevlex compares total degree first."""
        key = GREVLEX.monomial_key()
        assert key((0, 3)) > key((1, 1))
        assert key((1, 1)) > key((0, 2))

    def test_lex(self) -> None:
        """Test that lex compares exponents left to right."""
        key = LEX.monomial_key()
        assert key((1, 0)) > key((0, 5))

    def test_elimination_dominates(self) -> None:
        """Test that any term involving the first block dominates."""
        key = elimination_order(1, 2).monomial_key()
        assert key((1, 0, 0)) > key((0, 5, 5))

    def test_blocks_only_for_elimination(self) -> None:
        """Test block validation."""
        with pytest.raises(ValidationError):
            MonomialOrder(kind=OrderKind.LEX, blocks=(1,))
        with pytest.raises(ValidationError):
            MonomialOrder(kind=OrderKind.ELIMINATION)

    def test_position_over_term(self) -> None:
        """Test that position-over-term ranks e_0 above any e_1 term."""
        key = GREVLEX.key_function()
        assert key((0, (0,))) > key((1, (9,)))


class TestStrongGroebner:
    """Tests for strong_groebner and normal_form."""

    def test_integer_ideal(self) -> None:
        """Test the strong basis of (u - 1, u + 1) over the integers."""
        basis = strong_groebner([[parse_poly("u1 - 1")], [parse_poly("u1 + 1")]])
        assert [str(g[0]) for g in basis.generators] == ["2", "1 + u1"]
        assert basis.leading_coefficients() == [2, 1]

    def test_leading_coefficients_positive(self) -> None:
        """Test that every basis element has a positive leading coefficient."""
        basis = strong_groebner([[parse_poly("-3*u1*u2 + u1")], [parse_poly("2*u2^2 - 1")]])
        assert all(c > 0 for c in basis.leading_coefficients())

    def test_normal_form_of_member_is_zero(self) -> None:
        """Test that members reduce to zero."""
        basis = strong_groebner([[parse_poly("u1 - 1")], [parse_poly("u1 + 1")]])
        remainder = normal_form([parse_poly("4 + 2*u1")], basis)
        assert all(e.is_zero() for e in remainder)

    def test_normal_form_coefficient_remainder(self) -> None:
        """Test that constants reduce into (-lc/2, lc/2]."""
        basis = strong_groebner([[parse_poly("u1 - 1")], [parse_poly("u1 + 1")]])
        assert normal_form([parse_poly("3")], basis) == (LaurentPoly.one(1),)
        assert normal_form([parse_poly("-3")], basis) == (LaurentPoly.one(1),)
        four = strong_groebner([[LaurentPoly.constant(4, 1)]])
        assert normal_form([parse_poly("3")], four) == (parse_poly("-1"),)
        assert normal_form([parse_poly("-2")], four) == (parse_poly("2"),)
        assert normal_form([parse_poly("7*u1")], four) == (parse_poly("-u1"),)

    @given(f=nonzero_polys(2, max_terms=3), g=nonzero_polys(2, max_terms=3))
    @settings(max_examples=25, deadline=None)
    def test_basis_is_interreduced(self, f: LaurentPoly, g: LaurentPoly) -> None:
        """Test that no lead divides another and every tail term is a symmetric remainder."""
        basis = strong_groebner([[positive(f)], [positive(g)]])
        leads = basis.leading_terms()
        for index, ((pos, mono), lc) in enumerate(leads):
            for other, ((other_pos, other_mono), other_lc) in enumerate(leads):
                if other == index or other_pos != pos:
                    continue
                divides = all(a <= b for a, b in zip(other_mono, mono, strict=True))
                assert not (divides and lc % other_lc == 0)
        for element, (lead, _) in zip(basis.elements, leads, strict=True):
            for (pos, mono), coeff in element:
                if (pos, mono) == lead:
                    continue
                divisors = [
                    lc
                    for (lead_pos, lead_mono), lc in leads
                    if lead_pos == pos
                    and all(a <= b for a, b in zip(lead_mono, mono, strict=True))
                ]
                if divisors:
                    smallest = min(divisors)
                    assert -smallest < 2 * coeff <= smallest

    @given(
        f=nonzero_polys(2, max_terms=3),
        g=nonzero_polys(2, max_terms=3),
        v=laurent_polys(2, max_terms=4),
    )
    @settings(max_examples=25, deadline=None)
    def test_normal_form_idempotent(self, f: LaurentPoly, g: LaurentPoly, v: LaurentPoly) -> None:
        """Test that reducing a normal form again changes nothing."""
        basis = strong_groebner([[positive(f)], [positive(g)]])
        once = normal_form([positive(v)], basis)
        assert normal_form(once, basis) == once

    def test_normal_form_independent_of_generators(self) -> None:
        """Test that two generating sets of one ideal give the same normal forms."""
        first = strong_groebner([[parse_poly("u1 - 1")], [parse_poly("u1 + 1")]])
        second = strong_groebner([[parse_poly("2")], [parse_poly("3 + 3*u1")]])
        for text in ("5 + 4*u1^3", "u1^2 - 7", "3*u1"):
            vector = [parse_poly(text)]
            assert normal_form(vector, first) == normal_form(vector, second)

    def test_normal_form_rank_checked(self) -> None:
        """Test that the vector length must match the rank."""
        basis = strong_groebner([[parse_poly("u1")]])
        with pytest.raises(DimensionMismatchError):
            normal_form([parse_poly("u1"), parse_poly("1")], basis)

    def test_negative_exponents_rejected(self) -> None:
        """Test that generators must be in the positive orthant."""
        with pytest.raises(ValueError, match="positive orthant"):
            strong_groebner([[parse_poly("u1^-1 + 1")]])

    def test_empty_generators_need_rank(self) -> None:
        """Test that an empty generator list needs an explicit rank."""
        with pytest.raises(ValueError, match="rank is required"):
            strong_groebner([])

    def test_pair_budget(self) -> None:
        """Test that exhausting the pair budget raises instead of returning a partial basis."""
        rows = [[parse_poly(t)] for t in ("u1^2 - u2", "u1*u2 - 1", "u2^2 - u1")]
        with pytest.raises(BudgetExceededError) as exc_info:
            strong_groebner(rows, limits=GroebnerLimits(max_pairs=1))
        assert exc_info.value.code == "BUDGET_EXCEEDED"
        assert exc_info.value.limit == 1
        assert exc_info.value.details["reason"] == "pair limit"

    def test_coefficient_budget(self) -> None:
        """Test that oversized coefficients exhaust the budget."""
        with pytest.raises(BudgetExceededError, match="coefficient size"):
            strong_groebner(
                [[parse_poly("1000*u1 + 1")]], limits=GroebnerLimits(max_coeff_bits=4)
            )

    def test_module_basis(self) -> None:
        """Test a rank-two module basis."""
        rows = [
            [parse_poly("1 + u1"), parse_poly("1")],
            [parse_poly("u1"), parse_poly("2 - u1")],
        ]
        basis = strong_groebner(rows)
        assert basis.rank == 2
        for row in rows:
            assert all(e.is_zero() for e in normal_form(row, basis))


class TestSubmoduleHandle:
    """Tests for SubmoduleHandle construction."""

    def test_rows_normalized_and_zero_rows_dropped(self) -> None:
        """Test that rows move into the positive orthant and zero rows vanish."""
        U = SubmoduleHandle(
            [[parse_poly("u1^2 - u1")], [LaurentPoly.zero(1)]], rank=1, dim=1
        )
        assert U.rows == ((parse_poly("u1 - 1"),),)
        assert U.is_principal()

    def test_zero_submodule_is_saturated(self) -> None:
        """Test that the zero submodule needs no saturation."""
        U = SubmoduleHandle([], rank=2, dim=2)
        assert U.is_zero()
        assert saturate_vars(U) is U

    def test_normalize_vector(self) -> None:
        """Test the common shift of a module element."""
        row = normalize_vector([parse_poly("u1^-1"), parse_poly("u1^2")])
        assert row == (LaurentPoly.one(1), parse_poly("u1^3"))

    def test_rank_checked(self) -> None:
        """Test that row lengths must match the rank."""
        with pytest.raises(DimensionMismatchError):
            SubmoduleHandle([[parse_poly("1"), parse_poly("1")]], rank=1, dim=1)


class TestMembership:
    """Tests for Laurent membership, saturation and colon."""

    def test_integer_combination(self) -> None:
        """Test membership of an integer combination."""
        assert is_member([parse_poly("2")], ideal("u1 - 1", "u1 + 1"))
        assert not is_member([parse_poly("1")], ideal("u1 - 1", "u1 + 1"))

    def test_laurent_membership(self) -> None:
        """Test that unit multiples of generators are members."""
        assert is_member([parse_poly("u1^-1 - 1")], ideal("u1 - 1"))
        assert not is_member([LaurentPoly.one(1)], ideal("u1 - 2"))

    def test_zero_vector_is_member(self) -> None:
        """Test that zero lies in every submodule."""
        assert is_member([LaurentPoly.zero(1)], SubmoduleHandle([], rank=1, dim=1))
        assert not is_member([LaurentPoly.one(1)], SubmoduleHandle([], rank=1, dim=1))

    def test_saturation_needed(self) -> None:
        """Test a module where polynomial and Laurent membership differ."""
        one, zero = LaurentPoly.one(2), LaurentPoly.zero(2)
        u1, u2 = LaurentPoly.variable(0, 2), LaurentPoly.variable(1, 2)
        U = SubmoduleHandle([[u1, u2], [u2, zero]], rank=2, dim=2)
        assert is_member([zero, one], U)
        assert is_member([one, zero], U)
        assert not is_member([one, one + one], SubmoduleHandle([[u1, u2]], rank=2, dim=2))

    def test_saturate_vars(self) -> None:
        """Test the saturation of a non-principal ideal."""
        U = ideal("u1^2", "u1 + 1")
        saturated = saturate_vars(U)
        assert saturated.saturated
        assert is_member([LaurentPoly.one(1)], saturated)

    @given(f=laurent_polys(1, max_terms=3), g=nonzero_polys(1, max_terms=3))
    @settings(max_examples=30, deadline=None)
    def test_multiples_are_members(self, f: LaurentPoly, g: LaurentPoly) -> None:
        """Test that every Laurent multiple of g lies in (g)."""
        assert is_member([f * g], SubmoduleHandle.principal(g))

    def test_principal_colon(self) -> None:
        """Test (u^2 - 1) : (u - 1) = (u + 1)."""
        colon = module_colon(ideal("u1^2 - 1"), parse_poly("u1 - 1"))
        assert submodule_equal(colon, ideal("u1 + 1"))

    def test_colon_by_unit(self) -> None:
        """Test that the colon by a unit is the submodule itself."""
        U = ideal("2", "1 + u1")
        assert submodule_equal(module_colon(U, parse_poly("u1^3")), U)

    def test_non_principal_colon(self) -> None:
        """Test (2, 1 + u) : 2, which is the whole ring."""
        colon = module_colon(ideal("2", "1 + u1"), LaurentPoly.constant(2, 1))
        assert is_member([LaurentPoly.one(1)], colon)

    def test_colon_by_zero(self) -> None:
        """Test that the colon by zero is rejected."""
        with pytest.raises(ValueError, match="zero polynomial"):
            module_colon(ideal("u1"), LaurentPoly.zero(1))

    def test_submodule_equal(self) -> None:
        """Test equality of differently generated ideals."""
        assert submodule_equal(ideal("u1 - 1", "u1 + 1"), ideal("2", "1 + u1"))
        assert not submodule_equal(ideal("u1 - 1"), ideal("u1 + 1"))

    def test_submodule_equal_rank_mismatch(self) -> None:
        """Test that submodules of different ranks cannot be compared."""
        with pytest.raises(DimensionMismatchError):
            submodule_equal(ideal("u1"), SubmoduleHandle([], rank=2, dim=1))

    @given(
        f=nonzero_polys(2, max_terms=3, exponent_range=1),
        g=nonzero_polys(2, max_terms=3, exponent_range=1),
        a=laurent_polys(2, max_terms=2, exponent_range=1),
        r=laurent_polys(2, max_terms=2, exponent_range=1),
    )
    @settings(max_examples=25, deadline=None)
    def test_membership_independent_of_order(
        self, f: LaurentPoly, g: LaurentPoly, a: LaurentPoly, r: LaurentPoly
    ) -> None:
        """Test that grevlex and lex bases agree on membership."""
        U = SubmoduleHandle([[f], [g]], rank=1, dim=2)
        target = [a * f + r]
        assert is_member(target, U, order=GREVLEX) == is_member(target, U, order=LEX)
        assert is_member([a * g], U, order=LEX)

    @pytest.mark.parametrize(
        ("generators", "divisor", "dim", "zero_divisor"),
        [
            (("u1^2 - 1",), "u1 - 1", 1, True),
            (("u1^2 - 1",), "u1 - 2", 1, False),
            (("2", "1 + u1"), "2", 1, True),
            (("2", "1 + u1"), "1 + 2*u1", 1, False),
            (("u1 - 1", "2*u2 - 2"), "2", 2, True),
            (("1 + u1 + u2", "2"), "1 + u1", 2, False),
        ],
    )
    def test_colon_against_witness_search(
        self, generators: tuple[str, ...], divisor: str, dim: int, zero_divisor: bool
    ) -> None:
        """Test that U ⊆ (U : h), with equality exactly when no zero-divisor witness exists."""
        U = ideal(*generators, dim=dim)
        h = parse_poly(divisor, dim)
        colon = module_colon(U, h)
        assert all(is_member(row, colon) for row in U.rows)
        assert all(is_member([h * row[0]], U) for row in colon.rows)
        witnesses = list(zero_divisor_witnesses(U, h))
        assert bool(witnesses) == zero_divisor
        assert submodule_equal(colon, U) == (not witnesses)


class TestColonCompletion:
    """Tests for colon computations whose naive completion blows up."""

    def test_tangled_colon_completes(self) -> None:
        """Test that the colon completes under the default budget and brackets U."""
        U = ideal(*TANGLED_IDEAL, dim=2)
        h = parse_poly(TANGLED_DIVISOR, 2)
        colon = module_colon(U, h)
        assert not colon.is_zero()
        assert all(is_member(row, colon) for row in U.rows)
        assert all(is_member([h * row[0]], U) for row in colon.rows)

    def test_tangled_saturation_basis_is_small(self) -> None:
        """Test that the saturated basis keeps small coefficients and few pairs."""
        basis = saturate_vars(ideal(*TANGLED_IDEAL, dim=2)).basis()
        assert basis.pairs_consumed < GroebnerLimits().max_pairs
        assert max(abs(c).bit_length() for e in basis.elements for _, c in e) <= 64

    def test_tangled_connectedness(self) -> None:
        """Test that connectedness of the tangled module is decided."""
        M = ModulePresentation.from_text(2, 1, list(TANGLED_IDEAL), name="tangled")
        report = is_connected(M)
        if not report.connected:
            assert verify_connectedness_certificate(M, report)
        else:
            assert report.method == "colon"
