"""Profiles, normal forms, comparison, names, and classification verdicts."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from raagcs import (
    OMEGA,
    AbGroup,
    ExtNat,
    FiniteExt,
    InfiniteComp,
    InvariantProfile,
    ParseError,
    Toeplitz,
    algebra_name,
    canonical_form,
    classify_component,
    compare,
    complete_graph,
    component_ktheory,
    component_name,
    cycle_graph,
    decompose,
    decompose_oracle,
    empty_graph,
    euler_characteristic,
    graph_join,
    invariant_profile,
    is_graph_algebra,
    normal_form,
    parse_profile_spec,
    path_graph,
    prim_space,
    profile_components,
    semiprojectivity,
    stable_normal_form,
)
from raagcs.artin import TRIVIAL_GROUP, Z_GROUP
from conftest import graphs, profiles, random_profile


def p(spec: str) -> InvariantProfile:
    return parse_profile_spec(spec)


class TestExtNat:
    def test_equality_with_ints_and_inf(self):
        assert ExtNat(2) == 2 == ExtNat(2)
        assert OMEGA == "inf"
        assert ExtNat(2) != 3
        assert ExtNat(2) != OMEGA
        assert ExtNat(2) != "2"

    def test_hash_interop(self):
        assert hash(ExtNat(2)) == hash(2)
        assert len({ExtNat(1), 1, ExtNat(1)}) == 1

    def test_ordering(self):
        assert ExtNat(1) < 2 < OMEGA
        assert not OMEGA < OMEGA
        assert OMEGA <= OMEGA
        assert sorted([OMEGA, ExtNat(3), ExtNat(0)]) == [0, 3, OMEGA]

    def test_addition_absorbs_infinity(self):
        assert ExtNat(2) + 3 == 5
        assert ExtNat(2) + OMEGA == OMEGA
        assert 1 + ExtNat(2) == 3
        assert sum([ExtNat(1), ExtNat(2)], ExtNat(0)) == 3

    def test_validation(self):
        with pytest.raises(ValueError):
            ExtNat(-1)
        with pytest.raises(TypeError):
            ExtNat(True)
        with pytest.raises(TypeError):
            ExtNat.of(2.5)
        assert ExtNat.of("inf") is OMEGA
        assert ExtNat.of(None) is OMEGA

    def test_capped_at_one(self):
        assert ExtNat(0).capped_at_one() == 0
        assert ExtNat(5).capped_at_one() == 1
        assert OMEGA.capped_at_one() == 1

    def test_str(self):
        assert str(ExtNat(3)) == "3"
        assert str(OMEGA) == "inf"


class TestAbGroup:
    def test_cyclic(self):
        assert AbGroup.cyclic(0) == Z_GROUP
        assert AbGroup.cyclic(1) == TRIVIAL_GROUP
        assert AbGroup.cyclic(-1) == TRIVIAL_GROUP
        assert AbGroup.cyclic(-4) == AbGroup(0, (4,))

    def test_validation(self):
        with pytest.raises(ValueError):
            AbGroup(-1)
        with pytest.raises(ValueError):
            AbGroup(0, (2, 3))
        with pytest.raises(ValueError):
            AbGroup(0, (1,))

    def test_str(self):
        assert str(Z_GROUP) == "Z"
        assert str(AbGroup(2)) == "Z^2"
        assert str(AbGroup(0, (4,))) == "Z/4"
        assert str(AbGroup(1, (2, 4))) == "Z + Z/2 + Z/4"
        assert str(TRIVIAL_GROUP) == "0"
        assert TRIVIAL_GROUP.is_trivial


class TestInvariantProfile:
    def test_make_sorts_and_drops_zeros(self):
        prof = InvariantProfile.make(N={2: 1, -1: 0, -3: "inf"})
        assert prof.N == ((-3, OMEGA), (2, ExtNat(1)))

    def test_constructor_validation(self):
        with pytest.raises(ValueError):
            InvariantProfile(N=((2, ExtNat(1)), (1, ExtNat(1))))
        with pytest.raises(ValueError):
            InvariantProfile(N=((1, ExtNat(1)), (1, ExtNat(2))))
        with pytest.raises(ValueError):
            InvariantProfile(N=((1, ExtNat(0)),))

    def test_accessors(self):
        prof = p("t=2;N[-1]=1;N[3]=inf")
        assert prof.N_at(-1) == 1
        assert prof.N_at(7) == 0
        assert prof.total_N == OMEGA
        assert prof.component_count == OMEGA
        assert not prof.is_empty
        assert p("").is_empty


class TestProfileSpecParsing:
    def test_basic(self):
        assert p("t=1") == InvariantProfile.make(t=1)
        assert p("o=2;N[1]=1") == InvariantProfile.make(o=2, N={1: 1})
        assert p("N[-1]=inf") == InvariantProfile.make(N={-1: OMEGA})

    def test_whitespace_and_empty_tokens(self):
        assert p(" t = 1 ;; N[-1]= 2 ") == InvariantProfile.make(t=1, N={-1: 2})

    def test_key_order_is_free(self):
        assert p("N[1]=1;t=2;N[-1]=1") == p("t=2;N[-1]=1;N[1]=1")

    def test_errors(self):
        with pytest.raises(ParseError, match="unknown profile key"):
            p("q=1")
        with pytest.raises(ParseError, match="duplicate key t"):
            p("t=1;t=2")
        with pytest.raises(ParseError, match="duplicate key o"):
            p("o=1;o=1")
        with pytest.raises(ParseError, match=r"duplicate key N\[1\]"):
            p("N[1]=1;N[1]=2")
        with pytest.raises(ParseError, match="negative count"):
            p("t=-1")
        with pytest.raises(ParseError, match="malformed count"):
            p("t=x")
        with pytest.raises(ParseError, match="malformed profile token"):
            p("t")
        with pytest.raises(ParseError, match="unknown profile key"):
            p("N[a]=1")


class TestDecompose:
    def test_complete_graph_splits_into_singletons(self):
        parts = decompose(complete_graph(5))
        assert len(parts) == 5
        assert all(part.n == 1 for part in parts)

    def test_empty_graph_is_one_component(self):
        parts = decompose(empty_graph(5))
        assert len(parts) == 1 and parts[0].n == 5

    def test_single_edge_splits(self):
        g = complete_graph(2)
        assert [part.n for part in decompose(g)] == [1, 1]

    def test_join_decomposes_into_its_pieces(self):
        g = graph_join(cycle_graph(5), empty_graph(3))
        parts = decompose(g)
        assert sorted(part.n for part in parts) == [3, 5]
        assert sorted(euler_characteristic(part) for part in parts) == [-2, 1]

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_pieces_rebuild_the_graph_and_are_co_irreducible(self, g):
        parts = decompose(g)
        assert sum(part.n for part in parts) == g.n
        for part in parts:
            assert not decompose_oracle(part)
        rebuilt = empty_graph(0)
        for part in parts:
            rebuilt = graph_join(rebuilt, part)
        if g.n:
            assert canonical_form(rebuilt) == canonical_form(g)

    def test_oracle_examples(self):
        assert not decompose_oracle(cycle_graph(5))
        assert decompose_oracle(complete_graph(2))
        assert not decompose_oracle(empty_graph(1))
        assert not decompose_oracle(empty_graph(0))

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_oracle_agrees_with_decompose(self, g):
        assert (len(decompose(g)) > 1) == decompose_oracle(g)


class TestClassifyComponent:
    def test_cases(self):
        assert classify_component(empty_graph(1)) == Toeplitz()
        assert classify_component(empty_graph(3)) == FiniteExt(-2)
        assert classify_component(cycle_graph(5)) == FiniteExt(1)
        with pytest.raises(ValueError):
            classify_component(empty_graph(0))

    def test_component_names(self):
        assert component_name(Toeplitz()) == "T"
        assert component_name(InfiniteComp()) == "O_inf"
        assert component_name(FiniteExt(0)) == "E_1^0"
        assert component_name(FiniteExt(-2)) == "E_3^-1"
        assert component_name(FiniteExt(1)) == "E_2^+1"


class TestInvariantProfileOfGraph:
    def test_examples(self):
        assert invariant_profile(empty_graph(5)) == p("N[-4]=1")
        assert invariant_profile(complete_graph(5)) == p("t=5")
        assert invariant_profile(path_graph(4)) == p("N[0]=1")
        joined = graph_join(cycle_graph(5), empty_graph(3))
        assert invariant_profile(joined) == p("N[-2]=1;N[1]=1")

    def test_empty_graph_gives_empty_profile(self):
        assert invariant_profile(empty_graph(0)).is_empty


class TestNormalForm:
    def test_folding(self):
        nf = normal_form(p("N[-2]=1;N[-1]=1;N[0]=3;N[2]=2"))
        assert nf.z == 3
        assert nf.M == ((1, ExtNat(1)), (2, ExtNat(3)))

    def test_sign_blind_pairs(self):
        assert normal_form(p("N[-1]=2")) == normal_form(p("N[1]=2"))
        assert normal_form(p("N[-1]=1;N[0]=1;N[1]=1")) == normal_form(
            p("N[-1]=2;N[0]=1")
        )

    def test_parity_splits_signs(self):
        left, right = normal_form(p("N[-1]=1")), normal_form(p("N[1]=1"))
        assert left != right
        assert (left.parity, right.parity) == (1, 0)
        assert stable_normal_form(p("N[-1]=1")) == stable_normal_form(p("N[1]=1"))

    def test_parity_undefined_when_blocked(self):
        assert normal_form(p("N[0]=1;N[-1]=1")).parity == "undefined"
        assert normal_form(p("o=1;N[-1]=1")).parity == "undefined"
        assert normal_form(p("N[-1]=inf")).parity == "undefined"
        assert normal_form(p("N[-1]=2")).parity == 0

    def test_omin(self):
        assert normal_form(p("o=2;N[1]=1")).omin == 1
        assert normal_form(p("N[1]=1")).omin == 0
        assert normal_form(p("o=1;N[1]=inf")).omin == "irrelevant"

    def test_infinite_o_collapses(self):
        assert normal_form(p("o=2;N[1]=1")) == normal_form(p("o=1;N[1]=1"))

    def test_t_passes_through(self):
        assert normal_form(p("t=inf")).t == OMEGA


class TestCompare:
    def test_equal_profiles(self):
        verdict = compare(p("t=1;N[-1]=2"), p("t=1;N[-1]=2"))
        assert verdict.isomorphic and verdict.stably_isomorphic
        assert verdict.failed_conditions == ()

    def test_condition_i(self):
        verdict = compare(p("t=1"), p("t=2"))
        assert not verdict.stably_isomorphic
        assert verdict.failed_conditions == ("i",)

    def test_condition_ii_at_zero(self):
        verdict = compare(p("N[0]=1"), p("o=1"))
        assert not verdict.stably_isomorphic
        assert "ii" in verdict.failed_conditions

    def test_condition_iii(self):
        verdict = compare(p("N[2]=1;o=1"), p("N[2]=1"))
        assert not verdict.stably_isomorphic
        assert verdict.failed_conditions == ("iii",)

    def test_condition_iv_sign_rigidity(self):
        verdict = compare(p("N[-1]=1"), p("N[1]=1"))
        assert verdict.stably_isomorphic and not verdict.isomorphic
        assert verdict.failed_conditions == ("iv",)

    def test_condition_iv_vacuous_with_o(self):
        verdict = compare(p("o=2;N[1]=1"), p("o=1;N[1]=1"))
        assert verdict.isomorphic
        assert verdict.failed_conditions == ()

    def test_infinite_totals_ignore_o(self):
        assert compare(p("N[1]=inf"), p("o=3;N[-1]=inf")).isomorphic

    def test_infinite_counts_fold(self):
        verdict = compare(p("N[-2]=inf"), p("N[2]=inf;N[-2]=1"))
        assert verdict.isomorphic

    def test_seeded_pairs_run_the_dual_route_check(self):
        # compare() raises RuntimeError internally if the condition route
        # ever disagrees with the normal-form route.
        rng = random.Random(11)
        for _ in range(300):
            lhs, rhs = random_profile(rng), random_profile(rng)
            verdict = compare(lhs, rhs)
            if verdict.isomorphic:
                assert verdict.stably_isomorphic

    @given(profiles())
    @settings(max_examples=80, deadline=None)
    def test_reflexive(self, prof):
        assert compare(prof, prof).isomorphic

    @given(profiles(), profiles())
    @settings(max_examples=120, deadline=None)
    def test_symmetric_and_iso_implies_stable(self, lhs, rhs):
        forward, backward = compare(lhs, rhs), compare(rhs, lhs)
        assert forward.isomorphic == backward.isomorphic
        assert forward.stably_isomorphic == backward.stably_isomorphic
        if forward.isomorphic:
            assert forward.stably_isomorphic


class TestAlgebraName:
    def test_frozen_cases(self):
        assert algebra_name(p("t=1")) == "T"
        assert algebra_name(p("N[-4]=1")) == "E_5^-1"
        assert algebra_name(p("N[-1]=2")) == "E_2^+1 ⊗ E_2^+1"
        assert algebra_name(p("t=5")) == "T^{⊗5}"
        assert algebra_name(p("t=inf")) == "T^{⊗inf}"
        assert algebra_name(p("")) == "C"
        assert algebra_name(p("o=3")) == "O_inf"
        assert algebra_name(p("N[1]=inf")) == "E_2^+1^{⊗inf}"

    def test_odd_parity_flips_single_lowest_factor(self):
        assert algebra_name(p("N[-1]=3")) == "E_2^-1 ⊗ E_2^+1 ⊗ E_2^+1"
        assert algebra_name(p("N[-2]=1;N[2]=1")) == "E_3^-1 ⊗ E_3^+1"
        assert algebra_name(p("N[-2]=1;N[1]=1")) == "E_2^-1 ⊗ E_3^+1"
        assert algebra_name(p("N[-2]=1;N[-1]=1")) == "E_2^+1 ⊗ E_3^+1"

    def test_factor_order(self):
        name = algebra_name(p("t=1;o=1;N[0]=2;N[-3]=1"))
        assert name == "T ⊗ O_inf ⊗ E_1^0 ⊗ E_1^0 ⊗ E_4^+1"

    @given(profiles(), profiles())
    @settings(max_examples=120, deadline=None)
    def test_name_is_constant_on_normal_forms_with_finite_totals(self, lhs, rhs):
        # With infinitely many finite factors the o count no longer affects
        # the isomorphism class, but it still renders, so names are only an
        # invariant while the total stays finite.
        if lhs.total_N.is_finite and rhs.total_N.is_finite:
            if normal_form(lhs) == normal_form(rhs):
                assert algebra_name(lhs) == algebra_name(rhs)

    def test_name_renders_literal_o_in_the_infinite_regime(self):
        lhs, rhs = p("o=1;N[1]=inf"), p("N[1]=inf")
        assert compare(lhs, rhs).isomorphic
        assert algebra_name(lhs) == "O_inf ⊗ E_2^+1^{⊗inf}"
        assert algebra_name(rhs) == "E_2^+1^{⊗inf}"


class TestPrimSpace:
    def test_component_kinds(self):
        assert prim_space(p("t=1")).toeplitz_components == 1
        assert prim_space(p("N[-2]=1")).two_point_components == 1
        assert prim_space(p("N[-2]=1")).minimal_nonzero_ideals == 1
        assert prim_space(p("o=1")).one_point_components == 1

    def test_product_flag(self):
        assert prim_space(p("t=1;N[1]=1")).is_product
        assert not prim_space(p("t=1")).is_product
        assert not prim_space(p("")).is_product

    def test_infinite_counts(self):
        assert prim_space(p("N[1]=inf")).two_point_components == OMEGA


class TestComponentKTheory:
    def test_toeplitz_row(self):
        row = component_ktheory(Toeplitz())
        assert row.k0_full == Z_GROUP and row.unit_is_generator
        assert row.k1_full == TRIVIAL_GROUP
        assert row.index_value == 0
        assert row.k0_quotient == Z_GROUP and row.k1_quotient == Z_GROUP

    def test_finite_rows(self):
        row = component_ktheory(FiniteExt(-2))
        assert row.index_value == -2
        assert row.k0_quotient == AbGroup(0, (2,))
        assert row.k1_quotient == TRIVIAL_GROUP
        zero = component_ktheory(FiniteExt(0))
        assert zero.k0_quotient == Z_GROUP
        assert zero.k1_quotient == Z_GROUP

    def test_infinite_row_has_no_extension(self):
        row = component_ktheory(InfiniteComp())
        assert row.k0_full == Z_GROUP and row.k1_full == TRIVIAL_GROUP
        assert row.index_value is None
        assert row.k0_ideal is None and row.k0_quotient is None

    def test_profile_components_order(self):
        parts = profile_components(p("o=1;N[2]=2;t=3;N[-1]=1"))
        assert parts == [
            (Toeplitz(), ExtNat(3)),
            (FiniteExt(-1), ExtNat(1)),
            (FiniteExt(2), ExtNat(2)),
            (InfiniteComp(), ExtNat(1)),
        ]


class TestGraphAlgebraVerdict:
    def test_clause_one(self):
        assert is_graph_algebra(p("t=1")) == (True, 1)

    def test_clause_two(self):
        assert is_graph_algebra(p("N[-3]=1;N[-1]=5")) == (True, 2)
        assert is_graph_algebra(p("o=1")) == (True, 2)
        assert is_graph_algebra(p("N[1]=1")) == (True, 2)

    def test_rejections(self):
        assert is_graph_algebra(p("N[-2]=2")) == (False, None)
        assert is_graph_algebra(p("t=1;N[-1]=1")) == (False, None)
        assert is_graph_algebra(p("t=2")) == (False, None)
        assert is_graph_algebra(p("N[1]=inf")) == (False, None)


class TestSemiprojectivity:
    def test_clauses(self):
        assert semiprojectivity(p("t=2")) == ("NotSemiprojective", 1)
        assert semiprojectivity(p("t=1")) == ("Semiprojective", 2)
        assert semiprojectivity(p("t=1;N[-1]=1")) == ("NotSemiprojective", 2)
        assert semiprojectivity(p("t=1;o=1")) == ("NotSemiprojective", 2)
        assert semiprojectivity(p("N[-3]=1;N[-1]=5")) == ("Semiprojective", 3)

    def test_open_cases_stay_unknown(self):
        assert semiprojectivity(p("N[-2]=2")) == ("Unknown", None)
        assert semiprojectivity(p("N[-1]=inf")) == ("Unknown", None)
