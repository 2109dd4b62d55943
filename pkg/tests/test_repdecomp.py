from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from higher_specht.combinat import (
    Subset,
    Tableau,
    asl_dsl,
    comp_n,
    partitions,
    perms_with_descents_in,
    standard_tableaux,
    subsets,
)
from higher_specht.oracle import are_independent, kostka, multinomial
from higher_specht.repdecomp import (
    DecompIndex,
    build_RnI,
    build_Rnk,
    build_Rnk_from_hsets,
    definition_basis,
    enlarge_I,
    ext,
    ext_condition,
    ext_is_single_lift,
    extstab_generator,
    genmaj_stat,
    h_set,
    hvec_add,
    hvec_of_subset,
    ind_homogeneity,
    ind_t,
    make_index,
    realized_spans_equal,
    stability_check,
    subset_of_hvec,
    submodule_closure,
    symmetrize_pair,
    trim_hvec,
    verify_embInd,
    verify_embreps,
    verify_enlarge,
    verify_Rnkind,
)
from higher_specht.polyring import Polynomial
from higher_specht.specht import f_w_I


def tab(*rows):
    return Tableau.from_rows(rows)


def summands(dec):
    return Counter((s.S.rows, s.hvec) for s in dec.summands)


subsets_up_to_5 = st.integers(2, 5).flatmap(lambda n: st.sampled_from(subsets(n)))


def test_hvec_helpers():
    assert trim_hvec([1, 0, 0]) == (1,)
    assert hvec_add((), 3) == (0, 0, 1)
    assert hvec_add((1,), 0) == (1,)
    assert hvec_add((1,), 1, 0) == (1,)


def test_index_display():
    idx = make_index(tab((1, 2, 3, 4)), (0, 1))
    assert str(idx) == "V[1 2 3 4]*e2"
    assert idx.degree == 2
    assert isinstance(idx, DecompIndex)


def test_R4_sets():
    dec = build_RnI(4, [2])
    assert summands(dec) == Counter({
        (((1, 2, 3, 4),), (1,)): 1,
        (((1, 2, 4), (3,)), ()): 1,
        (((1, 2), (3, 4)), ()): 1,
    })
    assert dec.dimension == 6
    assert str(dec) == "V[1 2 3 4]*e1 + V[1 2 4 / 3] + V[1 2 / 3 4]"


def test_R4_homogeneous():
    dec = build_RnI(4, [1, 3], hom=True)
    assert summands(dec) == Counter({
        (((1, 2, 3, 4),), (1, 0, 1)): 1,
        (((1, 2, 3), (4,)), (0, 0, 1)): 1,
        (((1, 3, 4), (2,)), (1,)): 1,
        (((1, 3), (2, 4)), ()): 1,
        (((1, 3), (2,), (4,)), ()): 1,
    })


def test_overflow_modes():
    with pytest.raises(ValueError):
        build_RnI(3, [1, 3])
    assert build_RnI(3, [1, 3], mode="intersect").same_summands(build_RnI(3, [1]))
    extended = build_RnI(3, [1, 3], mode="extend")
    assert extended.I is None and len(extended.summands) == 2
    with pytest.raises(ValueError):
        build_RnI(3, [3], mode="bogus")


def test_degree_distributions():
    # degrees of the definition-level polynomials F_{w,I}
    expected = {
        (4, (2,), False): {1: 1, 2: 5},
        (4, (1, 3), False): {1: 1, 2: 3, 3: 3, 4: 5},
        (4, (1, 3), True): {4: 12},
        (5, (2, 3), False): {2: 1, 3: 9, 4: 9, 5: 11},
    }
    for (n, I, hom), degrees in expected.items():
        dec = build_RnI(n, I, hom)
        got = Counter()
        for s in dec.summands:
            got[s.degree] += len(standard_tableaux(s.shape))
        assert dict(got) == degrees
        assert dict(Counter(p.degree() for p in definition_basis(n, Subset(I, n), hom))) == degrees


@settings(max_examples=20, deadline=None)
@given(subsets_up_to_5)
def test_dimension_and_multiplicities(I):
    n = I.n
    dec = build_RnI(n, I)
    assert dec.dimension == multinomial(comp_n(I))
    shapes = Counter(s.shape for s in dec.summands)
    for lam in partitions(n):
        assert shapes.get(lam, 0) == kostka(lam, comp_n(I))


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.sampled_from(subsets(n))), st.booleans())
def test_realized_basis_matches_definition(I, hom):
    dec = build_RnI(I.n, I, hom)
    basis = dec.basis()
    assert are_independent(basis)
    assert realized_spans_equal(basis, definition_basis(I.n, I, hom))


def test_Rnk_against_h_sets():
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert build_Rnk(n, k).same_summands(build_Rnk_from_hsets(n, k))
    with pytest.raises(ValueError):
        build_Rnk(3, 4)


def test_h_set_small():
    assert h_set(tab((1, 2, 3, 4)), 3) == [(), (1,), (2,)]
    assert h_set(tab((1, 2), (3, 4)), 2) == [()]
    assert h_set(tab((1, 2), (3, 4)), 1) == []


def test_hvec_bijection():
    D = Subset({3, 6}, 9)
    I = Subset({1, 3, 4, 5, 6, 8}, 9)
    assert hvec_of_subset(D, I) == (2, 1)
    assert subset_of_hvec(D, (2, 1), 7) == I
    with pytest.raises(ValueError):
        subset_of_hvec(D, (9,), 7)


@settings(max_examples=30)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.sampled_from(subsets(n)), st.sampled_from(subsets(n)))))
def test_hvec_bijection_round_trip(pair):
    D, extra = pair
    I = Subset(D | extra, D.n)
    assert subset_of_hvec(D, hvec_of_subset(D, I), len(I) + 1) == I


def test_genmaj_matches_degree():
    I = Subset({1, 3}, 4)
    for w in perms_with_descents_in(I):
        assert genmaj_stat(w, I) == f_w_I(w, I)[0].degree()
        assert genmaj_stat(w, I) >= sum(asl_dsl(w)[1])


def test_enlarge():
    dec = build_RnI(4, [1])
    bigger = enlarge_I(dec, 3)
    assert bigger.same_summands(build_RnI(4, [1, 3]))
    # the old summands pick up one e_1
    assert (((1, 2, 3, 4),), (1,)) in summands(bigger)
    with pytest.raises(ValueError):
        enlarge_I(dec, 1)
    for I in subsets(4):
        for ell in set(range(1, 4)) - I:
            assert verify_enlarge(4, I, ell, realize=True).ok


def test_ind_and_ext_small():
    assert ind_t(build_RnI(3, [1]), 1).same_summands(build_RnI(4, [1, 3]))
    assert ext(build_RnI(3, [1])).same_summands(build_RnI(4, [1]))
    assert ext(build_RnI(4, [1, 2])).same_summands(build_RnI(5, [1, 2]))
    with pytest.raises(ValueError):
        ind_t(build_RnI(3, [1]), 5)


def test_ind_degree_dichotomy():
    for s in build_RnI(4, [2]).summands:
        assert ind_homogeneity(s, 4)
        assert not any(ind_homogeneity(s, t) for t in range(0, 6) if t != 4)


def test_operator_identities_small():
    for n in range(1, 4):
        for I in subsets(n):
            assert verify_embInd(n, I, realize=True).ok
            assert verify_embreps(n, I, realize=True).ok
        for k in range(1, n + 1):
            assert verify_Rnkind(n, k, realize=True).ok


def test_stability():
    assert stability_check(Subset({1}, 3), 3).stable
    unstable = stability_check(Subset({2}, 3), 3, run_recipe=False)
    assert sorted(unstable.ext_images) == [1, 2]
    assert not unstable.stable
    relaxed = stability_check(Subset({1, 2}, 4), 4)
    assert relaxed.relaxed_bound and not relaxed.strict_bound and relaxed.stable


def test_relaxed_bound_recipe_spans_but_differs():
    cert = stability_check(Subset({3}, 6), 6)
    assert cert.recipe_spans
    assert cert.recipe_matches_iota is False


def test_symmetrize_pair():
    x = [None] + [Polynomial.variable(i, 4) for i in range(1, 5)]
    p = x[1] * x[2] + x[3]
    assert symmetrize_pair(p, 2, 4) == x[1] * x[2] + x[1] * x[4] + x[3]


def test_extstab_generator_degree():
    g, h = extstab_generator((2, 1, 3), Subset({1}, 3))
    assert g.is_homogeneous() and g.degree() == 1


def test_submodule_closure():
    x = [None] + [Polynomial.variable(i, 3) for i in range(1, 4)]
    span = submodule_closure([x[1]], 3)
    assert len(span) == 3
    assert len(submodule_closure([x[1] + x[2] + x[3]], 3)) == 1


def test_ext_conditions():
    assert ext_condition(tab((1, 2, 4), (3,))) == "strict"
    assert ext_condition(tab((1, 3), (2,))) is None
    assert ext_condition(tab((1, 2), (3, 4))) == "equal_rows"
    assert ext_condition(tab((1, 3), (2, 4))) is None
    # neither condition holds, yet Ext still lifts to a single summand
    S = tab((1, 3, 4), (2, 5, 6))
    assert ext_condition(S) is None and ext_is_single_lift(S)
    assert not ext_is_single_lift(tab((1, 3), (2,)))


def test_recipe_spans_beyond_the_suite_bound():
    cert = stability_check(Subset({3}, 7), 7)
    assert cert.strict_bound and cert.ext_singletons
    assert cert.recipe_spans and cert.recipe_matches_iota is False
