from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import cocharge_filling, descent_set, hook_length_count
from higher_specht.combinat import (
    OrderedSetPartition,
    Subset,
    Tableau,
    add_box_cc,
    add_box_ev,
    all_permutations,
    asl_dsl,
    bar_insert,
    check_permutation,
    cocharge,
    comp_n,
    comp_n_inv,
    compose,
    conjugate,
    conjugate_by_longest,
    ct,
    ct_J,
    ct_inv,
    cycle_type,
    delta,
    dsi,
    dsic_sets,
    evacuation,
    external_corners,
    inverse,
    iota_cc,
    iota_ev,
    iota_tableau,
    iota_word,
    is_cct,
    osp_perm_bijection,
    osp_to_perm,
    partitions,
    perm_to_osp,
    permutation_of_cycle_type,
    q_tilde,
    row_reading_tableau,
    rsk,
    sign,
    standard_tableaux,
    star_insert,
    subsets,
)

T431 = Tableau.from_rows([[1, 2, 4, 7], [3, 6, 8], [5]])

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


@st.composite
def standard(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    lam = draw(st.sampled_from(partitions(n)))
    return draw(st.sampled_from(standard_tableaux(lam)))


# partitions and subsets


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_partitions_reverse_lex():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_conjugate():
    assert conjugate((4, 3, 1)) == (3, 2, 2, 1)
    assert conjugate(conjugate((5, 2, 2, 1))) == (5, 2, 2, 1)


def test_external_corners():
    assert external_corners((4, 3, 1)) == [(1, 5), (2, 4), (3, 2), (4, 1)]
    assert external_corners((5,)) == [(1, 6), (2, 1)]
    assert external_corners((3, 3)) == [(1, 4), (3, 1)]


def test_subset_validation():
    with pytest.raises(ValueError):
        Subset({0, 2}, 4)
    with pytest.raises(ValueError):
        Subset({4}, 4)


def test_subset_reflect_and_complement():
    J = Subset({1, 4, 6}, 8)
    assert J.reflect() == {2, 4, 7}
    assert J.complement() == {2, 3, 5, 7}
    assert J.add(8, 9) == {1, 4, 6, 8} and J.add(8, 9).n == 9


def test_comp_n():
    assert comp_n(Subset({1, 2, 4, 5, 7}, 8)) == (1, 1, 2, 1, 2, 1)
    assert comp_n(Subset((), 5)) == (5,)
    assert comp_n_inv((2, 2, 3, 1)) == Subset({2, 4, 7}, 8)


@given(st.integers(1, 8).flatmap(lambda n: st.sets(st.integers(1, n - 1) if n > 1 else st.nothing()).map(lambda s: (n, s))))
def test_comp_n_round_trip(case):
    n, s = case
    J = Subset(s, n)
    assert comp_n_inv(comp_n(J)) == J
    assert sum(comp_n(J)) == n


def test_subset_count():
    assert len(subsets(5)) == 16
    assert len(subsets(5, 2)) == 6


# permutations


def test_permutation_basics():
    w = (3, 1, 2)
    assert compose(w, inverse(w)) == (1, 2, 3)
    assert sign((2, 1, 3)) == -1 and sign(w) == 1
    assert cycle_type((2, 1, 4, 3, 5)) == (2, 2, 1)
    assert cycle_type(permutation_of_cycle_type((3, 2))) == (3, 2)
    with pytest.raises(ValueError):
        check_permutation([1, 1, 2])


def test_conjugate_by_longest_and_iota():
    assert conjugate_by_longest((3, 5, 2, 7, 1, 4, 8, 6)) == (3, 1, 5, 8, 2, 7, 4, 6)
    assert iota_word((2, 1, 3)) == (2, 1, 3, 4)


@given(perms)
def test_asl_dsl_partition_positions(w):
    asl, dsl = asl_dsl(w)
    assert asl | dsl == set(range(1, len(w))) and not asl & dsl


# tableaux and RSK


def test_syt_counts_match_hook_lengths():
    # totals are the involution numbers
    totals = [sum(len(standard_tableaux(lam)) for lam in partitions(n)) for n in range(1, 8)]
    assert totals == [1, 2, 4, 10, 26, 76, 232]
    for lam in partitions(6):
        assert len(standard_tableaux(lam)) == hook_length_count(lam)


def test_standard_tableaux_order_by_reading_word():
    tabs = standard_tableaux((2, 2))
    assert [t.rows for t in tabs] == [((1, 2), (3, 4)), ((1, 3), (2, 4))]


def test_tableau_accessors():
    assert T431.shape == (4, 3, 1)
    assert T431[(2, 3)] == 8
    assert T431.box_of(5) == (3, 1)
    assert str(T431) == "1 2 4 7 / 3 6 8 / 5"
    assert T431.columns == ((1, 3, 5), (2, 6), (4, 8), (7,))


def test_rsk_worked_word():
    P, Q = rsk((3, 5, 2, 7, 1, 4, 8, 6))
    assert P.rows == ((1, 4, 6, 8), (2, 5, 7), (3,))
    assert Q == T431


@given(perms)
def test_rsk_descents_match(w):
    _, Q = rsk(w)
    assert asl_dsl(w)[1] == dsi(Q)


@given(perms)
def test_q_tilde_is_conjugated_recording(w):
    assert q_tilde(w) == rsk(conjugate_by_longest(w))[1]


@given(standard())
def test_evacuation_involution(S):
    E = evacuation(S)
    assert E.shape == S.shape and E.is_standard()
    assert evacuation(E) == S
    assert dsi(E) == dsi(S).reflect()


def test_evacuation_worked_value():
    assert evacuation(T431).rows == ((1, 3, 4, 8), (2, 5, 6), (7,))


# cocharge


def test_ct_worked_values():
    assert ct(T431).rows == ((0, 0, 1, 2), (1, 2, 3), (2,))
    CJ = ct_J(T431, Subset({1, 2, 4, 5, 7}, 8))
    assert CJ.rows == ((0, 1, 2, 4), (2, 4, 5), (3,))
    assert sum(CJ.reading_word) == 21
    assert not is_cct(CJ) and is_cct(ct(T431))
    with pytest.raises(ValueError):
        ct_J(T431, Subset({2, 4}, 8))


def test_single_row_cocharge():
    S = row_reading_tableau((5,))
    assert set(ct(S).reading_word) == {0}
    assert cocharge(S) == 0
    assert dsic_sets(S)[0] == set()


@given(standard())
def test_ct_matches_definition(S):
    assert ct(S) == cocharge_filling(S)
    assert dsi(S) == descent_set(S)
    assert ct_inv(ct(S)) == S
    assert cocharge(S) == sum(S.size - i for i in dsi(S)) == sum(dsic_sets(S)[0])


@given(perms)
def test_cocharge_of_q_tilde_is_descent_sum(w):
    assert cocharge(q_tilde(w)) == sum(asl_dsl(w)[1])


def test_ct_injective_on_every_shape():
    for lam in partitions(6):
        images = [ct(S) for S in standard_tableaux(lam)]
        assert len(set(images)) == len(images)


# box additions


def test_iota_maps():
    S = evacuation(T431)
    assert iota_tableau(rsk((3, 5, 2, 7, 1, 4, 8, 6))[0]).rows == ((1, 4, 6, 8, 9), (2, 5, 7), (3,))
    assert iota_ev(S).rows == ((1, 2, 4, 5, 9), (3, 6, 7), (8,))
    assert iota_cc(ct(S)).rows == ((0, 0, 1, 1, 3), (1, 2, 2), (3,))


def test_delta_per_corner():
    S = evacuation(T431)
    assert [delta(S, v) for v in external_corners(S.shape)] == [1, 1, 0, 0]


@given(standard(max_n=6))
def test_box_addition_commutes_with_ct(S):
    for v in external_corners(S.shape):
        assert add_box_cc(ct(S), v) == ct(add_box_ev(S, v))


def test_box_addition_rejects_inner_box():
    with pytest.raises(ValueError):
        add_box_ev(T431, (2, 2))


# ordered set partitions


def test_osp_bijection_small():
    words = sorted(osp_perm_bijection(Subset({2}, 4)).values())
    assert words == [(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3), (3, 4, 1, 2)]
    assert list(osp_perm_bijection(Subset((), 3)).values()) == [(1, 2, 3)]


@settings(max_examples=30)
@given(st.integers(1, 6).flatmap(lambda n: st.sets(st.integers(1, n - 1) if n > 1 else st.nothing()).map(lambda s: Subset(s, n))))
def test_osp_bijection_round_trip(I):
    pairs = osp_perm_bijection(I)
    for p, w in pairs.items():
        assert osp_to_perm(p) == w and perm_to_osp(w, I) == p
        assert p.subset() == I


def test_insertions():
    p = OrderedSetPartition((frozenset({2, 5}), frozenset({1, 3, 6}), frozenset({4})))
    assert star_insert(p).to_json() == [[2, 5], [1, 3, 6], [4, 7]]
    assert bar_insert(p).subset() == Subset({2, 5, 6}, 7)
    whole = OrderedSetPartition((frozenset({1, 2, 3}),))
    assert bar_insert(whole).subset() == Subset({3}, 4)


def test_osp_action():
    p = OrderedSetPartition((frozenset({1}), frozenset({2, 3})))
    assert p.act((2, 1, 3)).to_json() == [[2], [1, 3]]
    assert Counter(len(b) for b in p.blocks) == Counter({1: 1, 2: 1})


def test_every_permutation_listed_once():
    assert len(set(all_permutations(5))) == 120
