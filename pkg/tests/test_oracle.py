from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import fixed_points, ssyt_count
from higher_specht.combinat import (
    Subset,
    Tableau,
    comp_n,
    partitions,
    permutation_of_cycle_type,
    standard_tableaux,
    subsets,
)
from higher_specht.oracle import (
    Echelon,
    ModularEchelon,
    NotInvariantError,
    SpanCoordinates,
    are_independent,
    class_size,
    enumerate_OP,
    inner_product,
    irreducible_character,
    is_class_function_on,
    kostka,
    mn_character,
    multinomial,
    perm_module_character,
    regular_character,
    span_rank,
    spans_equal,
    specht_module_multiplicity,
    trace_action,
)
from higher_specht.polyring import Polynomial
from higher_specht.repdecomp import build_RnI, make_index, v_basis

x1, x2, x3 = (Polynomial.variable(i, 3) for i in range(1, 4))


def test_kostka_spot_values():
    # brute-force SSYT counts from bruteforce.ssyt_count
    assert kostka((2, 2), (1, 1, 1, 1)) == 2
    assert kostka((3, 2), (1, 2, 2)) == 2
    assert kostka((2, 2, 1), (2, 2, 1)) == 1
    assert kostka((3, 1, 1), (1, 1, 1, 2)) == 3
    assert {lam: kostka(lam, (2, 1, 1)) for lam in partitions(4)} == {
        (4,): 1, (3, 1): 2, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 0,
    }


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.sampled_from(partitions(n)), st.sampled_from(subsets(n)))))
def test_kostka_matches_enumeration(case):
    lam, J = case
    alpha = comp_n(J)
    assert kostka(lam, alpha) == ssyt_count(lam, alpha)


def test_kostka_dimension_identity():
    for n in range(1, 7):
        for J in subsets(n):
            alpha = comp_n(J)
            assert sum(kostka(lam, alpha) * len(standard_tableaux(lam)) for lam in partitions(n)) == multinomial(alpha)


def test_ordered_set_partition_counts():
    assert len(enumerate_OP(4, Subset({2}, 4))) == 6
    assert len(enumerate_OP(5, Subset({1, 3}, 5))) == multinomial((1, 2, 2)) == 30


def test_perm_module_characters():
    # fixed-point counts from bruteforce.fixed_points, classes in partitions(4) order
    expected = {
        (1,): [0, 1, 0, 2, 4],
        (2,): [0, 0, 2, 2, 6],
        (1, 2): [0, 0, 0, 2, 12],
        (2, 3): [0, 0, 0, 2, 12],
    }
    for I, values in expected.items():
        assert list(perm_module_character(4, Subset(I, 4)).values) == values
    chi = perm_module_character(3, Subset({1}, 3))
    assert chi[(2, 1)] == 1
    assert perm_module_character(4, Subset({1, 2, 3}, 4)) == regular_character(4)


def test_character_against_direct_fixed_points():
    for I in subsets(4):
        sizes = comp_n(I)
        chi = perm_module_character(4, I)
        assert list(chi.values) == [fixed_points(permutation_of_cycle_type(mu), sizes) for mu in partitions(4)]


def test_class_sizes_sum_to_group_order():
    for n in range(1, 8):
        assert sum(class_size(mu) for mu in partitions(n)) == factorial(n)


def test_irreducible_characters():
    for n in range(1, 6):
        for lam in partitions(n):
            chi = irreducible_character(lam)
            assert chi[(1,) * n] == len(standard_tableaux(lam))
            assert inner_product(chi, chi) == 1
            assert specht_module_multiplicity(regular_character(n), lam) == len(standard_tableaux(lam))
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((3,), (2, 1)) == 1


def test_multiplicities_are_kostka_numbers():
    for n in range(1, 7):
        for I in subsets(n):
            chi = perm_module_character(n, I)
            for lam in partitions(n):
                assert specht_module_multiplicity(chi, lam) == kostka(lam, comp_n(I))


def test_class_function_check():
    chi = perm_module_character(4, Subset({2}, 4))
    f = lambda s: sum(1 for p in enumerate_OP(4, Subset({2}, 4)) if p.act(s) == p)  # noqa: E731
    samples = [(2, 1, 3, 4), (1, 3, 2, 4), (2, 3, 4, 1), (4, 3, 2, 1)]
    assert is_class_function_on(4, f, samples)
    assert chi[(2, 1, 1)] == f((1, 2, 4, 3))


def test_ranks():
    assert span_rank([x1, x2, x1 + x2]) == 2
    assert span_rank([x1 - x2, x1 - x2]) == 1
    assert are_independent([x1 * x2, x1**2, x2**2])
    assert not are_independent([x1, 2 * x1])
    assert spans_equal([x1, x2], [x1 + x2, x1 - x2])
    assert not spans_equal([x1], [x2])


def test_echelon_variants_agree():
    rows = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1, 2: 3}, {0: 1, 2: -3}]
    ech, mod = Echelon(), ModularEchelon()
    added = [ech.add(r) for r in rows]
    assert added == [True, False, True, True]
    for r in rows:
        mod.add(r)
    assert ech.rank == mod.rank == 3


def test_trace_action():
    basis = v_basis(make_index(Tableau.from_rows([[1, 2], [3]])))
    assert trace_action((1, 2, 3), basis) == 2
    assert trace_action((2, 1, 3), basis) == 0
    assert trace_action((2, 3, 1), basis) == -1
    with pytest.raises(NotInvariantError):
        SpanCoordinates([x1]).coordinates(x2)


def test_realized_character_of_small_module():
    dec = build_RnI(3, Subset({1}, 3))
    basis = dec.basis()
    chi = perm_module_character(3, Subset({1}, 3))
    got = [trace_action(permutation_of_cycle_type(mu), basis) for mu in chi.class_reps]
    assert got == list(chi.values)


def test_dependent_basis_rejected():
    with pytest.raises(ValueError):
        SpanCoordinates([x1, 2 * x1])
