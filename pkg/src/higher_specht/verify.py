"""Exhaustive verification suites.

Each suite sweeps every object up to a size bound and returns a
:class:`VerificationReport`. When ``max_n`` is not given, the bound is the
suite default capped by the ``SPECHT_MAX_N`` environment variable.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .combinat import (
    Subset,
    Tableau,
    all_permutations,
    asi_dsi,
    asl_dsl,
    comp_n,
    conjugate_by_longest,
    cocharge,
    cocharge_content,
    cocharge_type,
    ct,
    ct_J,
    ct_inv,
    dsi,
    dsic_sets,
    evacuation,
    external_corners,
    add_box_cc,
    add_box_ev,
    add_box_tableau,
    delta,
    is_cct,
    iota_word,
    osp_perm_bijection,
    partitions,
    perm_to_osp,
    osp_to_perm,
    q_tilde,
    row_reading_tableau,
    rsk,
    standard_tableaux,
    subsets,
)
from .oracle import (
    SpanCoordinates,
    are_independent,
    kostka,
    mn_character,
    multinomial,
    perm_module_character,
    specht_module_multiplicity,
    trace_action,
)
from .polyring import NonDivisibleError, Polynomial
from .repdecomp import (
    build_RnI,
    build_Rnk,
    build_Rnk_from_hsets,
    ext_condition,
    ext_is_single_lift,
    ind_homogeneity,
    ind_t,
    make_index,
    stability_check,
    v_basis,
    verify_embInd,
    verify_embreps,
    verify_enlarge,
    verify_Rnkind,
)
from .report import VerificationReport
from .specht import (
    classical_specht,
    cocharge_monomial,
    f_w,
    groups,
    higher_specht,
    specht_quotient,
    stable_truncation,
)

DEFAULT_CAP = 6


def env_cap() -> int:
    raw = os.environ.get("SPECHT_MAX_N")
    return int(raw) if raw else DEFAULT_CAP


def resolve_max_n(max_n: int | None, default: int) -> int:
    """An explicit bound wins; otherwise the suite default capped by ``SPECHT_MAX_N``."""
    return max_n if max_n is not None else min(default, env_cap())


def _all_syt(max_n: int):
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            for S in standard_tableaux(lam):
                yield n, lam, S


# ---------------------------------------------------------------------------


def rsk_suite(max_n: int | None = None, conj_n: int | None = None) -> VerificationReport:
    """RSK descent equalities, bijectivity, evacuation, and the conjugation identity."""
    max_n = resolve_max_n(max_n, 7)
    conj_n = min(6, max_n) if conj_n is None else conj_n
    rep = VerificationReport("rsk")
    for n in range(1, max_n + 1):
        seen = set()
        for w in all_permutations(n):
            P, Q = rsk(w)
            asl, dsl = asl_dsl(w)
            asi, dsi_ = asi_dsi(Q)
            rep.check("Asl(w) = Asi(Q(w)) and Dsl(w) = Dsi(Q(w))", asl == asi and dsl == dsi_, w,
                      (asl, dsl), (asi, dsi_))
            rep.check("Asl and Dsl partition 1..n-1",
                      not (asl & dsl) and asl | dsl == set(range(1, n)), w)
            rep.check("P and Q standard of equal shape",
                      P.shape == Q.shape and P.is_standard() and Q.is_standard(), w)
            seen.add((P, Q))
            if n <= conj_n:
                rep.expect_equal("ev Q(w) = Q(w0 w w0)", rsk(conjugate_by_longest(w))[1], q_tilde(w), w)
        rep.expect_equal(f"RSK is injective on S_{n}", len(seen),
                         sum(len(standard_tableaux(lam)) ** 2 for lam in partitions(n)), n)
    for n, lam, S in _all_syt(max_n):
        E = evacuation(S)
        rep.check("ev(S) is standard of the same shape", E.shape == lam and E.is_standard(), S)
        rep.expect_equal("ev is an involution", S, evacuation(E), S)
        rep.expect_equal("Dsi(ev S) = reflected Dsi(S)", dsi(S).reflect(), dsi(E), S)
    return rep.finish()


def cocharge_suite(max_n: int | None = None) -> VerificationReport:
    """ct and its inverse, descent reflections, and Kostka counts."""
    max_n = resolve_max_n(max_n, 6)
    rep = VerificationReport("cocharge")
    for n, lam, S in _all_syt(max_n):
        C = ct(S)
        D = dsi(S)
        rep.expect_equal("ct_inv(ct(S)) = S", S, ct_inv(C), S)
        rep.check("ct(S) is a cocharge tableau", is_cct(C), S)
        rep.expect_equal("cc formula", sum(n - i for i in D), sum(C.reading_word), S)
        rep.expect_equal("cc as entry sum", cocharge(S), sum(C.reading_word), S)
        dspc, aspc = dsic_sets(C)
        rep.expect_equal("Dsp^c(ct S) = Dsi^c(S)", D.reflect(), dspc, S)
        rep.expect_equal("sum of Dsp^c is cc", cocharge(S), sum(dspc), S)
        rep.check("Dsp^c and Asp^c partition 1..n-1",
                  not (dspc & aspc) and dspc | aspc == set(range(1, n)), S)
        # with Dsp^c = {i_1 < i_2 < ...}, exactly i_g entries are at least k - g
        k = len(D) + 1
        entries = C.reading_word
        for g, i in enumerate(dspc.sorted, start=1):
            rep.expect_equal("entries above a level count Dsp^c", i, sum(1 for e in entries if e >= k - g), (S, g))
        for J in subsets(n):
            if not D <= J:
                continue
            CJ = ct_J(S, J)
            rep.expect_equal("ct_J type", J, cocharge_type(CJ), (S, J))
            rep.expect_equal("ct_J inverse", S, ct_inv(CJ), (S, J))
            round_trip = ct(ct_inv(CJ)) == CJ
            rep.expect_equal("cocharge criterion matches the round trip", round_trip, is_cct(CJ), (S, J))
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            tabs = standard_tableaux(lam)
            for J in subsets(n):
                count = sum(1 for S in tabs if dsi(S) <= J)
                rep.expect_equal("descent count equals Kostka number", kostka(lam, comp_n(J)), count, (lam, J))
            cc = {C for C in (ct(S) for S in tabs)}
            rep.expect_equal("ct is injective", len(tabs), len(cc), lam)
        _box_addition_checks(rep, n)
    return rep.finish()


def _box_addition_checks(rep: VerificationReport, n: int) -> None:
    """Set behaviour of the three box additions at every external corner."""
    for lam in partitions(n):
        for S in standard_tableaux(lam):
            E = evacuation(S)
            C = ct(S)
            for v in external_corners(lam):
                below_in_T = v[0] > S.row_of(n)
                T_plus = add_box_tableau(S, v)
                want = dsi(S).with_n(n + 1) | ({n} if below_in_T else set())
                rep.expect_equal("Dsi(T+v)", Subset(want, n + 1), dsi(T_plus), (S, v))
                below = v[0] > E.row_of(n)
                S_plus = add_box_ev(S, v)
                want_c = dsic_sets(S)[0].with_n(n + 1) | ({n} if below else set())
                rep.expect_equal("Dsi^c(S +~ v)", Subset(want_c, n + 1), dsic_sets(S_plus)[0], (S, v))
                rep.expect_equal("delta marks the corners below n", 0 if below else 1, delta(S, v), (S, v))
                C_plus = add_box_cc(C, v)
                rep.expect_equal("C +^ v = ct(S +~ v)", ct(S_plus), C_plus, (S, v))
                rep.expect_equal("Dsp^c(C +^ v)", Subset(want_c, n + 1), dsic_sets(C_plus)[0], (S, v))
                content_grows = len(cocharge_content(C_plus)) == len(cocharge_content(C)) + (1 if below else 0)
                rep.check("content gains a value exactly below n", content_grows, (S, v))
            images = [add_box_ev(S, v) for v in external_corners(lam)]
            rep.expect_equal("corner images are distinct", len(images), len(set(images)), S)


def specht_suite(max_n: int | None = None) -> VerificationReport:
    """Integrality, normalization, equivariance, divisibility and restriction."""
    max_n = resolve_max_n(max_n, 5)
    rep = VerificationReport("specht")
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            tabs = standard_tableaux(lam)
            for T in tabs:
                G = groups(T)
                base = classical_specht(T)
                for S in tabs:
                    F = higher_specht(T, S)
                    p = F.poly
                    inputs = (T, S)
                    rep.check("integer coefficients", p.has_integer_coefficients(), inputs)
                    exps, _ = cocharge_monomial(T, ct(S))
                    rep.expect_equal("seed monomial has coefficient 1", 1, p.coefficient(exps), inputs)
                    rep.check("homogeneous of degree cc(S)", p.is_homogeneous() and p.degree() == cocharge(S), inputs)
                    rep.expect_equal("same polynomial from ct(S)", p, higher_specht(T, ct(S)).poly, inputs)
                    gens = G.column_generators + G.column_swap_generators
                    for sigma in gens:
                        rep.expect_equal("sign-twisted equivariance", p.scalar_mul(G.sgn_tilde(sigma)),
                                         p.act(sigma), (T, S, sigma))
                    try:
                        q = p.exact_divide(base)
                    except NonDivisibleError:
                        rep.check("divisible by the classical Specht polynomial", False, inputs)
                        continue
                    rep.expect_equal("quotient times classical", p, q * base, inputs)
                    rep.expect_equal("quotient function", q, specht_quotient(T, S), inputs)
                    for sigma in gens:
                        rep.expect_equal("quotient is invariant", q, q.act(sigma), (T, S, sigma))
                rep.expect_equal("row-reading index gives the classical polynomial", base,
                                 higher_specht(T, row_reading_tableau(lam)).poly, T)
        for w in all_permutations(n):
            F = f_w(w).poly
            rep.expect_equal("deg F_w = sum of Dsl", sum(asl_dsl(w)[1]), max(F.degree(), 0), w)
            w_plus = iota_word(w)
            G = f_w(w_plus).poly
            rep.expect_equal("x_(n+1) = 0 restricts F_(w+) to F_w", F, G.substitute_zero([n + 1]), w)
            rep.expect_equal("degree unchanged by w -> w+", F.degree(), G.degree(), w)
            q = specht_quotient(rsk(w)[0], q_tilde(w))
            qp = specht_quotient(rsk(w_plus)[0], q_tilde(w_plus))
            rep.expect_equal("stable quotient restricts", q, qp.substitute_zero([n + 1]), w)
    return rep.finish()


def decomp_suite(max_n: int | None = None, realize_max_n: int | None = None) -> VerificationReport:
    """Realized orbit representations: independence, dimension, Kostka multiplicities."""
    max_n = resolve_max_n(max_n, 6)
    realize_max_n = max_n if realize_max_n is None else realize_max_n
    rep = VerificationReport("decomp")
    for n in range(1, max_n + 1):
        for hom in (False, True):
            stacks: dict[int, list[Polynomial]] = {}
            for I in subsets(n):
                dec = build_RnI(n, I, hom)
                alpha = comp_n(I)
                tag = {"n": n, "I": I, "hom": hom}
                rep.expect_equal("dimension is the multinomial", multinomial(alpha), dec.dimension, tag)
                shapes = Counter(s.shape for s in dec.summands)
                for lam in partitions(n):
                    rep.expect_equal("multiplicity is a Kostka number", kostka(lam, alpha), shapes.get(lam, 0),
                                     {**tag, "shape": lam})
                if n <= realize_max_n:
                    basis = dec.basis()
                    rep.check("realized basis is independent", are_independent(basis), tag)
                    stacks.setdefault(len(I) + 1, []).extend(basis)
            for k, stack in stacks.items():
                rep.check("R_(n,k) stack is independent", are_independent(stack), {"n": n, "k": k, "hom": hom})
        for k in range(1, n + 1):
            rep.check("R_(n,k) from h-sets", build_Rnk(n, k).same_summands(build_Rnk_from_hsets(n, k)),
                      {"n": n, "k": k})
        for I in subsets(n):
            words = osp_perm_bijection(I)
            rep.check("ordered set partitions and words correspond",
                      all(perm_to_osp(w, I) == p and osp_to_perm(p) == w for p, w in words.items()), I)
    return rep.finish()


def _vs_traces(S, reps_) -> list:
    """Traces of the class representatives on the span of ``{F_T^S}``."""
    from .combinat import permutation_of_cycle_type

    basis = v_basis(make_index(S, ()))
    solver = SpanCoordinates(basis)
    return [trace_action(permutation_of_cycle_type(mu), basis, solver) for mu in reps_]


def characters_suite(max_n: int | None = None) -> VerificationReport:
    """Characters of realized orbit representations against fixed-point counts."""
    max_n = resolve_max_n(max_n, 6)
    rep = VerificationReport("characters")
    for n in range(1, max_n + 1):
        reps_ = partitions(n)
        traces = {}
        for lam in reps_:
            for S in standard_tableaux(lam):
                traces[S] = _vs_traces(S, reps_)
                want = [mn_character(lam, mu) for mu in reps_]
                rep.expect_equal("trace on V^S equals the irreducible character", want, traces[S], S)
        for I in subsets(n):
            chi = perm_module_character(n, I)
            dec = build_RnI(n, I)
            got = [sum(traces[s.S][j] for s in dec.summands) for j in range(len(reps_))]
            rep.expect_equal("character of R_(n,I) equals the fixed-point character", list(chi.values), got,
                             {"n": n, "I": I})
            shapes = Counter(s.shape for s in dec.summands)
            for lam in reps_:
                rep.expect_equal("multiplicity from characters", specht_module_multiplicity(chi, lam),
                                 shapes.get(lam, 0), {"n": n, "I": I, "shape": lam})
    return rep.finish()


def characters_with_multipliers(n: int, I) -> VerificationReport:
    """Traces on the full realized basis of ``R_(n,I)``, multipliers included."""
    from .combinat import permutation_of_cycle_type

    rep = VerificationReport("characters-full")
    I = Subset(I, n)
    for hom in (False, True):
        basis = build_RnI(n, I, hom).basis()
        solver = SpanCoordinates(basis)
        chi = perm_module_character(n, I)
        got = [trace_action(permutation_of_cycle_type(mu), basis, solver) for mu in chi.class_reps]
        rep.expect_equal("full character", list(chi.values), got, {"n": n, "I": I, "hom": hom})
    return rep.finish()


def operators_suite(max_n: int | None = None, span_max_n: int | None = None) -> VerificationReport:
    """Induction, extension and enlargement identities."""
    max_n = resolve_max_n(max_n, 5)
    span_max_n = min(4, max_n) if span_max_n is None else span_max_n
    rep = VerificationReport("operators")
    for n in range(1, max_n + 1):
        realize = n <= span_max_n
        for I in subsets(n):
            verify_embInd(n, I, realize, rep)
            verify_embreps(n, I, realize, rep)
            for ell in range(1, n):
                if ell not in I:
                    verify_enlarge(n, I, ell, realize, rep)
            for s in build_RnI(n, I).summands:
                for t in range(0, n + 2):
                    rep.expect_equal("Ind_t raises degree by n exactly when t = n", t == n,
                                     ind_homogeneity(s, t), (s, t))
        for k in range(1, n + 1):
            verify_Rnkind(n, k, realize, rep)
        full = build_Rnk(n, n)
        rep.check("Ind_0 of the coinvariant decomposition", ind_t(full, 0).same_summands(build_Rnk(n + 1, n + 1)), n)
    return rep.finish()


def stability_suite(max_n: int | None = None) -> VerificationReport:
    """Ext under the bound on the largest element, plus the known counterexample."""
    max_n = resolve_max_n(max_n, 6)
    rep = VerificationReport("stability")
    for n in range(1, max_n + 1):
        for I in subsets(n):
            i_max = max(I, default=0)
            if n <= 2 * i_max:
                continue
            cert = stability_check(I, n)
            tag = {"n": n, "I": I}
            rep.check("Ext maps each summand to one summand", cert.ext_singletons, tag, None, cert.ext_images)
            rep.check("Ext agrees with first-row insertion", cert.ext_matches_iota, tag)
            rep.check("recipe generators span R_(n+1,I)", bool(cert.recipe_spans), tag)
    for n, lam, S in _all_syt(max_n):
        condition = ext_condition(S)
        if condition is not None:
            rep.check(f"Ext is a single lift ({condition} condition)", ext_is_single_lift(S), S)
    if max_n >= 6:
        S = Tableau.from_rows([[1, 3, 4], [2, 5, 6]])
        rep.check("single lift without either condition", ext_condition(S) is None and ext_is_single_lift(S), S)
    if max_n >= 3:
        cert = stability_check(Subset({2}, 3), 3, run_recipe=False)
        rep.check("I = {2}, n = 3 is unstable", not cert.ext_singletons, cert.to_json(), "a summand with two images",
                  cert.ext_images)
    if max_n >= 4:
        cert = stability_check(Subset({1, 2}, 4), 4)
        rep.check("relaxed bound: Ext still singles", cert.ext_singletons, cert.to_json())
        rep.check("relaxed bound: recipe still spans", bool(cert.recipe_spans), cert.to_json())
    return rep.finish()


def truncation_suite(n: int = 4, N: int = 8, samples: int = 50) -> VerificationReport:
    """Stable truncation certificates for every permutation of a small size."""
    rep = VerificationReport("truncation")
    for w in all_permutations(n):
        poly, cert = stable_truncation(w, N, samples=samples)
        tag = {"w": w, "N": N}
        rep.check("restriction compatibility", cert.substitution_compatible, tag)
        rep.check("invariance under permutations fixing 1..n", cert.invariant, tag)
        rep.check("stabilization index found", cert.stabilization_index is not None
                  and cert.stabilization_index <= N, tag, f"<= {N}", cert.stabilization_index)
        rep.expect_equal("degree constant along the tower", 1, len(set(cert.degrees)), tag)
    ident = (2, 1) + tuple(range(3, n + 1))
    base = f_w(ident).poly
    for M in range(n, N + 1):
        rep.expect_equal("2134... is constant in N", base, stable_truncation(ident, M, samples=0)[0], M)
    return rep.finish()


def fixtures_suite_entry() -> VerificationReport:
    from .fixtures import fixtures_suite

    return fixtures_suite()


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "rsk": rsk_suite,
    "cocharge": cocharge_suite,
    "specht": specht_suite,
    "decomp": decomp_suite,
    "characters": characters_suite,
    "operators": operators_suite,
    "stability": stability_suite,
    "truncation": truncation_suite,
    "fixtures": fixtures_suite_entry,
}

_TAKES_MAX_N = {"rsk", "cocharge", "specht", "decomp", "characters", "operators", "stability"}


def run_suite(name: str, max_n: int | None = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    return fn(max_n) if name in _TAKES_MAX_N else fn()


def run_suites(names: list[str], max_n: int | None = None, threads: int | None = None) -> list[VerificationReport]:
    """Run suites, in parallel worker processes when ``threads > 1``; results keep the input order."""
    threads = threads or os.cpu_count() or 1
    if threads <= 1 or len(names) <= 1:
        return [run_suite(name, max_n) for name in names]
    with ProcessPoolExecutor(max_workers=min(threads, len(names))) as pool:
        return list(pool.map(run_suite, names, [max_n] * len(names)))
