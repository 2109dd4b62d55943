"""Decompositions of the orbit representations into higher Specht summands.

A summand is named by a :class:`DecompIndex` ``(shape, S, hvec)``; it is realized
as the span of ``F_T^S * prod_r e_r^{h_r}`` over all standard ``T`` of the shape.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .combinat import (
    Partition,
    Subset,
    Tableau,
    add_box_ev,
    asl_dsl,
    check_standard,
    cocharge,
    ct,
    delta,
    dsic_sets,
    dsi,
    external_corners,
    add_box_to_shape,
    iota_ev,
    iota_word,
    partitions,
    perms_with_descents_in,
    rsk,
    standard_tableaux,
    subsets,
)
from .oracle import Echelon, MonomialIndex, graded_pieces, spans_equal
from .polyring import Polynomial, e_product
from .report import VerificationReport
from .specht import f_hom, f_w, f_w_I, higher_specht, hvec_from_counts, r_values

HVector = tuple[int, ...]

_SHAPE_RANK: dict[Partition, int] = {}


def _shape_rank(lam: Partition) -> int:
    if lam not in _SHAPE_RANK:
        for i, mu in enumerate(partitions(sum(lam))):
            _SHAPE_RANK[mu] = i
    return _SHAPE_RANK[lam]


def trim_hvec(h: Iterable[int]) -> HVector:
    h = list(h)
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def hvec_add(h: HVector, t: int, amount: int = 1) -> HVector:
    """``h + amount * [t]``; adding at ``t = 0`` changes nothing."""
    if t <= 0 or amount == 0:
        return h
    out = list(h) + [0] * max(0, t - len(h))
    out[t - 1] += amount
    return trim_hvec(out)


def hvec_degree(h: HVector) -> int:
    return sum(r * x for r, x in enumerate(h, 1))


@dataclass(frozen=True)
class DecompIndex:
    """The summand ``V^S_h``."""

    shape: Partition
    S: Tableau
    hvec: HVector = ()

    @property
    def C(self) -> Tableau:
        return ct(self.S)

    @property
    def degree(self) -> int:
        return cocharge(self.S) + hvec_degree(self.hvec)

    def sort_key(self):
        return (self.S.size, _shape_rank(self.shape), self.S.reading_word, self.hvec)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "S": self.S.to_json(),
            "C": self.C.to_json(),
            "hvec": list(self.hvec),
            "degree": self.degree,
        }

    def __str__(self) -> str:
        mult = " ".join(f"e{r}^{x}" if x > 1 else f"e{r}" for r, x in enumerate(self.hvec, 1) if x)
        return f"V[{self.S}]" + (f"*{mult}" if mult else "")


def make_index(S: Tableau, hvec: Iterable[int] = ()) -> DecompIndex:
    return DecompIndex(S.shape, S, trim_hvec(hvec))


@dataclass(frozen=True)
class Decomposition:
    """An ordered multiset of summands over ``S_n``."""

    n: int
    summands: tuple[DecompIndex, ...]
    I: Subset | None = None
    hom: bool = False

    @property
    def dimension(self) -> int:
        return sum(len(standard_tableaux(s.shape)) for s in self.summands)

    def multiset(self) -> Counter:
        return Counter(self.summands)

    def same_summands(self, other: "Decomposition") -> bool:
        return self.n == other.n and self.multiset() == other.multiset()

    def canonical(self) -> "Decomposition":
        return Decomposition(self.n, tuple(sorted(self.summands, key=DecompIndex.sort_key)), self.I, self.hom)

    def realize(self) -> list[list[Polynomial]]:
        return [v_basis(s, self.n) for s in self.summands]

    def basis(self) -> list[Polynomial]:
        return [p for block in self.realize() for p in block]

    def __add__(self, other: "Decomposition") -> "Decomposition":
        if self.n != other.n:
            raise ValueError("decompositions over different symmetric groups")
        return Decomposition(self.n, self.summands + other.summands, None, self.hom and other.hom)

    def to_json(self, realize: bool = False) -> dict:
        out = {
            "n": self.n,
            "I": None if self.I is None else list(self.I.sorted),
            "hom": self.hom,
            "summands": [s.to_json() for s in self.summands],
            "dimension": self.dimension,
        }
        if realize:
            for entry, block in zip(out["summands"], self.realize()):
                entry["basis"] = [p.render() for p in block]
        return out

    def __str__(self) -> str:
        return " + ".join(str(s) for s in self.summands) or "0"


@lru_cache(maxsize=None)
def v_basis(idx: DecompIndex, n: int | None = None) -> list[Polynomial]:
    """``{F_T^S * prod e_r^{h_r} : T in SYT(shape)}``; ``n`` defaults to ``|shape|``."""
    n = idx.S.size if n is None else n
    mult = e_product(idx.hvec, n)
    return [higher_specht(T, idx.S).poly * mult for T in standard_tableaux(idx.shape)]


# ---------------------------------------------------------------------------
# R_{n,I}, R_{n,I}^hom and R_{n,k}


def h_vector(S: Tableau, I: Subset, hom: bool = False) -> HVector:
    """``h^S_I``: counts of ``r_i`` over ``Asi^c_I(S)``, or its characteristic vector when ``hom``."""
    D = dsic_sets(S)[0]
    if not D <= I:
        raise ValueError(f"Dsi^c(S) = {sorted(D)} is not contained in I = {sorted(I)}")
    A = sorted(I - D)
    if hom:
        return hvec_from_counts(A)
    r = r_values(I)
    return hvec_from_counts(r[i] for i in A)


def _all_standard(n: int) -> Iterable[Tableau]:
    for lam in partitions(n):
        yield from standard_tableaux(lam)


OVERFLOW_MODES = ("reject", "intersect", "extend")


def build_RnI(n: int, I: Iterable[int], hom: bool = False, mode: str = "reject") -> Decomposition:
    """Summands ``V^S_{h^S_I}`` over all ``S`` with ``Dsi^c(S)`` inside ``I``.

    ``I`` must lie in ``{1..n-1}``. For larger elements ``mode`` selects the
    behavior: ``reject`` (default) raises, ``intersect`` drops them, and
    ``extend`` keeps the multipliers they induce, where ``e_i`` with ``i > n``
    vanishes and kills its summand.
    """
    elems = sorted(set(I))
    overflow = [i for i in elems if i >= n or i < 1]
    if any(i < 1 for i in elems):
        raise ValueError("set elements must be positive")
    if overflow and mode not in ("intersect", "extend"):
        if mode != "reject":
            raise ValueError(f"unknown mode {mode!r}; choose from {OVERFLOW_MODES}")
        raise ValueError(f"I = {elems} is not contained in 1..{n - 1}; pass mode='intersect' or 'extend'")
    if not overflow:
        In = Subset(elems, n)
        summands = [make_index(S, h_vector(S, In, hom)) for S in _all_standard(n) if dsic_sets(S)[0] <= In]
        return Decomposition(n, tuple(summands), In, hom)
    if mode == "intersect":
        return build_RnI(n, [i for i in elems if i < n], hom)
    # extend: r_i counts all positive integers below i that are missing from I
    full = set(elems)
    summands = []
    for S in _all_standard(n):
        D = dsic_sets(S)[0]
        if not D <= full:
            continue
        A = sorted(full - D)
        vals = A if hom else [sum(1 for j in range(1, i) if j not in full) for i in A]
        h = hvec_from_counts(vals)
        if len(h) > n:
            continue
        summands.append(make_index(S, h))
    return Decomposition(n, tuple(summands), None, hom)


def build_Rnk(n: int, k: int, hom: bool = False) -> Decomposition:
    """Direct sum of ``R_{n,I}`` over all ``|I| = k - 1``, canonically ordered."""
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
    summands = [s for I in subsets(n, k - 1) for s in build_RnI(n, I, hom).summands]
    return Decomposition(n, tuple(summands), None, hom).canonical()


def h_set(S: Tableau, k: int) -> list[HVector]:
    """``H^S_k``: vectors with ``h_r = 0`` for ``r > n-k`` and ``sum h_r < k - |Dsi^c(S)|``."""
    n = S.size
    budget = k - 1 - len(dsic_sets(S)[0])
    if budget < 0:
        return []
    out = []

    def rec(r: int, left: int, acc: list[int]) -> None:
        if r > n - k:
            out.append(trim_hvec(acc))
            return
        for x in range(left + 1):
            rec(r + 1, left - x, acc + [x])

    rec(1, budget, [])
    return sorted(out)


def build_Rnk_from_hsets(n: int, k: int) -> Decomposition:
    summands = [make_index(S, h) for S in _all_standard(n) for h in h_set(S, k)]
    return Decomposition(n, tuple(summands)).canonical()


def hvec_of_subset(D: Subset, I: Subset) -> HVector:
    """Forward map ``I -> h``: counts of ``r_i`` over ``I \\ D``."""
    if not D <= I:
        raise ValueError("I must contain D")
    r = r_values(I)
    return hvec_from_counts(r[i] for i in I - D)


def subset_of_hvec(D: Subset, h: Sequence[int], k: int) -> Subset:
    """Inverse map: choose ``A`` from the gaps of ``D`` greedily.

    Walking through ``{1..n-1} \\ D`` increasingly, take ``h_0`` elements, skip
    one, take ``h_1``, skip one, and so on.
    """
    n = D.n
    size = k - 1 - len(D)
    h = list(h)
    h0 = size - sum(h)
    if size < 0 or h0 < 0 or len(trim_hvec(h)) > n - k:
        raise ValueError(f"h = {tuple(h)} is not in the H-set for |D| = {len(D)}, k = {k}")
    gaps = [j for j in range(1, n) if j not in D]
    chosen, pos = [], 0
    for r, count in enumerate([h0] + h):
        if r > 0:
            pos += 1
        chosen.extend(gaps[pos:pos + count])
        pos += count
    return Subset(set(D) | set(chosen), n)


# ---------------------------------------------------------------------------
# realizations straight from the definition


def definition_basis(n: int, I: Subset, hom: bool = False) -> list[Polynomial]:
    """``F_{w,I}`` (or its homogeneous variant) for all ``w`` with ``Dsl(w)`` inside ``I``."""
    make = f_hom if hom else f_w_I
    return [make(w, I)[0] for w in perms_with_descents_in(I)]


def genmaj_stat(w: Sequence[int], I: Subset) -> int:
    """``sum Dsl(w) + sum_{i in Asl_I(w)} r_i``, the degree of ``F_{w,I}``."""
    D = asl_dsl(w)[1]
    if not D <= I:
        raise ValueError(f"Dsl(w) = {sorted(D)} is not contained in I = {sorted(I)}")
    r = r_values(I)
    return sum(D) + sum(r[i] for i in I - D)


# ---------------------------------------------------------------------------
# enlarging I


def enlarge_I(dec: Decomposition, ell: int) -> Decomposition:
    """Pass from ``R_{n,I}`` to ``R_{n,I u {ell}}`` by the multiplier rules.

    Old summands keep ``S``. In the homogeneous case they gain ``e_ell``; in the
    other case each ``e_{r_i}`` with ``i > ell`` drops to ``e_{r_i - 1}`` and an
    extra ``e_r``, ``r = #{j not in I : j < ell}``, appears. New summands are
    those whose ``Dsi^c`` contains ``ell`` and lies in the enlarged set.
    """
    if dec.I is None:
        raise ValueError("enlarge_I needs a decomposition built for a specific I")
    I, n = dec.I, dec.n
    if ell in I or not 1 <= ell <= n - 1:
        raise ValueError(f"ell = {ell} must be in 1..{n - 1} and outside I = {sorted(I)}")
    J = I.add(ell)
    r_old = r_values(I)
    r_ell = sum(1 for j in range(1, ell) if j not in I)
    summands = []
    for s in dec.summands:
        A = sorted(I - dsic_sets(s.S)[0])
        if dec.hom:
            summands.append(make_index(s.S, hvec_add(s.hvec, ell)))
        else:
            if hvec_from_counts(r_old[i] for i in A) != s.hvec:
                raise ValueError(f"summand {s} does not match I = {sorted(I)}")
            shifted = [r_old[i] - 1 if i > ell else r_old[i] for i in A] + [r_ell]
            summands.append(make_index(s.S, hvec_from_counts(shifted)))
    for S in _all_standard(n):
        D = dsic_sets(S)[0]
        if ell in D and D <= J:
            summands.append(make_index(S, h_vector(S, J, dec.hom)))
    return Decomposition(n, tuple(summands), J, dec.hom).canonical()


# ---------------------------------------------------------------------------
# induction and extension


def ind_t(dec: Decomposition, t: int) -> Decomposition:
    """``Ind_t``: each ``V^S_h`` goes to ``sum_v V^{S+~v}_{h + delta * [t]}`` over external corners."""
    n = dec.n
    if not 0 <= t <= n + 1:
        raise ValueError(f"t must lie in 0..{n + 1}")
    out = []
    for s in dec.summands:
        for v in external_corners(s.shape):
            d = delta(s.S, v)
            out.append(make_index(add_box_ev(s.S, v), hvec_add(s.hvec, t, d)))
    I = dec.I.add(n, n + 1) if dec.I is not None else None
    return Decomposition(n + 1, tuple(out), I, dec.hom)


def ext(dec: Decomposition) -> Decomposition:
    """``Ext``: keep only the corners with ``delta = 1``, same ``h``."""
    n = dec.n
    out = [
        make_index(add_box_ev(s.S, v), s.hvec)
        for s in dec.summands
        for v in external_corners(s.shape)
        if delta(s.S, v) == 1
    ]
    I = dec.I.with_n(n + 1) if dec.I is not None else None
    return Decomposition(n + 1, tuple(out), I, dec.hom)


def ind_images(idx: DecompIndex, t: int) -> list[DecompIndex]:
    return list(ind_t(Decomposition(idx.S.size, (idx,)), t).summands)


# ---------------------------------------------------------------------------
# identity checks


def realized_spans_equal(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
    """Equality of spans of homogeneous families, compared degree by degree."""
    pa, pb = graded_pieces(a), graded_pieces(b)
    if set(pa) != set(pb):
        return False
    return all(spans_equal(pa[d], pb[d]) for d in pa)


def _first_mismatch(expected: Decomposition, got: Decomposition):
    diff = (expected.multiset() - got.multiset()) + (got.multiset() - expected.multiset())
    return next(iter(diff), None)


def _compare(report: VerificationReport, claim: str, inputs, expected: Decomposition, got: Decomposition,
             realize: bool, expected_basis=None) -> None:
    ok = expected.same_summands(got)
    report.check(claim + " [indices]", ok, inputs, str(expected.canonical()), str(got.canonical()))
    if realize and ok:
        target = expected_basis if expected_basis is not None else expected.basis()
        report.check(claim + " [spans]", realized_spans_equal(target, got.basis()), inputs)


def verify_embInd(n: int, I: Subset, realize: bool = False, report: VerificationReport | None = None) -> VerificationReport:
    """``R_{n+1,I u {n}} = Ind_{n-k} R_{n,I}`` and ``R^hom_{n+1,I u {n}} = Ind_n R^hom_{n,I}``."""
    report = report or VerificationReport("embInd")
    k = len(I) + 1
    J = I.add(n, n + 1)
    for hom, t in ((False, n - k), (True, n)):
        target = build_RnI(n + 1, J, hom)
        got = ind_t(build_RnI(n, I, hom), t)
        basis = definition_basis(n + 1, J, hom) if realize else None
        _compare(report, f"Ind_{t} R_(n,I){' hom' if hom else ''}", {"n": n, "I": I, "hom": hom},
                 target, got, realize, basis)
    return report


def verify_embreps(n: int, I: Subset, realize: bool = False, report: VerificationReport | None = None) -> VerificationReport:
    """``R_{n+1,I} = Ext R_{n,I}``, plain and homogeneous."""
    report = report or VerificationReport("embreps")
    J = I.with_n(n + 1)
    for hom in (False, True):
        target = build_RnI(n + 1, J, hom)
        got = ext(build_RnI(n, I, hom))
        basis = definition_basis(n + 1, J, hom) if realize else None
        _compare(report, f"Ext R_(n,I){' hom' if hom else ''}", {"n": n, "I": I, "hom": hom},
                 target, got, realize, basis)
    return report


def verify_Rnkind(n: int, k: int, realize: bool = False, report: VerificationReport | None = None) -> VerificationReport:
    """``R_{n+1,k+1} = Ind_{n-k} R_{n,k} + Ext R_{n,k+1}``."""
    report = report or VerificationReport("Rnkind")
    target = build_Rnk(n + 1, k + 1)
    got = ind_t(build_Rnk(n, k), n - k)
    if k + 1 <= n:
        got = got + ext(build_Rnk(n, k + 1))
    basis = None
    if realize:
        basis = [p for I in subsets(n + 1, k) for p in definition_basis(n + 1, I)]
    _compare(report, "R_(n+1,k+1) = Ind + Ext", {"n": n, "k": k}, target, got, realize, basis)
    return report


def verify_enlarge(n: int, I: Subset, ell: int, realize: bool = False,
                   report: VerificationReport | None = None) -> VerificationReport:
    """The enlargement rules against a direct construction for ``I u {ell}``."""
    report = report or VerificationReport("enlarge_I")
    J = I.add(ell)
    for hom in (False, True):
        old = build_RnI(n, I, hom)
        got = enlarge_I(old, ell)
        target = build_RnI(n, J, hom)
        basis = definition_basis(n, J, hom) if realize else None
        _compare(report, f"enlarge by {ell}{' hom' if hom else ''}", {"n": n, "I": I, "ell": ell},
                 target, got, realize, basis)
        if not hom and ell == n - 1:
            # every old multiplier is untouched and one common e_r is appended
            r = n - 1 - len(I) - 1
            scaled = [make_index(s.S, hvec_add(s.hvec, r)) for s in old.summands]
            report.check("last element: old part times one e_r", Counter(scaled) <= got.multiset(),
                         {"n": n, "I": I}, r, str(got))
    return report


def ind_homogeneity(idx: DecompIndex, t: int) -> bool:
    """Whether all images of one summand under ``Ind_t`` share the degree ``deg + n``."""
    n = idx.S.size
    return all(s.degree == idx.degree + n for s in ind_images(idx, t))


# ---------------------------------------------------------------------------
# stability


def symmetrize_pair(p: Polynomial, a: int, b: int) -> Polynomial:
    """Close ``p`` (free of ``x_b``) under ``x_a <-> x_b``: ``p + swap(p) - (terms without x_a)``."""
    width = max(p.nvars, a, b)
    swap = list(range(1, width + 1))
    swap[a - 1], swap[b - 1] = b, a
    return p + p.act(swap) - p.substitute_zero([a]).substitute_zero([b])


def extstab_generator(w: Sequence[int], I: Subset, hom: bool = False) -> tuple[Polynomial, HVector]:
    """Lift ``F_{w,I}`` to ``n+1`` variables: divide out the multiplier, symmetrize, multiply back."""
    n = len(w)
    F, h = (f_hom if hom else f_w_I)(w, I)
    base = F.exact_divide(e_product(h, n))
    P = rsk(w)[0]
    lam2 = P.shape[1] if len(P.shape) > 1 else 0
    if lam2 < P.shape[0]:
        base = symmetrize_pair(base, P[(1, lam2 + 1)], n + 1)
    # with equal first rows there is no such box and x_{n+1} is left out
    return base * e_product(h, n + 1), h


def submodule_closure(gens: Sequence[Polynomial], n: int, limit: int | None = None) -> list[Polynomial]:
    """A basis of the ``S_n``-submodule generated by ``gens`` (adjacent transpositions until stable)."""
    index = MonomialIndex(gens)
    ech = Echelon()
    basis: list[Polynomial] = []
    queue = list(gens)
    adj = []
    for i in range(1, n):
        s = list(range(1, n + 1))
        s[i - 1], s[i] = i + 1, i
        adj.append(tuple(s))
    while queue:
        p = queue.pop()
        if ech.add(index.row(p)):
            basis.append(p)
            if limit is not None and len(basis) > limit:
                break
            queue.extend(p.act(s) for s in adj)
    return basis


def ext_condition(S: Tableau) -> str | None:
    """Which sufficient condition for ``Ext V^S = V^{iota S}`` the tableau meets.

    ``"strict"`` when ``lambda_1 > lambda_2`` and ``1..lambda_2+1`` sit in the
    first row, ``"equal_rows"`` for the weaker ``lambda_1 = lambda_2`` variant
    with ``1..lambda_2`` in the first row, otherwise ``None``.
    """
    lam = S.shape
    l2 = lam[1] if len(lam) > 1 else 0
    first = set(S.rows[0])
    if lam[0] > l2 and set(range(1, l2 + 2)) <= first:
        return "strict"
    if lam[0] == l2 and set(range(1, l2 + 1)) <= first:
        return "equal_rows"
    return None


def ext_is_single_lift(S: Tableau) -> bool:
    """``Ext`` sends ``V^S`` to exactly ``V^{iota S}``."""
    images = ext(Decomposition(S.size, (make_index(S),))).summands
    return [i.S for i in images] == [iota_ev(S)]


@dataclass
class StabilityCertificate:
    I: Subset
    n: int
    i_max: int
    strict_bound: bool
    relaxed_bound: bool
    ext_images: list[int] = field(default_factory=list)
    ext_singletons: bool = False
    ext_matches_iota: bool = False
    recipe_matches_iota: bool | None = None
    recipe_spans: bool | None = None

    @property
    def stable(self) -> bool:
        return self.ext_singletons and bool(self.recipe_spans)

    def to_json(self) -> dict:
        return {
            "I": list(self.I.sorted),
            "n": self.n,
            "i_max": self.i_max,
            "strict_bound": self.strict_bound,
            "relaxed_bound": self.relaxed_bound,
            "ext_images": self.ext_images,
            "ext_singletons": self.ext_singletons,
            "ext_matches_iota": self.ext_matches_iota,
            "recipe_matches_iota": self.recipe_matches_iota,
            "recipe_spans": self.recipe_spans,
            "stable": self.stable,
        }


def stability_check(I: Subset, n: int, hom: bool = False, run_recipe: bool | None = None) -> StabilityCertificate:
    """Check how ``Ext`` and the symmetrization recipe behave on ``R_{n,I}``.

    The recipe is run whenever ``n >= 2 i_max`` unless ``run_recipe`` says otherwise.
    """
    I = I.with_n(n)
    i_max = max(I, default=0)
    cert = StabilityCertificate(I, n, i_max, n > 2 * i_max, n >= 2 * i_max)
    dec = build_RnI(n, I, hom)
    for s in dec.summands:
        cert.ext_images.append(len(ext(Decomposition(n, (s,))).summands))
    cert.ext_singletons = all(c == 1 for c in cert.ext_images)
    lifted = [make_index(iota_ev(s.S), s.hvec) for s in dec.summands]
    target = build_RnI(n + 1, I.with_n(n + 1), hom)
    cert.ext_matches_iota = Counter(lifted) == target.multiset()
    if run_recipe is None:
        run_recipe = cert.relaxed_bound
    if run_recipe:
        J = I.with_n(n + 1)
        make = f_hom if hom else f_w_I
        gens, matches = [], True
        for w in perms_with_descents_in(I):
            g, _ = extstab_generator(w, I, hom)
            gens.append(g)
            matches = matches and g == make(iota_word(w), J)[0]
        cert.recipe_matches_iota = matches
        target_basis = target.basis()
        closure = submodule_closure(gens, n + 1, limit=len(target_basis))
        cert.recipe_spans = len(closure) == len(target_basis) and realized_spans_equal(closure, target_basis)
    return cert
