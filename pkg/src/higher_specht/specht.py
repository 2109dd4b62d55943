"""Higher Specht polynomials and their variants.

``F_T^S`` is built in two stages: the sum of the distinct monomials in the
row-group orbit of the cocharge monomial (each with coefficient 1), followed
by antisymmetrization over the column group, one column at a time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence

from .combinat import (
    Permutation,
    Subset,
    Tableau,
    asl_dsl,
    compose,
    ct,
    identity,
    inverse,
    iota_tableau,
    iota_word,
    q_tilde,
    row_reading_tableau,
    rsk,
    sign,
)
from .polyring import Polynomial, e_product, elementary_e


class DescentError(ValueError):
    """Raised when ``Dsl(w)`` is not contained in the requested set ``I``."""


def transposition(i: int, j: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = j, i
    return tuple(w)


@dataclass(frozen=True)
class ColumnGroupData:
    """Generators of ``R(T)``, ``C(T)`` and the column swaps extending ``C(T)``."""

    tableau: Tableau
    row_generators: tuple[Permutation, ...]
    column_generators: tuple[Permutation, ...]
    column_swap_generators: tuple[Permutation, ...]

    @property
    def n(self) -> int:
        return self.tableau.size

    @property
    def row_group_order(self) -> int:
        return prod(factorial(p) for p in self.tableau.shape)

    @property
    def column_group_order(self) -> int:
        return prod(factorial(len(c)) for c in self.tableau.columns)

    @property
    def extended_order(self) -> int:
        lengths = [len(c) for c in self.tableau.columns]
        return self.column_group_order * prod(factorial(lengths.count(a)) for a in set(lengths))

    def column_group(self) -> Iterator[Permutation]:
        """All elements of ``C(T)``, as a direct product of column symmetric groups."""
        n = self.n
        cols = self.tableau.columns
        for choice in product(*(permutations(c) for c in cols)):
            w = list(range(1, n + 1))
            for col, image in zip(cols, choice):
                for a, b in zip(col, image):
                    w[a - 1] = b
            yield tuple(w)

    def column_permutations(self) -> Iterator[Permutation]:
        """Permutations moving whole columns onto columns of the same length."""
        n = self.n
        cols = self.tableau.columns
        by_length: dict[int, list[int]] = {}
        for j, c in enumerate(cols):
            by_length.setdefault(len(c), []).append(j)
        groups = list(by_length.values())
        for choice in product(*(permutations(g) for g in groups)):
            w = list(range(1, n + 1))
            for group, image in zip(groups, choice):
                for src, dst in zip(group, image):
                    for a, b in zip(cols[src], cols[dst]):
                        w[a - 1] = b
            yield tuple(w)

    def extended_group(self) -> Iterator[Permutation]:
        """All of ``C~(T)`` as products ``eta * sigma``."""
        col_elems = list(self.column_group())
        for eta in self.column_permutations():
            for sigma in col_elems:
                yield compose(eta, sigma)

    def sgn_tilde(self, sigma: Sequence[int]) -> int:
        """The character of ``C~(T)``: the sign of the column-group factor."""
        eta = self._column_part(sigma)
        return sign(compose(inverse(eta), sigma))

    def _column_part(self, sigma: Sequence[int]) -> Permutation:
        cols = self.tableau.columns
        index = {frozenset(c): j for j, c in enumerate(cols)}
        w = list(range(1, self.n + 1))
        for c in cols:
            image = frozenset(sigma[a - 1] for a in c)
            if image not in index:
                raise ValueError(f"{tuple(sigma)} does not lie in the extended column group")
            target = cols[index[image]]
            for a, b in zip(c, target):
                w[a - 1] = b
        return tuple(w)


def groups(T: Tableau) -> ColumnGroupData:
    n = T.size
    rows = [tuple(zip(r, r[1:])) for r in T.rows]
    cols = [tuple(zip(c, c[1:])) for c in T.columns]
    lengths = [len(c) for c in T.columns]
    swaps = []
    for j in range(len(T.columns) - 1):
        if lengths[j] == lengths[j + 1]:
            w = list(range(1, n + 1))
            for a, b in zip(T.columns[j], T.columns[j + 1]):
                w[a - 1], w[b - 1] = b, a
            swaps.append(tuple(w))
    return ColumnGroupData(
        tableau=T,
        row_generators=tuple(transposition(a, b, n) for pairs in rows for a, b in pairs),
        column_generators=tuple(transposition(a, b, n) for pairs in cols for a, b in pairs),
        column_swap_generators=tuple(swaps),
    )


def _index_cocharge(X: Tableau) -> Tableau:
    """Accept either a standard index tableau ``S`` or a cocharge tableau ``C``."""
    return X if 0 in X.reading_word else ct(X)


def cocharge_monomial(T: Tableau, X: Tableau) -> tuple[tuple[int, ...], int]:
    """Exponent vector of ``p_T^S`` and the size of its row-group stabilizer."""
    if T.shape != X.shape:
        raise ValueError(f"shape mismatch: {T.shape} vs {X.shape}")
    C = _index_cocharge(X)
    exps = [0] * T.size
    for b in T.boxes():
        exps[T[b] - 1] = C[b]
    s_stab = 1
    for r in C.rows:
        for v in set(r):
            s_stab *= factorial(r.count(v))
    return tuple(exps), s_stab


def _distinct_arrangements(values: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct permutations of a multiset, in lexicographic order."""
    items = sorted(values)
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: list[int]) -> None:
        if not remaining:
            out.append(tuple(prefix))
            return
        prev = None
        for i, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            prefix.append(v)
            rec(prefix, remaining[:i] + remaining[i + 1:])
            prefix.pop()

    rec([], items)
    return out


@lru_cache(maxsize=None)
def _signed_permutations(k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((p, sign(tuple(i + 1 for i in p))) for p in permutations(range(k)))


def row_orbit_sum(T: Tableau, exps: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Distinct monomials in the ``R(T)``-orbit of ``x^exps``, each with coefficient 1."""
    n = len(exps)
    rows = [[v - 1 for v in r] for r in T.rows]
    choices = [_distinct_arrangements([exps[i] for i in r]) for r in rows]
    orbit = {}
    for pick in product(*choices):
        new = [0] * n
        for r, vals in zip(rows, pick):
            for i, v in zip(r, vals):
                new[i] = v
        orbit[tuple(new)] = 1
    return orbit


def antisymmetrize_columns(T: Tableau, terms: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
    """Apply ``sum_{sigma in C(T)} sgn(sigma) sigma`` column by column."""
    for col in T.columns:
        if len(col) == 1:
            continue
        idx = [v - 1 for v in col]
        perms = _signed_permutations(len(idx))
        out: dict[tuple[int, ...], int] = {}
        for exps, c in terms.items():
            vals = [exps[i] for i in idx]
            if len(set(vals)) < len(vals):
                continue
            base = list(exps)
            for p, s in perms:
                for a, target in enumerate(p):
                    base[idx[target]] = vals[a]
                key = tuple(base)
                out[key] = out.get(key, 0) + s * c
        terms = {m: c for m, c in out.items() if c}
    return terms


@dataclass(frozen=True)
class SpechtPolynomial:
    poly: Polynomial
    T: Tableau
    index: Tableau
    s_stab: int
    degree: int
    w: Permutation | None = field(default=None)

    def to_json(self) -> dict:
        out = {
            "T": self.T.to_json(),
            "ct": self.index.to_json(),
            "s_stab": self.s_stab,
            "degree": self.degree,
            "polynomial": self.poly.render(),
        }
        if self.w is not None:
            out["w"] = list(self.w)
        return out


@lru_cache(maxsize=None)
def _higher_specht_poly(T: Tableau, C: Tableau) -> Polynomial:
    exps, _ = cocharge_monomial(T, C)
    terms = antisymmetrize_columns(T, row_orbit_sum(T, exps))
    poly = Polynomial(terms, T.size)
    if not poly.has_integer_coefficients():
        raise AssertionError("higher Specht polynomial with non-integral coefficients")
    return poly


def higher_specht(T: Tableau, X: Tableau) -> SpechtPolynomial:
    """``F_T^S`` (or ``F_{C,T}``) for a filling ``T`` and index tableau ``X``."""
    C = _index_cocharge(X)
    _, s_stab = cocharge_monomial(T, C)
    return SpechtPolynomial(
        poly=_higher_specht_poly(T, C),
        T=T,
        index=C,
        s_stab=s_stab,
        degree=sum(C.reading_word),
    )


def classical_specht(T: Tableau) -> Polynomial:
    """Product over columns of ``x_b - x_a`` for ``a`` above ``b``."""
    n = T.size
    x = [None] + [Polynomial.variable(i, n) for i in range(1, n + 1)]
    result = Polynomial.constant(1, n)
    for col in T.columns:
        for i in range(len(col)):
            for j in range(i + 1, len(col)):
                result = result * (x[col[j]] - x[col[i]])
    return result


def specht_quotient(T: Tableau, X: Tableau) -> Polynomial:
    """``F_T^S / F_T^{S^0}``, exact."""
    base = higher_specht(T, row_reading_tableau(T.shape)).poly
    return higher_specht(T, X).poly.exact_divide(base)


def f_w(w: Sequence[int]) -> SpechtPolynomial:
    """``F_w = F_{P(w)}^{Q~(w)}``."""
    w = tuple(w)
    P, _ = rsk(w)
    F = higher_specht(P, q_tilde(w))
    return SpechtPolynomial(F.poly, F.T, F.index, F.s_stab, F.degree, w)


# ---------------------------------------------------------------------------
# elementary symmetric multipliers


def r_values(I: Subset) -> dict[int, int]:
    """``r_i = #{j in {1..n-1} \\ I : j < i}`` for every ``i`` in ``I``."""
    return {i: sum(1 for j in range(1, i) if j not in I) for i in I}


def hvec_from_counts(values) -> tuple[int, ...]:
    """``h_r = #{values equal to r}`` for ``r >= 1``, trailing zeros dropped."""
    values = [v for v in values if v > 0]
    if not values:
        return ()
    h = [0] * max(values)
    for v in values:
        h[v - 1] += 1
    return tuple(h)


def _ascents_in(w: Sequence[int], I: Subset) -> Subset:
    """``Asl_I(w) = I \\ Dsl(w)``, raising :class:`DescentError` unless ``Dsl(w)`` lies in ``I``."""
    D = asl_dsl(w)[1]
    if not D <= I:
        raise DescentError(f"Dsl({tuple(w)}) = {sorted(D)} is not contained in I = {sorted(I)}")
    return Subset(I - D, len(w))


def f_w_I(w: Sequence[int], I: Subset) -> tuple[Polynomial, tuple[int, ...]]:
    """``F_{w,I} = F_w * prod_{i in Asl_I(w)} e_{r_i}`` with its h-vector."""
    n = len(w)
    A = _ascents_in(w, I)
    r = r_values(I)
    h = hvec_from_counts(r[i] for i in A)
    return f_w(w).poly * e_product(h, n), h


def f_hom(w: Sequence[int], I: Subset) -> tuple[Polynomial, tuple[int, ...]]:
    """Homogeneous variant: multiplier ``prod_{i in Asl_I(w)} e_i``."""
    n = len(w)
    A = _ascents_in(w, I)
    h = hvec_from_counts(A)
    return f_w(w).poly * e_product(h, n), h


# ---------------------------------------------------------------------------
# truncations of the stable polynomial


@dataclass(frozen=True)
class StabilizationCertificate:
    """Evidence gathered while embedding ``w`` into ``S_n, ..., S_N``.

    ``saturated[m]`` says whether closing the support of ``F_{w_m}`` under the
    permutations of the single-box columns of ``T_{m+1}`` reproduces
    ``F_{w_{m+1}}``; ``stabilization_index`` is the least ``m`` from which this
    holds up to ``N``.
    """

    n: int
    N: int
    degrees: tuple[int, ...]
    substitution_compatible: bool
    invariance_samples: int
    invariant: bool
    saturated: dict[int, bool]
    stabilization_index: int | None

    @property
    def ok(self) -> bool:
        return self.substitution_compatible and self.invariant and self.stabilization_index is not None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "degrees": list(self.degrees),
            "substitution_compatible": self.substitution_compatible,
            "invariance_samples": self.invariance_samples,
            "invariant": self.invariant,
            "saturated": {str(m): v for m, v in self.saturated.items()},
            "stabilization_index": self.stabilization_index,
        }


def single_box_column_entries(T: Tableau) -> list[int]:
    """Entries of ``T`` lying in columns of length 1."""
    return [c[0] for c in T.columns if len(c) == 1]


def close_under_permutations(p: Polynomial, variables: Sequence[int]) -> Polynomial | None:
    """Extend ``p`` to the polynomial invariant under permuting ``variables``.

    Returns ``None`` when two terms of ``p`` in the same orbit disagree.
    """
    idx = [v - 1 for v in variables]
    width = max(p.nvars, max(variables, default=0))
    out: dict[tuple[int, ...], int] = {}
    for m, c in p.terms.items():
        full = list(m) + [0] * (width - len(m))
        for vals in _distinct_arrangements([full[i] for i in idx]):
            for i, v in zip(idx, vals):
                full[i] = v
            key = tuple(full)
            if out.setdefault(key, c) != c:
                return None
    return Polynomial(out, width)


def stable_truncation(
    w: Sequence[int], N: int, samples: int = 50, seed: int = 0
) -> tuple[Polynomial, StabilizationCertificate]:
    """``F_{w_N}`` for ``w`` pushed into ``S_N``, with a stabilization certificate."""
    w = tuple(w)
    n = len(w)
    if N < n:
        raise ValueError(f"truncation N={N} is smaller than n={n}")
    words = [w]
    while len(words[-1]) < N:
        words.append(iota_word(words[-1]))
    polys = [f_w(u).poly for u in words]

    top = polys[-1]
    compatible = all(
        top.substitute_zero(range(len(u) + 1, N + 1)) == p for u, p in zip(words, polys)
    )

    rng = random.Random(seed)
    invariant = True
    tail = list(range(n + 1, N + 1))
    for _ in range(samples if tail else 0):
        shuffled = tail[:]
        rng.shuffle(shuffled)
        sigma = identity(n) + tuple(shuffled)
        if top.act(sigma) != top:
            invariant = False
            break

    saturated = {}
    T = rsk(w)[0]
    for m, (p, nxt) in enumerate(zip(polys, polys[1:]), start=n):
        T = iota_tableau(T)
        predicted = close_under_permutations(p, single_box_column_entries(T))
        saturated[m] = predicted is not None and predicted == nxt
    index = None
    for m in range(N - 1, n - 1, -1):
        if not saturated[m]:
            break
        index = m
    if N == n:
        index = n
    cert = StabilizationCertificate(
        n=n,
        N=N,
        degrees=tuple(p.degree() for p in polys),
        substitution_compatible=compatible,
        invariance_samples=samples if tail else 0,
        invariant=invariant,
        saturated=saturated,
        stabilization_index=index,
    )
    return top, cert
