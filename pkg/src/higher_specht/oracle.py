"""Brute-force ground truth that never touches the Specht construction.

Ordered set partitions, permutation-module characters, Kostka numbers by
tableau enumeration, Murnaghan-Nakayama characters, and exact linear algebra
over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, gcd, prod
from typing import Iterable, Sequence

from .combinat import (
    OrderedSetPartition,
    Partition,
    Subset,
    comp_n,
    cycle_type,
    partitions,
    permutation_of_cycle_type,
)
from .polyring import Monomial, Polynomial, grlex_key


class NotInvariantError(ValueError):
    """The acting permutation moves the span outside itself."""


# ---------------------------------------------------------------------------
# ordered set partitions and permutation modules


def enumerate_OP(n: int, I: Subset) -> list[OrderedSetPartition]:
    """Ordered set partitions of ``{1..n}`` with block sizes ``comp_n(I)``."""
    sizes = comp_n(I) if n else ()
    out: list[OrderedSetPartition] = []

    def rec(remaining: frozenset, blocks: list[frozenset], depth: int) -> None:
        if depth == len(sizes):
            out.append(OrderedSetPartition(tuple(blocks)))
            return
        for block in combinations(sorted(remaining), sizes[depth]):
            b = frozenset(block)
            rec(remaining - b, blocks + [b], depth + 1)

    rec(frozenset(range(1, n + 1)), [], 0)
    return out


def multinomial(parts: Sequence[int]) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


@dataclass(frozen=True)
class CharacterVector:
    """Class function on ``S_n``, one value per cycle type."""

    n: int
    class_reps: tuple[Partition, ...]
    values: tuple

    def __getitem__(self, mu: Sequence[int]) -> int:
        return self.values[self.class_reps.index(tuple(mu))]

    def to_json(self) -> dict:
        return {",".join(map(str, mu)): int(v) if Fraction(v).denominator == 1 else str(v)
                for mu, v in zip(self.class_reps, self.values)}


def class_size(mu: Sequence[int]) -> int:
    n = sum(mu)
    z = 1
    for part in set(mu):
        m = list(mu).count(part)
        z *= part**m * factorial(m)
    return factorial(n) // z


def fixed_point_count(sigma: Sequence[int], items: Iterable[OrderedSetPartition]) -> int:
    return sum(1 for p in items if p.act(sigma) == p)


def perm_module_character(n: int, I: Subset) -> CharacterVector:
    """Character of ``Q[OP_{n,I}]``: fixed-point counts on class representatives."""
    ops = enumerate_OP(n, I)
    reps = partitions(n)
    return CharacterVector(
        n, reps, tuple(fixed_point_count(permutation_of_cycle_type(mu), ops) for mu in reps)
    )


def character_from_function(n: int, f) -> CharacterVector:
    reps = partitions(n)
    return CharacterVector(n, reps, tuple(f(permutation_of_cycle_type(mu)) for mu in reps))


def is_class_function_on(n: int, f, samples: Iterable[Sequence[int]]) -> bool:
    """Spot-check that ``f`` agrees with its value on the class representative."""
    reps = {}
    for sigma in samples:
        mu = cycle_type(sigma)
        if mu not in reps:
            reps[mu] = f(permutation_of_cycle_type(mu))
        if f(sigma) != reps[mu]:
            return False
    return True


# ---------------------------------------------------------------------------
# Kostka numbers and irreducible characters


def _horizontal_strips(shape: Partition, size: int) -> list[Partition]:
    """Partitions ``nu`` containing ``shape`` with ``nu / shape`` a horizontal strip of ``size`` boxes."""
    rows = list(shape) + [0]
    out = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(rows):
            if left == 0:
                out.append(tuple(p for p in acc if p))
            return
        cap = left if i == 0 else min(left, shape[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            rec(i + 1, left - add, acc + [rows[i] + add])

    rec(0, size, [])
    return out


@lru_cache(maxsize=None)
def kostka(lam: Partition, alpha: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``alpha``.

    Counts chains of horizontal strips: the boxes holding value ``h`` form a
    horizontal strip of size ``alpha[h]``.
    """
    lam, alpha = tuple(lam), tuple(alpha)
    if sum(lam) != sum(alpha):
        raise ValueError("shape and content have different sizes")

    @lru_cache(maxsize=None)
    def count(shape: Partition, depth: int) -> int:
        if depth == len(alpha):
            return 1 if shape == lam else 0
        total = 0
        for nu in _horizontal_strips(shape, alpha[depth]):
            if len(nu) <= len(lam) and all(a <= b for a, b in zip(nu, lam)):
                total += count(nu, depth + 1)
        return total

    return count((), 0)


def _beta_set(lam: Sequence[int], length: int) -> list[int]:
    lam = list(lam) + [0] * (length - len(lam))
    return [lam[i] + length - 1 - i for i in range(length)]


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character ``chi^lam`` at cycle type ``mu`` (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError("sizes differ")
    if not mu:
        return 1
    r, rest = mu[0], tuple(mu[1:])
    length = len(lam)
    beta = _beta_set(lam, length)
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in beads:
            height = sum(1 for c in beads if b - r < c < b)
            new = sorted((beads - {b}) | {b - r}, reverse=True)
            nu = tuple(p for p in (new[i] - (length - 1 - i) for i in range(length)) if p)
            total += (-1) ** height * mn_character(nu, rest)
    return total


def irreducible_character(lam: Partition) -> CharacterVector:
    n = sum(lam)
    reps = partitions(n)
    return CharacterVector(n, reps, tuple(mn_character(tuple(lam), mu) for mu in reps))


def inner_product(chi: CharacterVector, psi: CharacterVector) -> Fraction:
    total = sum(class_size(mu) * a * b for mu, a, b in zip(chi.class_reps, chi.values, psi.values))
    return Fraction(total, factorial(chi.n))


def specht_module_multiplicity(chi: CharacterVector, lam: Partition) -> int:
    m = inner_product(chi, irreducible_character(tuple(lam)))
    if m.denominator != 1:
        raise ValueError(f"non-integral multiplicity {m}: not a character")
    return int(m)


def regular_character(n: int) -> CharacterVector:
    reps = partitions(n)
    return CharacterVector(n, reps, tuple(factorial(n) if mu == (1,) * n else 0 for mu in reps))


# ---------------------------------------------------------------------------
# exact linear algebra on polynomials


class Echelon:
    """Incremental fraction-free row echelon form over the integers.

    Rows are sparse ``{column: int}`` dicts; the pivot of a row is its smallest
    column. Rational input is cleared of denominators first, so the rank is
    exactly the rank over ``Q``.
    """

    def __init__(self) -> None:
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        row = _integral(row)
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                return row
            a, b = piv[col], row[col]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {c: v * fa for c, v in row.items()}
            for c, v in piv.items():
                x = new.get(c, 0) - v * fb
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _primitive(new)
        return row

    def add(self, row: dict[int, int]) -> bool:
        """Insert ``row``; return whether the rank grew."""
        rest = self.reduce(row)
        if not rest:
            return False
        self.pivots[min(rest)] = rest
        return True


class ModularEchelon:
    """Echelon form modulo a prime; rank mod ``p`` never exceeds the rational rank."""

    def __init__(self, p: int = 2_147_483_647) -> None:
        self.p = p
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: dict[int, int]) -> bool:
        p = self.p
        row = {c: v % p for c, v in _integral(row).items() if v % p}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                self.pivots[col] = {c: v * inv % p for c, v in row.items()}
                return True
            f = row[col]
            for c, v in piv.items():
                x = (row.get(c, 0) - f * v) % p
                if x:
                    row[c] = x
                else:
                    row.pop(c, None)
        return False


def _integral(row: dict[int, object]) -> dict[int, int]:
    if all(isinstance(v, int) for v in row.values()):
        return dict(row)
    fr = {c: Fraction(v) for c, v in row.items()}
    lcm = 1
    for v in fr.values():
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    return {c: int(v * lcm) for c, v in fr.items()}


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class MonomialIndex:
    """Assigns column numbers to monomials in ascending graded-lex order on demand."""

    def __init__(self, polys: Iterable[Polynomial] = ()) -> None:
        monos = {m for p in polys for m in p.terms}
        self.cols = {m: i for i, m in enumerate(sorted(monos, key=grlex_key))}

    def row(self, p: Polynomial) -> dict[int, object]:
        cols = self.cols
        out = {}
        for m, c in p.terms.items():
            if m not in cols:
                cols[m] = len(cols)
            out[cols[m]] = c
        return out


def span_rank(polys: Sequence[Polynomial]) -> int:
    """Exact rank of the span of ``polys`` over ``Q``."""
    index = MonomialIndex(polys)
    ech = Echelon()
    for p in polys:
        ech.add(index.row(p))
    return ech.rank


def are_independent(polys: Sequence[Polynomial]) -> bool:
    """Exact linear independence test.

    Full rank modulo a prime certifies independence over ``Q`` (a nonzero
    maximal minor mod ``p`` is nonzero over the integers); otherwise the
    exact rank decides.
    """
    index = MonomialIndex(polys)
    mod = ModularEchelon()
    rows = [index.row(p) for p in polys]
    if all(mod.add(r) for r in rows):
        return True
    return span_rank(polys) == len(polys)


def graded_pieces(polys: Iterable[Polynomial]) -> dict[int, list[Polynomial]]:
    """Split a list of homogeneous polynomials by degree (raises on inhomogeneous input)."""
    out: dict[int, list[Polynomial]] = {}
    for p in polys:
        if not p.is_homogeneous():
            raise ValueError("expected homogeneous polynomials")
        out.setdefault(max(p.degree(), 0), []).append(p)
    return out


def spans_equal(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
    """Subspace equality via ``rank(a) == rank(b) == rank(a + b)``."""
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb and span_rank(list(a) + list(b)) == ra


class SpanCoordinates:
    """Coordinates of polynomials in a fixed linearly independent basis."""

    def __init__(self, basis: Sequence[Polynomial]) -> None:
        self.size = len(basis)
        self.index = MonomialIndex(basis)
        # each pivot row carries (polynomial part, combination of basis vectors)
        self.rows: dict[int, tuple[dict[int, Fraction], dict[int, Fraction]]] = {}
        for k, p in enumerate(basis):
            vec = {c: Fraction(v) for c, v in self.index.row(p).items()}
            combo = {k: Fraction(1)}
            vec, combo = self._reduce(vec, combo)
            if not vec:
                raise ValueError("basis is linearly dependent")
            col = min(vec)
            lead = vec[col]
            self.rows[col] = (
                {c: v / lead for c, v in vec.items()},
                {c: v / lead for c, v in combo.items()},
            )

    def _reduce(self, vec, combo):
        for col in sorted(self.rows):
            f = vec.get(col)
            if not f:
                continue
            rvec, rcombo = self.rows[col]
            for c, v in rvec.items():
                x = vec.get(c, 0) - f * v
                if x:
                    vec[c] = x
                else:
                    vec.pop(c, None)
            for c, v in rcombo.items():
                x = combo.get(c, 0) - f * v
                if x:
                    combo[c] = x
                else:
                    combo.pop(c, None)
        return vec, combo

    def coordinates(self, p: Polynomial) -> list[Fraction]:
        """Solve ``p = sum c_k basis[k]``; raise :class:`NotInvariantError` if impossible."""
        cols = self.index.cols
        vec = {}
        for m, c in p.terms.items():
            if m not in cols:
                raise NotInvariantError("polynomial leaves the span")
            vec[cols[m]] = Fraction(c)
        vec, combo = self._reduce(vec, {})
        if vec:
            raise NotInvariantError("polynomial leaves the span")
        return [-combo.get(k, Fraction(0)) for k in range(self.size)]


def trace_action(sigma: Sequence[int], basis: Sequence[Polynomial], solver: SpanCoordinates | None = None) -> Fraction:
    """Trace of ``p -> act(sigma, p)`` on the span of a linearly independent ``basis``."""
    solver = solver or SpanCoordinates(basis)
    return sum(solver.coordinates(b.act(sigma))[k] for k, b in enumerate(basis))
