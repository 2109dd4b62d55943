"""Tableau combinatorics: partitions, subsets, permutations, RSK, evacuation and cocharge.

Conventions used throughout:

* boxes are addressed ``(row, col)``, 1-based, English notation;
* a partition is a weakly decreasing tuple of positive integers;
* a permutation is its one-line word, a tuple containing ``1..n`` once each;
* subsets of ``{1, ..., n-1}`` carry their ambient ``n`` (see :class:`Subset`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations as _permutations
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Permutation = tuple[int, ...]
Box = tuple[int, int]


# ---------------------------------------------------------------------------
# partitions and compositions


def check_partition(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a partition tuple, raising ``ValueError`` if it is not one."""
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {lam}")
    return lam


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first.

    Reverse lex refines the dominance order, so this is the canonical order for
    decomposition summands.
    """

    def gen(rest: int, largest: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def conjugate(lam: Sequence[int]) -> Partition:
    """Transpose partition: column lengths of the diagram of ``lam``."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def external_corners(lam: Sequence[int]) -> list[Box]:
    """Addable boxes of ``lam``, ordered from the top row to the bottom row."""
    corners = []
    for i, part in enumerate(lam):
        if i == 0 or lam[i - 1] > part:
            corners.append((i + 1, part + 1))
    corners.append((len(lam) + 1, 1))
    return corners


def add_box_to_shape(lam: Sequence[int], v: Box) -> Partition:
    """The partition ``lam + v`` for an external corner ``v``."""
    if v not in external_corners(lam):
        raise ValueError(f"{v} is not an external corner of {tuple(lam)}")
    row = v[0]
    if row == len(lam) + 1:
        return tuple(lam) + (1,)
    return tuple(p + 1 if i == row - 1 else p for i, p in enumerate(lam))


# ---------------------------------------------------------------------------
# subsets of {1, ..., n-1}


class Subset(frozenset):
    """A subset of ``{1, ..., n-1}`` that remembers its ambient ``n``.

    Behaves as a ``frozenset`` of ints (equality ignores ``n``); the reflection
    ``i -> n - i`` and complementation need the ambient size and use ``self.n``.
    """

    n: int

    def __new__(cls, elements: Iterable[int] = (), n: int = 0) -> "Subset":
        obj = super().__new__(cls, (int(e) for e in elements))
        bad = [e for e in obj if not 1 <= e <= n - 1]
        if bad:
            raise ValueError(f"elements {sorted(bad)} outside 1..{n - 1}")
        obj.n = n
        return obj

    def __reduce__(self):
        return (Subset, (tuple(sorted(self)), self.n))

    def __repr__(self) -> str:
        return f"Subset({sorted(self)}, n={self.n})"

    @property
    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self))

    @property
    def k(self) -> int:
        """Number of blocks of the associated compositions, ``|I| + 1``."""
        return len(self) + 1

    def reflect(self) -> "Subset":
        """``{n - i : i in self}``."""
        return Subset((self.n - i for i in self), self.n)

    def complement(self) -> "Subset":
        return Subset((i for i in range(1, self.n) if i not in self), self.n)

    def add(self, element: int, n: int | None = None) -> "Subset":
        """Union with ``{element}``, optionally in a larger ambient set."""
        return Subset(set(self) | {element}, self.n if n is None else n)

    def with_n(self, n: int) -> "Subset":
        return Subset(self, n)

    def to_json(self) -> dict:
        return {"n": self.n, "elements": list(self.sorted)}


def subsets(n: int, size: int | None = None) -> list[Subset]:
    """All subsets of ``{1..n-1}`` (of a given size if requested), sorted by (size, elements)."""
    from itertools import combinations

    sizes = range(n) if size is None else [size]
    return [Subset(c, n) for s in sizes for c in combinations(range(1, n), s)]


def comp_n(J: Subset) -> Composition:
    """Differences of ``0 < j_1 < ... < j_{k-1} < n``."""
    cuts = (0,) + J.sorted + (J.n,)
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def comp_n_inv(alpha: Sequence[int]) -> Subset:
    """Partial sums of ``alpha`` (all but the last), inverse of :func:`comp_n`."""
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {tuple(alpha)}")
    total, cuts = 0, []
    for a in alpha[:-1]:
        total += a
        cuts.append(total)
    return Subset(cuts, sum(alpha))


# ---------------------------------------------------------------------------
# permutations


def check_permutation(word: Iterable[int]) -> Permutation:
    w = tuple(int(x) for x in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation word: {w}")
    return w


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    """``sigma o tau`` as maps: ``i -> sigma(tau(i))``."""
    return tuple(sigma[t - 1] for t in tau)


def inverse(w: Sequence[int]) -> Permutation:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return tuple(inv)


def sign(w: Sequence[int]) -> int:
    seen, s = set(), 1
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = w[i - 1]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def cycle_type(w: Sequence[int]) -> Partition:
    seen, lengths = set(), []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = w[i - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def permutation_of_cycle_type(mu: Sequence[int]) -> Permutation:
    """A representative with consecutive cycles ``(1..mu_1)(mu_1+1..)...``."""
    w, start = [], 1
    for length in mu:
        block = list(range(start, start + length))
        w.extend(block[1:] + block[:1])
        start += length
    return tuple(w)


def all_permutations(n: int) -> Iterator[Permutation]:
    """``S_n`` in lexicographic order of one-line words."""
    return _permutations(range(1, n + 1))


def conjugate_by_longest(w: Sequence[int]) -> Permutation:
    """``w0 w w0`` in one-line notation."""
    n = len(w)
    return tuple(n + 1 - w[n - i] for i in range(1, n + 1))


def iota_word(w: Sequence[int]) -> Permutation:
    """``w+``: the image of ``w`` in ``S_{n+1}`` fixing ``n+1``."""
    return tuple(w) + (len(w) + 1,)


def asl_dsl(w: Sequence[int]) -> tuple[Subset, Subset]:
    """Ascending and descending locations of a one-line word."""
    n = len(w)
    asc = [i for i in range(1, n) if w[i] > w[i - 1]]
    desc = [i for i in range(1, n) if w[i] < w[i - 1]]
    return Subset(asc, n), Subset(desc, n)


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class Tableau:
    """A filling of a Ferrers diagram, stored row by row.

    The same class holds standard tableaux (entries ``1..n``), cocharge
    tableaux (non-negative entries) and arbitrary fillings used as ``T`` in the
    Specht construction; the predicates below tell them apart.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if any(len(r) == 0 for r in rows):
            raise ValueError("tableau rows must be non-empty")
        check_partition(len(r) for r in rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    @cached_property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def __getitem__(self, box: Box) -> int:
        return self.rows[box[0] - 1][box[1] - 1]

    def boxes(self) -> Iterator[Box]:
        for i, r in enumerate(self.rows, 1):
            for j in range(1, len(r) + 1):
                yield (i, j)

    @cached_property
    def reading_word(self) -> tuple[int, ...]:
        """Entries row by row, top to bottom; used for canonical ordering."""
        return tuple(x for r in self.rows for x in r)

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))
        )

    @cached_property
    def _locations(self) -> dict[int, Box]:
        return {self[b]: b for b in self.boxes()}

    def box_of(self, value: int) -> Box:
        """``v_T(value)`` for a tableau with distinct entries."""
        return self._locations[value]

    def row_of(self, value: int) -> int:
        return self._locations[value][0]

    def col_of(self, value: int) -> int:
        return self._locations[value][1]

    def is_standard(self) -> bool:
        if sorted(self.reading_word) != list(range(1, self.size + 1)):
            return False
        return self._rows_increase(strict=True) and self._cols_increase()

    def is_semistandard(self) -> bool:
        return self._rows_increase(strict=False) and self._cols_increase()

    def _rows_increase(self, strict: bool) -> bool:
        for r in self.rows:
            for a, b in zip(r, r[1:]):
                if a > b or (strict and a == b):
                    return False
        return True

    def _cols_increase(self) -> bool:
        return all(all(a < b for a, b in zip(c, c[1:])) for c in self.columns)

    def with_box(self, v: Box, value: int) -> "Tableau":
        """Add ``value`` at the external corner ``v``."""
        add_box_to_shape(self.shape, v)
        rows = [list(r) for r in self.rows]
        if v[0] == len(rows) + 1:
            rows.append([value])
        else:
            rows[v[0] - 1].append(value)
        return Tableau.from_rows(rows)

    def map_entries(self, f) -> "Tableau":
        return Tableau.from_rows([f(x) for x in r] for r in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return " / ".join(" ".join(str(x) for x in r) for r in self.rows)


def check_standard(T: Tableau) -> Tableau:
    if not T.is_standard():
        raise ValueError(f"not a standard tableau: {T}")
    return T


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """``SYT(shape)``, sorted lexicographically by reading word."""
    shape = check_partition(shape)
    n = sum(shape)
    found: list[tuple[tuple[int, ...], ...]] = []

    def fill(rows: list[list[int]], lengths: list[int], m: int) -> None:
        # place m, m-1, ..., 1 by removing outer corners
        if m == 0:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(lengths):
            if length == 0:
                continue
            if i + 1 < len(lengths) and lengths[i + 1] == length:
                continue
            rows[i][length - 1] = m
            lengths[i] -= 1
            fill(rows, lengths, m - 1)
            lengths[i] += 1

    fill([[0] * p for p in shape], list(shape), n)
    return tuple(sorted((Tableau(r) for r in found), key=lambda t: t.reading_word))


def row_tableau(n: int) -> Tableau:
    return Tableau(((tuple(range(1, n + 1))),))


def row_reading_tableau(shape: Sequence[int]) -> Tableau:
    """``S^0``: entries ``1..n`` filled row by row."""
    rows, k = [], 1
    for p in shape:
        rows.append(tuple(range(k, k + p)))
        k += p
    return Tableau(tuple(rows))


# ---------------------------------------------------------------------------
# RSK and evacuation


def rsk(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK: return ``(P(w), Q(w))``."""
    check_permutation(w)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(w, 1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            r = P[row]
            # leftmost entry larger than x is bumped
            pos = next((j for j, y in enumerate(r) if y > x), None)
            if pos is None:
                r.append(x)
                Q[row].append(step)
                break
            r[pos], x = x, r[pos]
            row += 1
    return Tableau.from_rows(P), Tableau.from_rows(Q)


def _slide_out_corner(rows: list[list[int]]) -> Box:
    """Delete the (1,1) entry and slide the hole outward; return the vacated box."""
    i, j = 0, 0
    while True:
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[i][j] = right
            j += 1
        else:
            rows[i][j] = below
            i += 1
    del rows[i][j]
    if not rows[i]:
        del rows[i]
    return (i + 1, j + 1)


def evacuation(S: Tableau) -> Tableau:
    """Schützenberger evacuation by repeated delta slides.

    Each slide removes the smallest remaining entry; the box vacated by the
    ``i``-th slide receives ``n + 1 - i``.
    """
    n = S.size
    rows = [list(r) for r in S.rows]
    out = [[0] * p for p in S.shape]
    for i in range(1, n + 1):
        r, c = _slide_out_corner(rows)
        out[r - 1][c - 1] = n + 1 - i
    return Tableau.from_rows(out)


def q_tilde(w: Sequence[int]) -> Tableau:
    """Modified recording tableau ``ev Q(w)``."""
    return evacuation(rsk(w)[1])


# ---------------------------------------------------------------------------
# descents and cocharge


def asi_dsi(S: Tableau) -> tuple[Subset, Subset]:
    """Ascending and descending indices: ``i`` descends when ``i+1`` sits in a lower row."""
    n = S.size
    desc = [i for i in range(1, n) if S.row_of(i + 1) > S.row_of(i)]
    asc = [i for i in range(1, n) if S.row_of(i + 1) <= S.row_of(i)]
    return Subset(asc, n), Subset(desc, n)


def dsi(S: Tableau) -> Subset:
    return asi_dsi(S)[1]


def cocharge(S: Tableau) -> int:
    n = S.size
    return sum(n - i for i in dsi(S))


def ct_J(S: Tableau, J: Subset) -> Tableau:
    """Generalized cocharge tableau: the box of ``p`` gets ``#{j in J : j < p}``."""
    if not dsi(S) <= J:
        raise ValueError(f"Dsi(S) = {sorted(dsi(S))} is not contained in J = {sorted(J)}")
    cuts = sorted(J)
    return S.map_entries(lambda p: sum(1 for j in cuts if j < p))


def ct(S: Tableau) -> Tableau:
    return ct_J(S, dsi(S))


def cocharge_content(C: Tableau) -> Composition:
    """Multiplicities of ``0, 1, ..., k-1`` in ``C``; raises if some value is skipped."""
    values = C.reading_word
    if not values:
        return ()
    top = max(values)
    counts = [0] * (top + 1)
    for x in values:
        if x < 0:
            raise ValueError("cocharge tableau entries must be non-negative")
        counts[x] += 1
    if any(c == 0 for c in counts):
        raise ValueError(f"content of {C} skips a value")
    return tuple(counts)


def is_generalized_cocharge(C: Tableau) -> bool:
    try:
        cocharge_content(C)
    except ValueError:
        return False
    return C.is_semistandard()


def cocharge_type(C: Tableau) -> Subset:
    """The set ``J`` with ``comp_n(J)`` equal to the content of ``C``."""
    return comp_n_inv(cocharge_content(C))


def ct_inv(C: Tableau) -> Tableau:
    """Standardization: number boxes holding 0, then 1, ..., each value left to right."""
    if not is_generalized_cocharge(C):
        raise ValueError(f"not a generalized cocharge tableau: {C}")
    order = sorted(C.boxes(), key=lambda b: (C[b], b[1]))
    out = [[0] * p for p in C.shape]
    for label, (r, c) in enumerate(order, 1):
        out[r - 1][c - 1] = label
    return Tableau.from_rows(out)


def is_cct(C: Tableau) -> bool:
    """Whether the leftmost ``h`` always has an ``h-1`` in a strictly higher row."""
    if not is_generalized_cocharge(C):
        return False
    leftmost: dict[int, Box] = {}
    highest: dict[int, int] = {}
    for b in C.boxes():
        h = C[b]
        if h not in leftmost or b[1] < leftmost[h][1]:
            leftmost[h] = b
        highest[h] = min(highest.get(h, b[0]), b[0])
    return all(highest[h - 1] < leftmost[h][0] for h in leftmost if h > 0)


@lru_cache(maxsize=None)
def cocharge_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """``CCT(shape)``, sorted lexicographically by reading word."""
    return tuple(sorted((ct(S) for S in standard_tableaux(shape)), key=lambda t: t.reading_word))


def dsic_sets(x: Tableau) -> tuple[Subset, Subset]:
    """Reflected descent/ascent sets ``(Dsi^c, Asi^c)`` or ``(Dsp^c, Asp^c)``.

    A standard tableau uses its descent set; a cocharge tableau (recognized by a
    zero entry) uses its type.
    """
    if 0 in x.reading_word:
        if not is_cct(x):
            raise ValueError(f"not a cocharge tableau in CCT: {x}")
        D = cocharge_type(x).reflect()
    else:
        D = dsi(check_standard(x)).reflect()
    return D, D.complement()


# ---------------------------------------------------------------------------
# box additions


def add_box_ev(S: Tableau, v: Box) -> Tableau:
    """``S +~ v = ev(ev S + v)``."""
    return evacuation(evacuation(S).with_box(v, S.size + 1))


def add_box_cc(C: Tableau, v: Box) -> Tableau:
    """``C +^ v = ct(ct^{-1}(C) +~ v)``."""
    return ct(add_box_ev(ct_inv(C), v))


def add_box_tableau(T: Tableau, v: Box) -> Tableau:
    """``T + v``: put ``n+1`` in the box ``v``."""
    return T.with_box(v, T.size + 1)


def first_row_corner(shape: Sequence[int]) -> Box:
    return (1, shape[0] + 1)


def iota_tableau(T: Tableau) -> Tableau:
    return add_box_tableau(T, first_row_corner(T.shape))


def iota_ev(S: Tableau) -> Tableau:
    return add_box_ev(S, first_row_corner(S.shape))


def iota_cc(C: Tableau) -> Tableau:
    return add_box_cc(C, first_row_corner(C.shape))


def delta(S: Tableau, v: Box) -> int:
    """0 when ``v`` lies in a row strictly below the row of ``n`` in ``ev S``, else 1."""
    return 0 if v[0] > evacuation(S).row_of(S.size) else 1


# ---------------------------------------------------------------------------
# ordered set partitions


@dataclass(frozen=True)
class OrderedSetPartition:
    """An ordered sequence of disjoint non-empty blocks covering ``{1..n}``."""

    blocks: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        blocks = tuple(frozenset(int(x) for x in b) for b in self.blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be non-empty")
        union = [x for b in blocks for x in b]
        if sorted(union) != list(range(1, len(union) + 1)):
            raise ValueError("blocks must partition {1..n}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def subset(self) -> Subset:
        """The set ``I`` with ``comp_n(I)`` equal to the block sizes."""
        return comp_n_inv([len(b) for b in self.blocks])

    def act(self, sigma: Sequence[int]) -> "OrderedSetPartition":
        return OrderedSetPartition(tuple(frozenset(sigma[x - 1] for x in b) for b in self.blocks))

    def to_json(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    def __str__(self) -> str:
        return "(" + ",".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks) + ")"


def osp_to_perm(p: OrderedSetPartition) -> Permutation:
    """Sort each block and concatenate."""
    return tuple(x for b in p.blocks for x in sorted(b))


def perm_to_osp(w: Sequence[int], I: Subset) -> OrderedSetPartition:
    """Cut ``w`` after the positions in ``I``; requires ``Dsl(w)`` inside ``I``."""
    if not asl_dsl(w)[1] <= I:
        raise ValueError(f"Dsl({tuple(w)}) is not contained in {sorted(I)}")
    cuts = (0,) + I.sorted + (len(w),)
    return OrderedSetPartition(tuple(frozenset(w[a:b]) for a, b in zip(cuts, cuts[1:])))


def perms_with_descents_in(I: Subset) -> list[Permutation]:
    """All ``w`` with ``Dsl(w)`` contained in ``I``, lexicographically."""
    return [w for w in all_permutations(I.n) if asl_dsl(w)[1] <= I]


def osp_perm_bijection(I: Subset) -> dict[OrderedSetPartition, Permutation]:
    return {perm_to_osp(w, I): w for w in perms_with_descents_in(I)}


def star_insert(p: OrderedSetPartition) -> OrderedSetPartition:
    """Add ``n+1`` to the last block."""
    *head, last = p.blocks
    return OrderedSetPartition(tuple(head) + (last | {p.n + 1},))


def bar_insert(p: OrderedSetPartition) -> OrderedSetPartition:
    """Append the singleton block ``{n+1}``."""
    return OrderedSetPartition(p.blocks + (frozenset({p.n + 1}),))
