"""Sparse exact multivariate polynomials over the rationals.

A monomial is a tuple of exponents ``(a_1, ..., a_m)`` with trailing zeros
stripped, so ``x_1^a_1 ... x_m^a_m`` has the same key in any number of
variables. Coefficients are Python ints, or ``Fraction`` when not integral.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class NonDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _trim(exps: Sequence[int]) -> Monomial:
    exps = tuple(exps)
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def mono_divides(d: Monomial, m: Monomial) -> bool:
    return len(d) <= len(m) and all(x <= y for x, y in zip(d, m))


def mono_div(m: Monomial, d: Monomial) -> Monomial:
    return _trim(tuple(x - y for x, y in zip(m, d)) + m[len(d):])


def mono_content(m: Monomial) -> tuple[int, ...]:
    """Multiset of nonzero exponents, sorted decreasingly."""
    return tuple(sorted((a for a in m if a), reverse=True))


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    """Graded lexicographic key; comparing trimmed tuples equals comparing padded ones."""
    return (sum(m), m)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], Rational] | None = None, nvars: int = 0):
        clean: dict[Monomial, Rational] = {}
        for exps, c in (terms or {}).items():
            if any(a < 0 for a in exps):
                raise ValueError(f"negative exponent in {exps}")
            m = _trim(exps)
            clean[m] = clean.get(m, 0) + c
        clean = {m: _normalize(c) for m, c in clean.items() if c != 0}
        self._init(clean, nvars)

    def _init(self, terms: dict[Monomial, Rational], nvars: int) -> None:
        self._terms = terms
        width = max((len(m) for m in terms), default=0)
        self.nvars = max(nvars, width)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Rational], nvars: int = 0) -> "Polynomial":
        """Wrap an already clean term dict without copying."""
        p = cls.__new__(cls)
        p._init(terms, nvars)
        return p

    # construction helpers

    @classmethod
    def constant(cls, c: Rational, nvars: int = 0) -> "Polynomial":
        return cls({(): c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int = 0) -> "Polynomial":
        """``x_i`` (1-based)."""
        return cls({(0,) * (i - 1) + (1,): 1}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Rational = 1, nvars: int = 0) -> "Polynomial":
        return cls({tuple(exps): coeff}, nvars)

    # inspection

    @property
    def terms(self) -> Mapping[Monomial, Rational]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Sequence[int]) -> Rational:
        return self._terms.get(_trim(exps), 0)

    def monomials(self) -> list[Monomial]:
        """Monomials in canonical (descending graded lex) order."""
        return sorted(self._terms, key=grlex_key, reverse=True)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def leading_term(self) -> tuple[Monomial, Rational]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=grlex_key)
        return m, self._terms[m]

    def uses_variable(self, i: int) -> bool:
        return any(len(m) >= i and m[i - 1] for m in self._terms)

    # arithmetic

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == ({(): other} if other != 0 else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, Rational):
            return Polynomial.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, (Polynomial, Rational)):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalize(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out, max(self.nvars, other.nvars))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, (Polynomial, Rational)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scalar_mul(self, c: Rational) -> "Polynomial":
        if c == 0:
            return Polynomial._raw({}, self.nvars)
        return Polynomial._raw({m: _normalize(a * c) for m, a in self._terms.items()}, self.nvars)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Rational):
            return self.scalar_mul(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Monomial, Rational] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        out = {m: _normalize(c) for m, c in out.items() if c}
        return Polynomial._raw(out, max(self.nvars, other.nvars))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # symmetric group action and substitutions

    def act(self, sigma: Sequence[int]) -> "Polynomial":
        """Substitute ``x_i -> x_{sigma(i)}``; indices beyond ``len(sigma)`` are fixed."""
        sigma = tuple(sigma)
        width = max(len(sigma), self.nvars)
        out: dict[Monomial, Rational] = {}
        for m, c in self._terms.items():
            new = [0] * width
            for i, a in enumerate(m):
                if a:
                    new[(sigma[i] if i < len(sigma) else i + 1) - 1] = a
            out[_trim(new)] = c
        return Polynomial._raw(out, max(self.nvars, len(sigma)))

    def substitute_zero(self, variables: Iterable[int]) -> "Polynomial":
        """Set the listed variables (1-based) to zero."""
        idx = [i - 1 for i in variables]
        out = {
            m: c
            for m, c in self._terms.items()
            if not any(i < len(m) and m[i] for i in idx)
        }
        return Polynomial._raw(out, self.nvars)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw({m: c for m, c in self._terms.items() if sum(m) == d}, self.nvars)

    def exact_divide(self, d: "Polynomial") -> "Polynomial":
        """Return ``q`` with ``self == q * d``; raise :class:`NonDivisibleError` otherwise.

        Repeatedly cancels the graded-lex leading term of the remainder against
        the leading term of ``d``. If the division is exact, every leading term
        of the remainder is divisible by ``lt(d)``, so failure is conclusive.
        """
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ld, cd = d.leading_term()
        rest = dict(self._terms)
        heap = [(-sum(m), tuple(-a for a in m), m) for m in rest]
        heapq.heapify(heap)
        quotient: dict[Monomial, Rational] = {}
        d_terms = list(d._terms.items())
        while rest:
            _, _, m = heapq.heappop(heap)
            c = rest.get(m)
            if c is None:
                continue
            if not mono_divides(ld, m):
                raise NonDivisibleError("remainder is nonzero")
            t = mono_div(m, ld)
            if isinstance(c, int) and isinstance(cd, int) and c % cd == 0:
                qc = c // cd
            else:
                qc = _normalize(Fraction(c) / cd)
            quotient[t] = qc
            for md, c2 in d_terms:
                mm = mono_mul(t, md)
                new = rest.get(mm, 0) - qc * c2
                if new:
                    if mm not in rest:
                        heapq.heappush(heap, (-sum(mm), tuple(-a for a in mm), mm))
                    rest[mm] = _normalize(new)
                else:
                    rest.pop(mm, None)
        return Polynomial._raw(quotient, max(self.nvars, d.nvars))

    # serialization

    def render(self) -> str:
        """Canonical text form, e.g. ``2 * x1 x2^2 - 1 * x3``."""
        if not self._terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self._terms[m]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = " ".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(m, 1) if a
            )
            body = f"{mag} * {factors}" if factors else f"{mag}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r})"

    _TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\s*\*?\s*)?((?:x\d+(?:\^\d+)?\s*)*)$")

    @classmethod
    def parse(cls, text: str, nvars: int = 0) -> "Polynomial":
        """Inverse of :meth:`render`; the coefficient and ``*`` may be omitted."""
        s = text.strip()
        if s == "0":
            return cls({}, nvars)
        tokens = re.split(r"\s+([+-])\s+", s)
        signs = ["+"] + tokens[1::2]
        bodies = tokens[0::2]
        if bodies[0].startswith("-"):
            signs[0], bodies[0] = "-", bodies[0][1:].strip()
        terms: dict[Monomial, Rational] = {}
        for sign, body in zip(signs, bodies):
            match = cls._TERM.match(body.strip())
            if not match or not body.strip():
                raise ValueError(f"cannot parse term {body!r}")
            coeff = Fraction(match.group(1)) if match.group(1) else Fraction(1)
            exps: dict[int, int] = {}
            for var, power in re.findall(r"x(\d+)(?:\^(\d+))?", match.group(2)):
                exps[int(var)] = exps.get(int(var), 0) + (int(power) if power else 1)
            width = max(exps, default=0)
            m = _trim(tuple(exps.get(i, 0) for i in range(1, width + 1)))
            terms[m] = terms.get(m, 0) + (coeff if sign == "+" else -coeff)
        return cls(terms, nvars)

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {
                    "exponents": list(m) + [0] * (self.nvars - len(m)),
                    "numerator": Fraction(self._terms[m]).numerator,
                    "denominator": Fraction(self._terms[m]).denominator,
                }
                for m in self.monomials()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        terms = {
            tuple(t["exponents"]): Fraction(t["numerator"], t["denominator"]) for t in data["terms"]
        }
        return cls(terms, data.get("nvars", 0))


@lru_cache(maxsize=None)
def elementary_e(r: int, nvars: int) -> Polynomial:
    """Elementary symmetric polynomial ``e_r(x_1..x_nvars)``; zero when ``r > nvars``."""
    if r < 0:
        raise ValueError("r must be non-negative")
    terms = {}
    for chosen in combinations(range(nvars), r):
        exps = [0] * nvars
        for i in chosen:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return Polynomial(terms, nvars)


def e_product(hvec: Sequence[int], nvars: int) -> Polynomial:
    """``prod_r e_r^{h_r}`` where ``hvec[r-1] = h_r``."""
    result = Polynomial.constant(1, nvars)
    for r, h in enumerate(hvec, 1):
        if h:
            result = result * elementary_e(r, nvars) ** h
    return result


def max_symmetric_divisor(p: Polynomial, hvec: Sequence[int], nvars: int, verify: bool = False) -> Polynomial:
    """The product ``prod e_r^{h_r}`` recorded for ``p``'s summand.

    With ``verify=True`` the product is also checked to divide ``p`` exactly;
    a failure there means the summand index and the polynomial disagree.
    """
    divisor = e_product(hvec, nvars)
    if verify:
        p.exact_divide(divisor)
    return divisor
