"""Bigraded polynomials in mu_0..mu_{m-3} and y_0..y_{m-1}.

A monomial is a pair of exponent tuples. The deck group (Z/r)^m acts on y_j
by a primitive r-th root of unity; that action is tracked only through
residues of the y-exponents, never through roots of unity.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, NamedTuple

from .linalg import as_rational


class Monomial(NamedTuple):
    mu: tuple[int, ...]
    y: tuple[int, ...]

    @classmethod
    def one(cls, m: int) -> "Monomial":
        return cls((0,) * (m - 2), (0,) * m)

    @classmethod
    def make(cls, m: int, mu: Mapping[int, int] | None = None, y: Mapping[int, int] | None = None) -> "Monomial":
        """Build from sparse exponent maps, e.g. ``Monomial.make(6, {1: 1}, {1: 4})``."""
        mu_exp = [0] * (m - 2)
        y_exp = [0] * m
        for i, e in (mu or {}).items():
            mu_exp[i] = e
        for j, e in (y or {}).items():
            y_exp[j] = e
        return cls(tuple(mu_exp), tuple(y_exp))

    @property
    def m(self) -> int:
        return len(self.y)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(a + b for a, b in zip(self.mu, other.mu)),
            tuple(a + b for a, b in zip(self.y, other.y)),
        )

    def __str__(self) -> str:
        parts = []
        for name, exps in (("mu", self.mu), ("y", self.y)):
            for i, e in enumerate(exps):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e:
                    parts.append(f"{name}{i}^{e}")
        return "*".join(parts) or "1"


def bidegree(mono: Monomial) -> tuple[int, int]:
    return sum(mono.mu), sum(mono.y)


def character(mono: Monomial, r: int) -> tuple[int, ...]:
    """Residues of the y-exponents mod r; all zero iff the monomial is invariant."""
    return tuple(e % r for e in mono.y)


def is_invariant(mono: Monomial, r: int) -> bool:
    return all(e % r == 0 for e in mono.y)


def grlex_key(mono: Monomial) -> tuple:
    return (sum(mono.mu) + sum(mono.y), mono.mu + mono.y)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for combo in combinations_with_replacement(range(parts), total):
        exps = [0] * parts
        for k in combo:
            exps[k] += 1
        yield tuple(exps)


def _y_parts(m: int, r: int, q: int, chi: tuple[int, ...]) -> list[tuple[int, ...]]:
    # y-exponent vectors of total q with y_j = chi_j (mod r): chi_j + r * k_j
    base = sum(chi)
    if q < base or (q - base) % r:
        return []
    return [tuple(c + r * k for c, k in zip(chi, ks)) for ks in _compositions((q - base) // r, m)]


def enumerate_monomials(m: int, r: int, p: int, q: int, chi: Iterable[int] | None = None) -> list[Monomial]:
    """All monomials of bidegree (p, q) with character ``chi`` (default: invariant).

    Ordered by decreasing graded-lex on the concatenated exponent vector
    ``mu + y``, so mu_0 > mu_1 > ... > y_0 > ... > y_{m-1}.
    """
    chi = tuple(c % r for c in chi) if chi is not None else (0,) * m
    if len(chi) != m:
        raise ValueError(f"character has {len(chi)} slots, expected {m}")
    if p < 0 or q < 0:
        return []
    mus = list(_compositions(p, m - 2))
    ys = _y_parts(m, r, q, chi)
    out = [Monomial(a, b) for a in mus for b in ys]
    out.sort(key=grlex_key, reverse=True)
    return out


def count_monomials(nvars: int, degree: int) -> int:
    from math import comb

    if nvars == 0:
        return int(degree == 0)
    return comb(degree + nvars - 1, nvars - 1)


class Polynomial:
    """Immutable polynomial: a map Monomial -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, c in items:
            acc[mono] = acc.get(mono, 0) + as_rational(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "Polynomial":
        return cls({mono: coeff})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Polynomial":
        return Polynomial({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        return Polynomial({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return multiply(self, other)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {bidegree(k) for k in self._terms}

    def characters(self, r: int) -> set[tuple[int, ...]]:
        return {character(k, r) for k in self._terms}

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        ordered = sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)
        return "Polynomial(" + " + ".join(f"{c}*{k}" for k, c in ordered) + ")"


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    acc: dict[Monomial, Fraction] = {}
    for a, ca in f.items():
        for b, cb in g.items():
            k = a.times(b)
            acc[k] = acc.get(k, 0) + ca * cb
    return Polynomial(acc)


def times_monomial(f: Polynomial, mono: Monomial) -> Polynomial:
    return Polynomial({a.times(mono): c for a, c in f.items()})
