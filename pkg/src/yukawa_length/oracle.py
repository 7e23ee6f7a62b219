"""Independent recomputation of invariant Jacobian-ring dimensions.

Shares nothing with the main pipeline beyond the parameter types: the
generators come from symbolically differentiating F rather than from the
hand-written relation list, monomials are enumerated by a separate routine in
the opposite order, and ranks are computed by fraction-free integer
elimination (dense Bareiss for small pieces, sparse integer rows otherwise).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Sequence

# exponent vector (mu_0..mu_{m-3}, y_0..y_{m-1}) -> coefficient
Poly = dict[tuple[int, ...], Fraction]

DENSE_LIMIT = 100


def _var(nvars: int, k: int, e: int = 1) -> tuple[int, ...]:
    return tuple(e if i == k else 0 for i in range(nvars))


def potential(m: int, r: int, a: Sequence[Fraction]) -> Poly:
    """F = sum_i mu_i (y_{i+2}^r - y_0^r - c_i y_1^r) with c = (1, a_1, ..., a_{m-3})."""
    nv = 2 * m - 2
    c = [Fraction(1)] + [Fraction(x) for x in a]
    F: Poly = {}
    for i in range(m - 2):
        mu = _var(nv, i)
        for j, coeff in ((i + 2, Fraction(1)), (0, Fraction(-1)), (1, -c[i])):
            y = _var(nv, m - 2 + j, r)
            key = tuple(u + w for u, w in zip(mu, y))
            F[key] = F.get(key, 0) + coeff
    return F


def partial(f: Poly, k: int) -> Poly:
    out: Poly = {}
    for exp, coeff in f.items():
        if exp[k]:
            e = list(exp)
            e[k] -= 1
            out[tuple(e)] = out.get(tuple(e), 0) + coeff * exp[k]
    return {e: v for e, v in out.items() if v}


def _bounded_vectors(total: int, slots: int, steps: Sequence[int], offsets: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # vectors v with v_i = offsets_i + steps_i * k_i, k_i >= 0, summing to total
    if slots == 0:
        if total == 0:
            yield ()
        return
    e = offsets[0]
    while e <= total:
        for rest in _bounded_vectors(total - e, slots - 1, steps[1:], offsets[1:]):
            yield (e,) + rest
        e += steps[0]


def monomials(m: int, r: int, p: int, q: int, residues: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """Exponent vectors of bidegree (p, q) with y-exponents congruent to ``residues`` mod r,
    in increasing lexicographic order."""
    if p < 0 or q < 0:
        return []
    residues = list(residues) if residues is not None else [0] * m
    mus = list(_bounded_vectors(p, m - 2, [1] * (m - 2), [0] * (m - 2)))
    ys = list(_bounded_vectors(q, m, [r] * m, residues))
    return sorted(u + w for u in mus for w in ys)


def _content_free(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def integer_row(coeffs: dict[int, Fraction]) -> dict[int, int]:
    den = lcm(*(Fraction(v).denominator for v in coeffs.values())) if coeffs else 1
    return _content_free({c: int(Fraction(v) * den) for c, v in coeffs.items() if v})


def dense_rank(rows: list[list[int]], ncols: int) -> int:
    """Bareiss fraction-free elimination on a dense integer matrix."""
    M = [list(r) for r in rows]
    nrows = len(M)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        for i in range(rank + 1, nrows):
            f = M[i][col]
            Mi, Mr = M[i], M[rank]
            for j in range(col, ncols):
                Mi[j] = (p * Mi[j] - f * Mr[j]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def sparse_rank(rows: list[dict[int, int]]) -> int:
    """Fraction-free elimination on sparse integer rows; pivots keyed by leading column."""
    pivots: dict[int, dict[int, int]] = {}
    for row in sorted(rows, key=lambda r: (len(r), -max(r, default=-1))):
        row = dict(row)
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = _content_free(row)
                break
            a, b = prow[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            row = _content_free(new)
    return len(pivots)


def invariant_dimension(m: int, r: int, a: Sequence, p: int, q: int) -> dict:
    """dim of the invariant (p, q) piece of the Jacobian ring, recomputed from scratch."""
    nv = 2 * m - 2
    F = potential(m, r, a)
    gens = [partial(F, k) for k in range(nv)]
    ambient = monomials(m, r, p, q)
    index = {e: k for k, e in enumerate(ambient)}
    rows: list[dict[int, int]] = []
    for g in gens:
        if not g:
            continue
        sample = next(iter(g))
        gp, gq = sum(sample[: m - 2]), sum(sample[m - 2 :])
        need = [(-e) % r for e in sample[m - 2 :]]
        for mult in monomials(m, r, p - gp, q - gq, need):
            prod = {tuple(u + w for u, w in zip(e, mult)): c for e, c in g.items()}
            missing = [e for e in prod if e not in index]
            if missing:
                raise AssertionError(f"product term {missing[0]} left the invariant piece")
            rows.append(integer_row({index[e]: c for e, c in prod.items()}))
    ncols = len(ambient)
    if ncols <= DENSE_LIMIT:
        dense = [[row.get(c, 0) for c in range(ncols)] for row in rows]
        rk, method = dense_rank(dense, ncols), "dense-bareiss"
    else:
        rk, method = sparse_rank(rows), "sparse-fraction-free"
    return {
        "ambient": ncols,
        "ideal_rows": len(rows),
        "ideal_rank": rk,
        "dim": ncols - rk,
        "method": method,
    }


def relation_rank(a: Sequence, n: int) -> int:
    """Rank of [a_i^e - a_i], e = 2..n, by dense Bareiss after clearing denominators."""
    a = [Fraction(x) for x in a]
    rows = []
    for e in range(2, n + 1):
        vals = [x**e - x for x in a]
        den = lcm(*(v.denominator for v in vals)) if vals else 1
        rows.append([int(v * den) for v in vals])
    return dense_rank(rows, len(a))
