"""Hodge numbers, wedge-power Higgs fields and coupling-length certificates.

A weight-one Higgs bundle F = F^{1,0} + F^{0,1} with field eta induces on its
n-th exterior power the grading E^{n-q,q} = wedge^{n-q} F^{1,0} wedge^q F^{0,1}
and the derivation theta(v) that replaces one F^{1,0} factor by its image
under eta(v). The coupling length is one less than the first depth q at which
the q-fold composite out of E^{n,0} vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import errors
from .jacobian import ArrangementParams, ModuliPoint, higgs_matrix
from .linalg import Matrix, as_rational, rank
from .sampling import sample_directions


@dataclass(frozen=True)
class HodgeNumbers:
    weight: int
    h: tuple[int, ...]  # h[q] = h^{weight-q, q}


def hodge_numbers_w1(params: ArrangementParams) -> tuple[int, int]:
    return params.n, params.k_minus_1


def hodge_numbers_v1(params: ArrangementParams) -> HodgeNumbers:
    n, k1 = params.n, params.k_minus_1
    return HodgeNumbers(n, tuple(comb(n, q) * comb(k1, q) if q <= k1 else 0 for q in range(n + 1)))


def structural_upper_bound(params: ArrangementParams) -> int:
    return params.k_minus_1


def first_vanishing_grade(params: ArrangementParams) -> int:
    """Smallest q with h^{n-q,q} = 0; n + 1 when every grade up to the weight is nonzero."""
    h = hodge_numbers_v1(params).h
    return next((q for q, x in enumerate(h) if x == 0), params.n + 1)


@dataclass(frozen=True)
class HiggsPencil:
    dim_F10: int
    dim_F01: int
    eta_basis: tuple[Matrix, ...]

    def __post_init__(self):
        if not self.eta_basis:
            raise errors.ShapeMismatch("a pencil needs at least one direction")
        for k, eta in enumerate(self.eta_basis):
            if eta.shape != (self.dim_F01, self.dim_F10):
                raise errors.ShapeMismatch(
                    f"eta_basis[{k}] has shape {eta.shape}, expected {(self.dim_F01, self.dim_F10)}"
                )
        if self.dim_F01 > self.dim_F10:
            raise errors.ShapeMismatch(f"dim F^01 = {self.dim_F01} exceeds dim F^10 = {self.dim_F10}")

    @property
    def directions(self) -> int:
        return len(self.eta_basis)

    def at(self, v: Sequence) -> Matrix:
        return _combine(self.eta_basis, v, (self.dim_F01, self.dim_F10))


def _combine(mats: Sequence[Matrix], v: Sequence, shape: tuple[int, int]) -> Matrix:
    if len(v) != len(mats):
        raise errors.ShapeMismatch(f"direction has {len(v)} entries, pencil has {len(mats)}")
    out = Matrix.zeros(*shape)
    for c, mat in zip(v, mats):
        c = as_rational(c)
        if c:
            out = out + mat.scale(c)
    return out


def arrangement_pencil(params: ArrangementParams, point: ModuliPoint) -> HiggsPencil:
    """eta along the coordinate directions of the moduli space, via the Jacobian ring."""
    d = params.m - 3
    basis = []
    for i in range(d):
        lam = [0] * d
        lam[i] = 1
        basis.append(higgs_matrix(params, point, lam).matrix)
    return HiggsPencil(params.n, params.k_minus_1, tuple(basis))


def colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(n), k), key=lambda s: s[::-1])


@dataclass(frozen=True)
class WedgeHiggs:
    n: int
    k_minus_1: int
    grades: tuple[tuple[tuple[tuple[int, ...], tuple[int, ...]], ...], ...]
    # maps[d][q]: E^{n-q,q} -> E^{n-q-1,q+1} along basis direction d
    maps: tuple[tuple[Matrix, ...], ...]

    @property
    def directions(self) -> int:
        return len(self.maps)

    def grade_dims(self) -> list[int]:
        return [len(g) for g in self.grades]

    def theta(self, q: int, v: Sequence) -> Matrix:
        shape = (len(self.grades[q + 1]), len(self.grades[q]))
        return _combine([m[q] for m in self.maps], v, shape)


def _derivation(eta: Matrix, src, dst) -> Matrix:
    """Replace one e_s in e_S ^ f_T by eta e_s = sum_t eta[t, s] f_t, then sort the word."""
    where = {b: k for k, b in enumerate(dst)}
    images = eta.transpose().data  # images[s] = column s of eta
    cols = []
    for S, T in src:
        col: dict[int, Fraction] = {}
        for pos, s in enumerate(S):
            rest = S[:pos] + S[pos + 1 :]
            for t, val in images[s]:
                if t in T:
                    continue
                # move f_t past the e's after position pos, then into place among T
                swaps = (len(S) - 1 - pos) + sum(1 for u in T if u < t)
                key = where[(rest, tuple(sorted(T + (t,))))]
                col[key] = col.get(key, 0) + (-val if swaps % 2 else val)
        cols.append(col)
    return Matrix.from_sparse(cols, len(dst)).transpose()


def wedge_power_higgs(pencil: HiggsPencil) -> WedgeHiggs:
    n, k1 = pencil.dim_F10, pencil.dim_F01
    grades = tuple(
        tuple((S, T) for S in colex_subsets(n, n - q) for T in colex_subsets(k1, q)) for q in range(n + 1)
    )
    maps = tuple(
        tuple(_derivation(eta, grades[q], grades[q + 1]) for q in range(n)) for eta in pencil.eta_basis
    )
    return WedgeHiggs(n, k1, grades, maps)


def iterated_higgs(W: WedgeHiggs, dirs: Sequence[Sequence]) -> Matrix:
    """theta(dirs[q-1]) o ... o theta(dirs[0]) : E^{n,0} -> E^{n-q,q}."""
    q = len(dirs)
    if q > W.n:
        raise errors.TooDeep(f"depth {q} exceeds the weight {W.n}")
    out = Matrix.identity(1)
    for step, v in enumerate(dirs):
        out = W.theta(step, v) @ out
    return out


def coupling_length_diagonal(W: WedgeHiggs, v: Sequence) -> int:
    out = Matrix.identity(1)
    for q in range(W.n):
        out = W.theta(q, v) @ out
        if out.is_zero():
            return q
    return W.n


@dataclass(frozen=True)
class LengthCertificate:
    length: int
    upper_bound: int
    complete: bool
    direction: tuple[Fraction, ...] | None
    witness: Matrix | None  # theta^length(v^length) on E^{n,0}
    upper_reason: str
    trials_used: int
    diagonal_lengths: tuple[int, ...]


def _upper_reason(params: ArrangementParams, W: WedgeHiggs) -> str:
    q = first_vanishing_grade(params)
    dims = W.grade_dims()
    if q <= W.n and dims[q] != 0:
        raise AssertionError(f"wedge grade {q} has dim {dims[q]}, expected 0")
    return f"grade dim 0 at q = {q}"


def certify(params: ArrangementParams, W: WedgeHiggs, directions: Iterable[Sequence]) -> LengthCertificate:
    """Search directions for a diagonal composite reaching the structural bound."""
    upper = structural_upper_bound(params)
    reason = _upper_reason(params, W)
    best, best_v = -1, None
    lengths = []
    for v in directions:
        v = tuple(as_rational(x) for x in v)
        L = coupling_length_diagonal(W, v)
        lengths.append(L)
        if L > best:
            best, best_v = L, v
        if L >= upper:
            break
    if best_v is None:
        return LengthCertificate(0, upper, upper == 0, None, None,
                                 reason if upper == 0 else "incomplete: no directions sampled", 0, ())
    witness = iterated_higgs(W, [best_v] * best)
    complete = best == upper
    return LengthCertificate(
        length=best,
        upper_bound=upper,
        complete=complete,
        direction=best_v,
        witness=witness,
        upper_reason=reason if complete else f"incomplete: best sampled length {best} < bound {upper}",
        trials_used=len(lengths),
        diagonal_lengths=tuple(lengths),
    )


def coupling_length(
    params: ArrangementParams,
    point: ModuliPoint,
    sampler: Iterable[Sequence] | None = None,
    *,
    seed: int = 0,
    trials: int = 20,
    bound: int = 100,
) -> LengthCertificate:
    W = wedge_power_higgs(arrangement_pencil(params, point))
    if sampler is None:
        sampler = sample_directions(seed, trials, bound, params.m - 3)
    return certify(params, W, sampler)


def is_surjective(eta: Matrix) -> bool:
    return rank(eta) == eta.rows
