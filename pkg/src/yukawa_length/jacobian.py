"""Jacobian ring of the Kummer cover and the Higgs multiplication map.

At a point ``a = (a_1, ..., a_{m-3})`` the Kummer curve is cut out by

    F_0 = y_2^r - y_0^r - y_1^r,    F_i = y_{i+2}^r - y_0^r - a_i y_1^r,

and the Jacobian ring is Q[mu, y] / J with J generated by the partials of
``F = sum mu_i F_i``. Invariant bigraded pieces are computed degree by
degree: the ideal part of a piece is spanned by generator times monomial
products landing in the invariant character, and the quotient is read off
from a reduced echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import errors
from .linalg import Matrix, Quotient, as_rational, rank, span_of
from .polyring import Monomial, Polynomial, enumerate_monomials, times_monomial


@dataclass(frozen=True)
class ArrangementParams:
    m: int
    r: int
    n: int

    @property
    def k_minus_1(self) -> int:
        """h^{0,1} of the first eigen-piece of the curve family: m/r - 1."""
        return self.m // self.r - 1

    @property
    def source_bidegree(self) -> tuple[int, int]:
        # mr - m - 2r == r(n - 1)
        return 0, self.r * (self.n - 1)

    @property
    def target_bidegree(self) -> tuple[int, int]:
        # mr - m - r == r n
        return 1, self.r * self.n


@dataclass(frozen=True)
class ModuliPoint:
    a: tuple[Fraction, ...]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.a)


def validate_params(m: int, r: int) -> ArrangementParams:
    try:
        if isinstance(m, bool) or isinstance(r, bool) or int(m) != m or int(r) != r:
            raise ValueError
    except (TypeError, ValueError):
        raise errors.InvalidParams(f"m and r must be integers, got m={m!r}, r={r!r}") from None
    m, r = int(m), int(r)
    if r < 2:
        raise errors.TooSmall(f"r must be >= 2 (got r={r})")
    if m % r:
        raise errors.NotDivisible(f"r must divide m (r={r}, m={m})")
    if m < 4:
        raise errors.TooSmall(f"m must be >= 4 (got m={m})")
    n = m - m // r - 1
    if n < 1:
        raise errors.TooSmall(f"n = m - m/r - 1 must be >= 1 (got n={n})")
    return ArrangementParams(m, r, n)


def validate_point(params: ArrangementParams, a: Sequence) -> ModuliPoint:
    if len(a) != params.m - 3:
        raise errors.WrongLength(f"point needs m-3 = {params.m - 3} coordinates, got {len(a)}")
    coords = tuple(as_rational(x) for x in a)
    for i, x in enumerate(coords, start=1):
        if x == 0 or x == 1:
            raise errors.BadCoordinate(f"a_{i} = {x} must avoid 0 and 1")
    for (i, x), (j, y) in combinations(enumerate(coords, start=1), 2):
        if x == y:
            raise errors.Collision(f"a_{i} = a_{j} = {x}; coordinates must be pairwise distinct")
    return ModuliPoint(coords)


def default_point(params: ArrangementParams) -> ModuliPoint:
    return ModuliPoint(tuple(Fraction(k) for k in range(2, params.m - 1)))


@dataclass(frozen=True)
class Generator:
    poly: Polynomial
    bidegree: tuple[int, int]
    # character of every term; multipliers must carry the opposite one
    character: tuple[int, ...]
    label: str


def jacobian_generators(params: ArrangementParams, point: ModuliPoint) -> list[Generator]:
    """The m-2 mu-partials F_i and the m normalized y-partials -dF/(r dy_j).

    For y_{i+2} the generator is mu_i y_{i+2}^{r-1} with a plus sign; the sign
    does not change the ideal.
    """
    m, r = params.m, params.r
    coeff_y1 = (Fraction(1),) + point.a  # coefficient of y_1^r in F_0, F_1, ...
    zero = (0,) * m
    gens: list[Generator] = []
    for i in range(m - 2):
        poly = Polynomial(
            {
                Monomial.make(m, y={i + 2: r}): 1,
                Monomial.make(m, y={0: r}): -1,
                Monomial.make(m, y={1: r}): -coeff_y1[i],
            }
        )
        gens.append(Generator(poly, (0, r), zero, f"F_{i}"))

    def ychar(j: int) -> tuple[int, ...]:
        return tuple((r - 1) % r if k == j else 0 for k in range(m))

    gens.append(
        Generator(
            Polynomial({Monomial.make(m, {i: 1}, {0: r - 1}): 1 for i in range(m - 2)}),
            (1, r - 1), ychar(0), "dF/dy_0",
        )
    )
    gens.append(
        Generator(
            Polynomial({Monomial.make(m, {i: 1}, {1: r - 1}): coeff_y1[i] for i in range(m - 2)}),
            (1, r - 1), ychar(1), "dF/dy_1",
        )
    )
    for i in range(m - 2):
        gens.append(
            Generator(
                Polynomial.monomial(Monomial.make(m, {i: 1}, {i + 2: r - 1})),
                (1, r - 1), ychar(i + 2), f"dF/dy_{i + 2}",
            )
        )
    return gens


@dataclass(frozen=True, eq=False)
class GradedPieceBasis:
    bidegree: tuple[int, int]
    ambient: tuple[Monomial, ...]
    ideal_rows: Matrix
    quotient_basis: tuple[Monomial, ...]
    dim: int
    quotient: Quotient = field(repr=False)
    index: dict = field(repr=False)

    def coordinates(self, poly: Polynomial) -> tuple[Fraction, ...]:
        """Class of an invariant polynomial of this bidegree in quotient coordinates."""
        vec = {}
        for mono, c in poly.items():
            col = self.index.get(mono)
            if col is None:
                raise ValueError(f"{mono} is not an ambient monomial of bidegree {self.bidegree}")
            vec[col] = c
        return self.quotient.coordinates(vec)

    @property
    def ideal_rank(self) -> int:
        return self.quotient.space.rank


def ideal_products(
    params: ArrangementParams, point: ModuliPoint, p: int, q: int
) -> list[Polynomial]:
    """Generator-times-monomial products spanning J restricted to invariant bidegree (p, q)."""
    m, r = params.m, params.r
    out = []
    for gen in jacobian_generators(params, point):
        gp, gq = gen.bidegree
        need = tuple((-c) % r for c in gen.character)
        for mono in enumerate_monomials(m, r, p - gp, q - gq, need):
            out.append(times_monomial(gen.poly, mono))
    return out


@lru_cache(maxsize=64)
def graded_piece(params: ArrangementParams, point: ModuliPoint, p: int, q: int) -> GradedPieceBasis:
    ambient = tuple(enumerate_monomials(params.m, params.r, p, q))
    index = {mono: k for k, mono in enumerate(ambient)}
    rows = [{index[mono]: c for mono, c in poly.items()} for poly in ideal_products(params, point, p, q)]
    ideal = Matrix.from_sparse(rows, len(ambient))
    quotient = Quotient(span_of(ideal.data, len(ambient)))
    return GradedPieceBasis(
        bidegree=(p, q),
        ambient=ambient,
        ideal_rows=ideal,
        quotient_basis=tuple(ambient[c] for c in quotient.free),
        dim=quotient.dim,
        quotient=quotient,
        index=index,
    )


def source_piece(params: ArrangementParams, point: ModuliPoint) -> GradedPieceBasis:
    return graded_piece(params, point, *params.source_bidegree)


def target_piece(params: ArrangementParams, point: ModuliPoint) -> GradedPieceBasis:
    return graded_piece(params, point, *params.target_bidegree)


def vandermonde_monomials(params: ArrangementParams) -> list[Monomial]:
    """y_0^{kr} y_1^{(n-1-k)r} for k = 0..n-1."""
    m, r, n = params.m, params.r, params.n
    return [Monomial.make(m, y={0: k * r, 1: (n - 1 - k) * r}) for k in range(n)]


def vandermonde_source_basis(params: ArrangementParams, point: ModuliPoint) -> list[Monomial]:
    basis = vandermonde_monomials(params)
    piece = source_piece(params, point)
    coords = Matrix.from_rows([piece.coordinates(Polynomial.monomial(b)) for b in basis], piece.dim)
    if rank(coords) != len(basis):
        raise errors.DependentBasis(
            f"y_0^(br) y_1^(cr) classes have rank {rank(coords)} < {len(basis)} at a={point}"
        )
    return basis


def relation_matrix(params: ArrangementParams, point: ModuliPoint) -> Matrix:
    """Rows e = 2..n of a_i^e - a_i, annihilating (mu_i y_1^{rn})_i in the target piece."""
    return Matrix.from_rows(
        [[x**e - x for x in point.a] for e in range(2, params.n + 1)], params.m - 3
    )


def tangent_element(params: ArrangementParams, lam: Sequence) -> Polynomial:
    """beta = sum_i lambda_i mu_i y_1^r, i = 1..m-3."""
    m, r = params.m, params.r
    return Polynomial({Monomial.make(m, {i: 1}, {1: r}): l for i, l in enumerate(lam, start=1)})


def relation_subsets_independent(params: ArrangementParams, point: ModuliPoint) -> bool:
    """Every choice of n-1 columns of relation_matrix is linearly independent."""
    rel = relation_matrix(params, point)
    size = params.n - 1
    return all(rank(rel.select_columns(cols)) == size for cols in combinations(range(rel.cols), size))


@dataclass(frozen=True)
class HiggsMatrixReport:
    lam: tuple[Fraction, ...]
    matrix: Matrix
    rank: int
    surjective: bool


def _check_lambda(params: ArrangementParams, lam: Sequence) -> tuple[Fraction, ...]:
    if len(lam) != params.m - 3:
        raise errors.WrongLength(f"lambda needs m-3 = {params.m - 3} entries, got {len(lam)}")
    return tuple(as_rational(x) for x in lam)


def higgs_matrix(params: ArrangementParams, point: ModuliPoint, lam: Sequence) -> HiggsMatrixReport:
    """Matrix of multiplication by beta from the source piece to the target piece.

    Columns follow the source basis y_0^{kr} y_1^{(n-1-k)r}, k = 0..n-1; rows
    follow the echelon quotient basis of the target piece.
    """
    lam = _check_lambda(params, lam)
    beta = tangent_element(params, lam)
    target = target_piece(params, point)
    cols = [target.coordinates(times_monomial(beta, b)) for b in vandermonde_source_basis(params, point)]
    mat = Matrix.from_rows(cols, target.dim).transpose() if cols else Matrix.zeros(target.dim, 0)
    rk = rank(mat)
    return HiggsMatrixReport(lam, mat, rk, rk == target.dim)


def explicit_coefficient_matrix(params: ArrangementParams, point: ModuliPoint, lam: Sequence) -> Matrix:
    """The n x (m-3) matrix [(-a_i)^k lambda_i]: row k expresses beta * y_0^{kr} y_1^{(n-1-k)r}
    in the spanning set mu_i y_1^{rn}."""
    lam = _check_lambda(params, lam)
    return Matrix.from_rows(
        [[(-x) ** k * l for x, l in zip(point.a, lam)] for k in range(params.n)], params.m - 3
    )


@dataclass(frozen=True)
class CrossCheck:
    agree: bool
    change_of_basis_invertible: bool
    relations_describe_quotient: bool
    explicit_in_target: Matrix
    pipeline: Matrix


def cross_check_details(params: ArrangementParams, point: ModuliPoint, lam: Sequence) -> CrossCheck:
    """Compare higgs_matrix with the explicit (-a_i)^k lambda_i matrix.

    The explicit route lives in Q^{m-3} / rowspace(relation_matrix); its
    coordinates are carried into the echelon target coordinates by the images
    of the free spanning monomials mu_i y_1^{rn}. The images of all m-3
    spanning monomials must factor through the relation quotient, otherwise
    the relation route does not describe the target piece.
    """
    m, r, n = params.m, params.r, params.n
    target = target_piece(params, point)
    spanning = [
        target.coordinates(Polynomial.monomial(Monomial.make(m, {i: 1}, {1: r * n})))
        for i in range(1, m - 2)
    ]
    span_img = Matrix.from_rows(spanning, target.dim).transpose()  # dim_t x (m-3)
    rel_q = Quotient.of(relation_matrix(params, point))
    change = span_img.select_columns(rel_q.free)  # dim_t x dim_t
    invertible = change.rows == change.cols and rank(change) == change.rows
    unit_coords = Matrix.from_rows(
        [rel_q.coordinates({i: 1}) for i in range(m - 3)], rel_q.dim
    ).transpose()
    describes = invertible and (change @ unit_coords) == span_img

    explicit = explicit_coefficient_matrix(params, point, lam)
    explicit_q = Matrix.from_rows(
        [rel_q.coordinates(dict(row)) for row in explicit.data], rel_q.dim
    ).transpose()  # dim_q x n
    pushed = change @ explicit_q if invertible else explicit_q
    pipeline = higgs_matrix(params, point, lam).matrix
    return CrossCheck(
        agree=bool(describes and pushed == pipeline),
        change_of_basis_invertible=invertible,
        relations_describe_quotient=bool(describes),
        explicit_in_target=pushed,
        pipeline=pipeline,
    )


def cross_check_explicit_matrix(params: ArrangementParams, point: ModuliPoint, lam: Sequence) -> bool:
    return cross_check_details(params, point, lam).agree


cross_check_prop44_matrix = cross_check_explicit_matrix
