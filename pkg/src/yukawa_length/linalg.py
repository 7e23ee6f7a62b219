"""Exact linear algebra over the rationals.

Every rank and quotient statement downstream is a statement over Q, so all
scalars are :class:`fractions.Fraction` and nothing is ever rounded.

Matrices are stored sparsely as tuples of ``(column, value)`` pairs per row.
Elimination always produces the reduced row-echelon form, which is unique, so
pivot columns and quotient coordinates do not depend on the order in which
rows are fed to :class:`RowSpace`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction
SparseRow = tuple[tuple[int, Fraction], ...]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or a string like '3/7'")
    return Fraction(x)


def _sparse(values: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]]) -> SparseRow:
    items = values.items() if isinstance(values, Mapping) else values
    return tuple(sorted((c, as_rational(v)) for c, v in items if v != 0))


@dataclass(frozen=True)
class Matrix:
    """Immutable sparse rational matrix. Absent entries are zero."""

    rows: int
    cols: int
    data: tuple[SparseRow, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        for row in self.data:
            for c, v in row:
                if not 0 <= c < self.cols:
                    raise ValueError(f"column {c} outside [0, {self.cols})")
                if v == 0:
                    raise ValueError("stored zero entry")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            data.append(_sparse(enumerate(row)))
        return cls(len(rows), cols, tuple(data))

    @classmethod
    def from_sparse(cls, rows: Sequence[Mapping[int, Fraction]], cols: int) -> "Matrix":
        return cls(len(rows), cols, tuple(_sparse(r) for r in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, ((),) * rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(((i, Fraction(1)),) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        for c, v in self.data[i]:
            if c == j:
                return v
        return Fraction(0)

    def row(self, i: int) -> dict[int, Fraction]:
        return dict(self.data[i])

    def to_lists(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, row in enumerate(self.data):
            for c, v in row:
                out[i][c] = v
        return out

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self[i, j] for i in range(self.rows))

    def transpose(self) -> "Matrix":
        cols: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.cols)]
        for i, row in enumerate(self.data):
            for c, v in row:
                cols[c].append((i, v))
        return Matrix(self.cols, self.rows, tuple(tuple(c) for c in cols))

    def is_zero(self) -> bool:
        return all(not row for row in self.data)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = []
        for a, b in zip(self.data, other.data):
            acc = dict(a)
            for c, v in b:
                acc[c] = acc.get(c, 0) + v
            rows.append(acc)
        return Matrix.from_sparse(rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        if c == 0:
            return Matrix.zeros(self.rows, self.cols)
        return Matrix(self.rows, self.cols, tuple(tuple((j, v * c) for j, v in row) for row in self.data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rows = []
        for row in self.data:
            acc: dict[int, Fraction] = {}
            for k, v in row:
                for j, w in other.data[k]:
                    acc[j] = acc.get(j, 0) + v * w
            rows.append(acc)
        return Matrix.from_sparse(rows, other.cols)

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        vec = [as_rational(x) for x in vec]
        return tuple(sum((v * vec[c] for c, v in row), Fraction(0)) for row in self.data)

    def select_columns(self, cols: Sequence[int]) -> "Matrix":
        where = {c: k for k, c in enumerate(cols)}
        return Matrix.from_sparse(
            [{where[c]: v for c, v in row if c in where} for row in self.data], len(cols)
        )

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.to_lists()]
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join("[" + " ".join(s.rjust(width) for s in row) + "]" for row in cells)


def _compact(x):
    # integral values are held as int internally; int arithmetic is far cheaper than Fraction
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class RowSpace:
    """Incrementally maintained row space in semi-echelon form.

    Each stored row is normalized so its leading (smallest) column is 1, and
    is keyed by that column. Rows are fed in any order; the span, the pivot
    set and the reduced remainder of any vector are order independent.
    Internally entries are int or Fraction; everything returned is Fraction.
    """

    def __init__(self, cols: int):
        self.cols = cols
        self._pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_columns(self) -> list[int]:
        return sorted(self._pivots)

    def free_columns(self) -> list[int]:
        return [c for c in range(self.cols) if c not in self._pivots]

    def _reduce_leading(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        # eliminate pivot columns in increasing order until the leading column is new
        pivots = self._pivots
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            v = row.get(c)
            if v is None:
                continue
            prow = pivots.get(c)
            if prow is None:
                return row
            for j, w in prow.items():
                nv = row.get(j, 0) - v * w
                if nv:
                    if j not in row:
                        heapq.heappush(heap, j)
                    row[j] = _compact(nv)
                else:
                    row.pop(j, None)
        return row

    def add(self, row: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]]) -> bool:
        """Add a row; returns True when it enlarged the span."""
        items = row.items() if isinstance(row, Mapping) else row
        work = {c: _compact(as_rational(v)) for c, v in items if v != 0}
        work = self._reduce_leading(work)
        if not work:
            return False
        lead = min(work)
        inv = Fraction(1) / work[lead]
        self._pivots[lead] = {c: _compact(v * inv) for c, v in work.items()}
        return True

    def reduce(self, vec: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]]) -> dict[int, Fraction]:
        """Fully reduce a vector; the result lives on free columns only."""
        items = vec.items() if isinstance(vec, Mapping) else vec
        row = {c: _compact(as_rational(v)) for c, v in items if v != 0}
        pivots = self._pivots
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            v = row.get(c)
            if v is None or c not in pivots:
                continue
            for j, w in pivots[c].items():
                nv = row.get(j, 0) - v * w
                if nv:
                    if j not in row:
                        heapq.heappush(heap, j)
                    row[j] = _compact(nv)
                else:
                    row.pop(j, None)
        return {c: Fraction(v) for c, v in row.items()}

    def reduced_echelon(self) -> tuple[list[dict[int, Fraction]], list[int]]:
        pivots = sorted(self._pivots)
        done: dict[int, dict[int, Fraction]] = {}
        for p in reversed(pivots):
            row = dict(self._pivots[p])
            for c in sorted(c for c in row if c != p and c in done):
                v = row.pop(c)
                for j, w in done[c].items():
                    if j == c:
                        continue
                    nv = row.get(j, 0) - v * w
                    if nv:
                        row[j] = _compact(nv)
                    else:
                        row.pop(j, None)
            done[p] = row
        return [{c: Fraction(v) for c, v in done[p].items()} for p in pivots], pivots


def insertion_order(row: SparseRow | Mapping[int, Fraction]):
    # short rows first, and among equals those reaching furthest right: keeps
    # fill-in low. Only speed depends on this; the echelon form does not.
    cols = [c for c, _ in row] if not isinstance(row, Mapping) else list(row)
    return (len(cols), -max(cols, default=-1))


def span_of(rows: Iterable[SparseRow | Mapping[int, Fraction]], cols: int) -> RowSpace:
    space = RowSpace(cols)
    for row in sorted(rows, key=insertion_order):
        space.add(row)
    return space


def _row_space(M: Matrix) -> RowSpace:
    return span_of(M.data, M.cols)


def rank(M: Matrix) -> int:
    return _row_space(M).rank


def row_echelon(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form of M and its pivot columns (increasing).

    Zero rows are kept at the bottom so E has the shape of M.
    """
    rows, pivots = _row_space(M).reduced_echelon()
    rows = rows + [{}] * (M.rows - len(rows))
    return Matrix.from_sparse(rows, M.cols), pivots


def kernel_basis(M: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space: one vector per free column, that entry set to 1."""
    rows, pivots = _row_space(M).reduced_echelon()
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        vec = [Fraction(0)] * M.cols
        vec[f] = Fraction(1)
        for p, row in zip(pivots, rows):
            vec[p] = -row.get(f, Fraction(0))
        basis.append(tuple(vec))
    return basis


class Quotient:
    """Coordinates on (ambient space) / (row span), in the free-column basis."""

    def __init__(self, span: RowSpace):
        self.space = span
        self.free = span.free_columns()
        self._index = {c: k for k, c in enumerate(self.free)}

    @classmethod
    def of(cls, span_rows: Matrix) -> "Quotient":
        return cls(_row_space(span_rows))

    @property
    def dim(self) -> int:
        return len(self.free)

    def coordinates(self, vec: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * len(self.free)
        for c, v in self.space.reduce(vec).items():
            out[self._index[c]] = v
        return tuple(out)


def cokernel_coordinates(span_rows: Matrix, v: Sequence) -> tuple[Fraction, ...]:
    if len(v) != span_rows.cols:
        raise ValueError(f"vector has length {len(v)}, expected {span_rows.cols}")
    return Quotient.of(span_rows).coordinates(enumerate(v))


def solve_in_row_span(span_rows: Matrix, v: Sequence) -> tuple[Fraction, ...] | None:
    """Coefficients c with c @ span_rows == v, or None when v is not in the span."""
    aug = span_rows.transpose()
    target = [as_rational(x) for x in v]
    rows = [dict(r) for r in aug.data]
    for i, t in enumerate(target):
        if t:
            rows[i][aug.cols] = t
    E, pivots = row_echelon(Matrix.from_sparse(rows, aug.cols + 1))
    if aug.cols in pivots:
        return None
    sol = [Fraction(0)] * aug.cols
    for i, p in enumerate(pivots):
        sol[p] = E[i, aug.cols]
    return tuple(sol)
