"""Exact dense linear algebra over the Gaussian rationals.

Elimination uses deterministic first-nonzero pivoting: columns are scanned
left to right and, within a column, rows top to bottom.  Arithmetic is exact,
so no magnitude-based pivoting is needed and every run of the same system
produces the same pivots, the same certificates and the same solution.

For every row that carries no pivot the outcome records a certificate
expressing that row exactly as a combination of the pivot rows; downstream
code turns these certificates into the quadratic momentum constraints of the
overdetermined case, so they are a first-class output rather than an
afterthought.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import ZERO, GaussianRational


class Matrix:
    """Immutable dense matrix, row-major entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        values = tuple(GaussianRational.coerce(e) for e in entries)
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(values) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(values)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = values

    @classmethod
    def from_rows(cls, row_lists) -> Matrix:
        rows = [list(r) for r in row_lists]
        if not rows:
            raise ValueError("matrix needs at least one row")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            "(" + ", ".join(str(e) for e in self.row(i)) + ")" for i in range(self.rows)
        )
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


@dataclass(frozen=True)
class RowCertificate:
    """A dependent row written exactly as a combination of pivot rows.

    `combination` pairs pivot-row indices with coefficients; expanding it
    reproduces row `row` of the original matrix exactly.
    """

    row: int
    combination: tuple


@dataclass(frozen=True)
class SolveOutcome:
    kind: str  # "unique" | "underdetermined" | "inconsistent"
    particular: tuple | None
    nullspace_basis: tuple
    dependent_row_certificates: tuple
    pivot_rows: tuple
    pivot_cols: tuple

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)


def _echelon(matrix: Matrix):
    """Forward elimination; returns (work rows, transform rows, pivots).

    transform tracks the row operations, so transform @ original == work at
    all times; a dependent row r therefore satisfies
    sum_k transform[r][k] * original_row_k == 0 with transform[r][r] == 1.
    """
    m, n = matrix.rows, matrix.cols
    work = [list(matrix.row(i)) for i in range(m)]
    transform = [[ZERO] * m for _ in range(m)]
    for i in range(m):
        transform[i][i] = GaussianRational(1)
    used = [False] * m
    pivots = []
    for col in range(n):
        piv = None
        for r in range(m):
            if not used[r] and work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        used[piv] = True
        pivots.append((piv, col))
        piv_work, piv_tr = work[piv], transform[piv]
        for r in range(m):
            if used[r] or not work[r][col]:
                continue
            factor = work[r][col] / piv_work[col]
            work[r] = [a if not b else a - factor * b for a, b in zip(work[r], piv_work)]
            transform[r] = [
                a if not b else a - factor * b for a, b in zip(transform[r], piv_tr)
            ]
    return work, transform, pivots


def eliminate(matrix: Matrix, rhs) -> SolveOutcome:
    """Solve matrix * x = rhs exactly, classifying the outcome.

    Produces a particular solution (free variables set to zero) unless the
    system is inconsistent, a nullspace basis (one vector per free column),
    and one certificate per dependent row.
    """
    rhs = tuple(GaussianRational.coerce(v) for v in rhs)
    if len(rhs) != matrix.rows:
        raise ValueError(f"rhs length {len(rhs)} != row count {matrix.rows}")
    m, n = matrix.rows, matrix.cols
    work, transform, pivots = _echelon(matrix)
    pivot_row_set = {r for r, _ in pivots}

    certificates = []
    consistent = True
    reduced_rhs = [
        sum((transform[r][k] * rhs[k] for k in range(m)), ZERO) for r in range(m)
    ]
    for r in range(m):
        if r in pivot_row_set:
            continue
        combo = tuple(
            (k, -transform[r][k]) for k, _ in pivots if transform[r][k]
        )
        certificates.append(RowCertificate(row=r, combination=combo))
        if reduced_rhs[r]:
            consistent = False

    free_cols = [c for c in range(n) if c not in {c for _, c in pivots}]

    nullspace = []
    for free in free_cols:
        vec = [ZERO] * n
        vec[free] = GaussianRational(1)
        for r, c in reversed(pivots):
            acc = ZERO
            for j in range(n):
                if j != c and work[r][j]:
                    acc = acc + work[r][j] * vec[j]
            vec[c] = -acc / work[r][c]
        nullspace.append(tuple(vec))

    particular = None
    if consistent:
        x = [ZERO] * n
        for r, c in reversed(pivots):
            acc = reduced_rhs[r]
            for j in range(n):
                if j != c and work[r][j]:
                    acc = acc - work[r][j] * x[j]
            x[c] = acc / work[r][c]
        particular = tuple(x)

    if not consistent:
        kind = "inconsistent"
    elif free_cols:
        kind = "underdetermined"
    else:
        kind = "unique"
    return SolveOutcome(
        kind=kind,
        particular=particular,
        nullspace_basis=tuple(nullspace),
        dependent_row_certificates=tuple(certificates),
        pivot_rows=tuple(r for r, _ in pivots),
        pivot_cols=tuple(c for _, c in pivots),
    )


def rank(matrix: Matrix) -> int:
    """Exact rank."""
    _, _, pivots = _echelon(matrix)
    return len(pivots)


def det(matrix: Matrix) -> GaussianRational:
    """Exact determinant of a square matrix."""
    if matrix.rows != matrix.cols:
        raise ValueError(f"determinant of a non-square {matrix.rows}x{matrix.cols} matrix")
    work, _, pivots = _echelon(matrix)
    if len(pivots) < matrix.rows:
        return ZERO
    # Row operations preserve the determinant; reordering rows so that the
    # i-th pivot row comes i-th makes `work` upper triangular.
    order = [r for r, _ in pivots]
    inversions = sum(
        1
        for i in range(len(order))
        for j in range(i + 1, len(order))
        if order[i] > order[j]
    )
    result = GaussianRational(1) if inversions % 2 == 0 else GaussianRational(-1)
    for r, c in pivots:
        result = result * work[r][c]
    return result
