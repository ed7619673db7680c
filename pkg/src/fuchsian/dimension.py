"""Dimension analysis for an arbitrary number of apparent points.

With n prescribed finite points and N apparent ones the h-system has
2n + 2N - 1 unknowns and n + 3N + 1 rows, so three regimes exist:

    N < n - 2   underdetermined: n - 2 - N coefficients stay free
    N = n - 2   square: unique solution (handled by builder.construct)
    N > n - 2   overdetermined: N - n + 2 dependent rows survive, each
                yielding one quadratic constraint on the momenta

In every regime N + (free coefficients) - (constraints) = n - 2, the
dimension of the space of equations once positions are fixed.

The constraints come straight out of the elimination certificates: a
dependent second-derivative row equals a fixed combination of the pivot
rows, with coefficients that depend on the points only, so consistency
requires the same combination to hold between the right-hand sides.  Since
the right-hand side of a second-derivative row is quadratic in its momentum,
each certificate produces one quadratic equation, and the one for point j
carries the quadratic term of p_j while the others cannot.

The float helpers at the bottom are the one deliberately inexact corner of
the package: they find roots of the scalar constraints numerically and check
obstructions to a tolerance.  Nothing exact ever depends on them.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .builder import (
    FuchsViolation,  # noqa: F401  (re-exported: callers catch it from either module)
    build_h_system,
    h_matrix,
    h_rhs,
    local_constants,
    solve_g,
)
from .frobenius import verify
from .linalg import Matrix, det, eliminate
from .model import FuchsianEquation, FuchsianInstance, psi, require_valid
from .polynomials import Polynomial
from .scalars import ZERO, GaussianRational


@dataclass(frozen=True)
class CaseReport:
    """Counting data for one instance; total_dimension is n - 2 in all cases."""

    n: int
    num_apparent: int
    case: str  # "under" | "square" | "over"
    h_free_dim: int
    constraint_count: int
    total_dimension: int

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "N": self.num_apparent,
            "case": self.case,
            "h_free_dim": self.h_free_dim,
            "constraint_count": self.constraint_count,
            "total_dimension": self.total_dimension,
        }


def classify(instance: FuchsianInstance) -> CaseReport:
    """Compare N with n - 2 and report the counting consequences."""
    require_valid(instance)
    n, num = instance.n, instance.num_apparent
    if num < n - 2:
        case = "under"
    elif num == n - 2:
        case = "square"
    else:
        case = "over"
    h_free_dim = max(n - 2 - num, 0)
    constraint_count = max(num - n + 2, 0)
    return CaseReport(
        n=n,
        num_apparent=num,
        case=case,
        h_free_dim=h_free_dim,
        constraint_count=constraint_count,
        total_dimension=num + h_free_dim - constraint_count,
    )


def pinned_columns(instance: FuchsianInstance):
    """Which h-coefficients take the free values in the under case.

    Tries the trailing columns first; since the infinity row fixes the top
    coefficient, that choice leaves a singular square system whenever any
    freedom exists, and the deterministic fallback pins the non-pivot
    columns found by elimination instead.  Returns (columns, used_fallback).
    """
    report = classify(instance)
    if report.case != "under":
        raise ValueError(f"instance is {report.case}, not underdetermined")
    matrix = h_matrix(instance)
    trailing = tuple(range(matrix.cols - report.h_free_dim, matrix.cols))
    keep = [c for c in range(matrix.cols) if c not in set(trailing)]
    reduced = Matrix.from_rows(
        [[matrix.entry(r, c) for c in keep] for r in range(matrix.rows)]
    )
    if det(reduced):
        return trailing, False
    outcome = eliminate(matrix, (ZERO,) * matrix.rows)
    free = tuple(c for c in range(matrix.cols) if c not in set(outcome.pivot_cols))
    assert len(free) == report.h_free_dim, "maximal-rank claim failed"
    return free, True


def solve_under(instance: FuchsianInstance, free_values) -> FuchsianEquation:
    """Solve the underdetermined case with the given free coefficient values.

    The free values land in the pinned columns (see pinned_columns); the
    remaining square system is solved exactly and the result is verified by
    series analysis before being returned.
    """
    report = classify(instance)
    if report.case != "under":
        raise ValueError(f"instance is {report.case}, not underdetermined")
    free_values = [GaussianRational.coerce(v) for v in free_values]
    if len(free_values) != report.h_free_dim:
        raise ValueError(
            f"expected {report.h_free_dim} free values, got {len(free_values)}"
        )
    g = solve_g(instance)
    matrix, rhs = build_h_system(instance, g)
    columns, _ = pinned_columns(instance)
    h = _solve_with_pinned(matrix, rhs, columns, free_values)
    eq = FuchsianEquation(g, h, instance)
    assert verify(eq).overall, "constructed equation failed series verification"
    return eq


def _solve_with_pinned(matrix: Matrix, rhs, pinned_columns_, values) -> Polynomial:
    """Fix the pinned columns to the given values and solve the rest."""
    fixed = dict(zip(pinned_columns_, values))
    keep = [c for c in range(matrix.cols) if c not in fixed]
    reduced = Matrix.from_rows(
        [[matrix.entry(r, c) for c in keep] for r in range(matrix.rows)]
    )
    adjusted = []
    for r in range(matrix.rows):
        value = rhs[r]
        for c, pin in fixed.items():
            entry = matrix.entry(r, c)
            if entry:
                value = value - entry * pin
        adjusted.append(value)
    outcome = eliminate(reduced, adjusted)
    assert outcome.kind == "unique", f"pinned system not uniquely solvable: {outcome.kind}"
    full = [ZERO] * matrix.cols
    for c, pin in fixed.items():
        full[c] = pin
    for position, c in enumerate(keep):
        full[c] = outcome.particular[position]
    return Polynomial(full)


@dataclass(frozen=True)
class QuadraticConstraint:
    """One momentum constraint: sum_k quad[k] p_k^2 + lin[k] p_k + const = 0.

    Momentum indices are 1-based (p_1 .. p_N); j names the apparent point
    whose dependent second-derivative row produced the constraint, so the
    quadratic term of p_j is always present.
    """

    j: int
    quad: dict
    lin: dict
    const_term: GaussianRational

    def evaluate(self, momenta) -> GaussianRational:
        """Exact value at a momentum vector (0-based sequence)."""
        momenta = [GaussianRational.coerce(p) for p in momenta]
        acc = self.const_term
        for k, coeff in self.quad.items():
            acc = acc + coeff * momenta[k - 1] * momenta[k - 1]
        for k, coeff in self.lin.items():
            acc = acc + coeff * momenta[k - 1]
        return acc

    def single_variable(self) -> bool:
        """True when only p_j appears, so the constraint is a scalar quadratic."""
        return set(self.quad) | set(self.lin) <= {self.j}

    def to_json_obj(self) -> dict:
        return {
            "j": self.j,
            "quad": {str(k): self.quad[k].to_pair() for k in sorted(self.quad)},
            "lin": {str(k): self.lin[k].to_pair() for k in sorted(self.lin)},
            "const": self.const_term.to_pair(),
        }


class _MomentumPoly:
    """Degree-<=2 polynomial in the momenta, used as a symbolic rhs entry."""

    __slots__ = ("const", "lin", "quad")

    def __init__(self, const=ZERO, lin=None, quad=None):
        self.const = const
        self.lin = dict(lin or {})
        self.quad = dict(quad or {})

    def subtract_scaled(self, other: _MomentumPoly, factor: GaussianRational) -> None:
        self.const = self.const - factor * other.const
        for k, v in other.lin.items():
            self.lin[k] = self.lin.get(k, ZERO) - factor * v
        for k, v in other.quad.items():
            self.quad[k] = self.quad.get(k, ZERO) - factor * v

    def cleaned(self):
        lin = {k: v for k, v in sorted(self.lin.items()) if v}
        quad = {k: v for k, v in sorted(self.quad.items()) if v}
        return self.const, lin, quad


def _symbolic_rhs(instance: FuchsianInstance, g: Polynomial) -> list:
    """The h-system right-hand side as polynomials in the momenta."""
    n, num = instance.n, instance.num_apparent
    dpsi = psi(instance).derivative()
    rows = [_MomentumPoly(const=instance.infinity_exponents.product)]
    for i in range(n):
        rows.append(_MomentumPoly(const=h_rhs(instance, g, "finite", i)))
    for _ in range(num):
        rows.append(_MomentumPoly())
    for j in range(num):
        slope = dpsi(instance.apparent_positions[j])
        rows.append(_MomentumPoly(lin={j + 1: slope * slope}))
    for j in range(num):
        consts = local_constants(instance, g, j)
        rows.append(_MomentumPoly(lin={j + 1: consts.epsilon}, quad={j + 1: consts.delta}))
    return rows


def quadratic_constraints(instance: FuchsianInstance) -> list:
    """The N - n + 2 momentum constraints of the overdetermined case.

    The elimination certificates do not involve the momenta, so the returned
    constraints are exact objects valid for every momentum choice.
    """
    report = classify(instance)
    if report.case != "over":
        raise ValueError(f"instance is {report.case}, not overdetermined")
    g = solve_g(instance)
    matrix = h_matrix(instance)
    outcome = eliminate(matrix, (ZERO,) * matrix.rows)
    assert outcome.rank == matrix.cols, "maximal-rank claim failed"
    symbolic = _symbolic_rhs(instance, g)

    n, num = instance.n, instance.num_apparent
    second_block = n + 2 * num + 1  # first second-derivative row index
    constraints = []
    for cert in outcome.dependent_row_certificates:
        apparent_index = cert.row - second_block
        if not 0 <= apparent_index < num:
            raise RuntimeError(
                f"dependent row {cert.row} is not a second-derivative row; "
                "configuration outside the generic pivot pattern"
            )
        expr = _MomentumPoly(
            const=symbolic[cert.row].const,
            lin=symbolic[cert.row].lin,
            quad=symbolic[cert.row].quad,
        )
        for pivot_row, coeff in cert.combination:
            expr.subtract_scaled(symbolic[pivot_row], coeff)
        const, lin, quad = expr.cleaned()
        constraints.append(
            QuadraticConstraint(j=apparent_index + 1, quad=quad, lin=lin, const_term=const)
        )
    assert len(constraints) == report.constraint_count
    return constraints


@dataclass(frozen=True)
class MomentaCheck:
    consistent: bool
    equation: FuchsianEquation | None
    violations: tuple  # (j, exact constraint value) pairs, nonzero values only


def check_momenta(instance: FuchsianInstance) -> MomentaCheck:
    """Evaluate the constraints at the instance's momenta, exactly.

    On consistency the square pivot subsystem is solved and the verified
    equation is returned as the witness.
    """
    constraints = quadratic_constraints(instance)
    momenta = instance.momenta
    violations = []
    for constraint in constraints:
        value = constraint.evaluate(momenta)
        if value:
            violations.append((constraint.j, value))
    if violations:
        return MomentaCheck(consistent=False, equation=None, violations=tuple(violations))

    g = solve_g(instance)
    matrix, rhs = build_h_system(instance, g)
    outcome = eliminate(matrix, (ZERO,) * matrix.rows)
    rows = list(outcome.pivot_rows)
    sub = Matrix.from_rows([[matrix.entry(r, c) for c in range(matrix.cols)] for r in rows])
    sub_outcome = eliminate(sub, tuple(rhs[r] for r in rows))
    assert sub_outcome.kind == "unique"
    eq = FuchsianEquation(g, Polynomial(sub_outcome.particular), instance)
    assert verify(eq).overall, "consistent momenta produced an unverifiable equation"
    return MomentaCheck(consistent=True, equation=eq, violations=())


def exact_quadratic_roots(a, b, c):
    """Roots of a p^2 + b p + c within the Gaussian rationals, or None."""
    a = GaussianRational.coerce(a)
    b = GaussianRational.coerce(b)
    c = GaussianRational.coerce(c)
    if not a:
        raise ZeroDivisionError("leading coefficient is zero")
    disc = b * b - 4 * a * c
    root = disc.sqrt()
    if root is None:
        return None
    return ((-b + root) / (2 * a), (-b - root) / (2 * a))


def solve_quadratic_float(a: complex, b: complex, c: complex):
    """Both roots of a z^2 + b z + c in floats, numerically stable.

    The larger-magnitude root is computed from the quadratic formula with
    the non-cancelling sign; the other follows from the product c/a.
    """
    a, b, c = complex(a), complex(b), complex(c)
    if a == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    sq = cmath.sqrt(b * b - 4 * a * c)
    if abs(-b + sq) >= abs(-b - sq):
        first = (-b + sq) / (2 * a)
    else:
        first = (-b - sq) / (2 * a)
    if first == 0:
        return 0j, -b / a
    return first, c / (a * first)


# -- quarantined float path ---------------------------------------------------


def float_obstructions(instance: FuchsianInstance, momenta) -> list:
    """Logarithm obstructions at every apparent point for float momenta.

    Solves the pivot subsystem of the h-system in complex floats with the
    given momenta and returns one complex obstruction value per apparent
    point; magnitudes below the caller's tolerance indicate a numerically
    log-free equation.  The g polynomial and all local constants stay exact
    and are converted at the end.
    """
    momenta = [complex(p) for p in momenta]
    if len(momenta) != instance.num_apparent:
        raise ValueError(f"expected {instance.num_apparent} momenta, got {len(momenta)}")
    g = solve_g(instance)
    matrix = h_matrix(instance)
    outcome = eliminate(matrix, (ZERO,) * matrix.rows)
    n, num = instance.n, instance.num_apparent
    p = psi(instance)
    dpsi = p.derivative()
    consts = [local_constants(instance, g, j) for j in range(num)]

    rhs = [instance.infinity_exponents.product.to_complex()]
    for i in range(n):
        rhs.append(h_rhs(instance, g, "finite", i).to_complex())
    rhs.extend([0j] * num)
    for j in range(num):
        slope = dpsi(instance.apparent_positions[j]).to_complex()
        rhs.append(momenta[j] * slope * slope)
    for j in range(num):
        delta = consts[j].delta.to_complex()
        epsilon = consts[j].epsilon.to_complex()
        rhs.append(delta * momenta[j] ** 2 + epsilon * momenta[j])

    rows = list(outcome.pivot_rows)
    float_rows = [
        [matrix.entry(r, c).to_complex() for c in range(matrix.cols)] for r in rows
    ]
    h = _solve_complex(float_rows, [rhs[r] for r in rows])

    psi3 = p.derivative(3) if p.degree >= 3 else None
    obstructions = []
    for j in range(num):
        q = instance.apparent_positions[j]
        qf = q.to_complex()
        mu = consts[j].mu.to_complex()
        kappa = consts[j].kappa.to_complex()
        g0 = consts[j].g1.to_complex()
        psi1 = consts[j].psi1
        psi2 = consts[j].psi2
        psi3_val = psi3(q) if psi3 is not None else ZERO
        # (1/2) F''(q) for F = (z-q)^2 / psi^2, derived from the local unit of psi
        fpp_half = (
            -psi3_val / (3 * psi1**3) + GaussianRational(3) / 4 * psi2 * psi2 / psi1**4
        ).to_complex()
        h_val = _ceval(h, qf)
        h_d1 = _ceval(_cderiv(h), qf)
        h_d2 = _ceval(_cderiv(_cderiv(h)), qf)
        h_m1 = kappa * h_val + mu * h_d1
        h_0 = fpp_half * h_val + kappa * h_d1 + mu * h_d2 / 2
        obstructions.append((g0 + h_m1) * h_m1 + h_0)
    return obstructions


def _solve_complex(rows, rhs):
    """Dense complex solve with partial pivoting (floats only)."""
    size = len(rows)
    work = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(size):
        piv = max(range(col, size), key=lambda r: abs(work[r][col]))
        if work[piv][col] == 0:
            raise ZeroDivisionError("singular float system")
        work[col], work[piv] = work[piv], work[col]
        for r in range(col + 1, size):
            factor = work[r][col] / work[col][col]
            if factor != 0:
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    x = [0j] * size
    for col in range(size - 1, -1, -1):
        acc = work[col][size]
        for k in range(col + 1, size):
            acc -= work[col][k] * x[k]
        x[col] = acc / work[col][col]
    return x


def _ceval(coeffs, x: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _cderiv(coeffs):
    return [coeffs[k] * k for k in range(1, len(coeffs))]
