"""Assembly and solution of the two linear systems behind the construction.

The coefficient polynomial g of the w'-term is pinned by one value condition
per finite point: g(t_i) = (1 - rho1 - rho2) * psi'(t_i) at a prescribed
point and g(q_j) = -psi'(q_j) at an apparent one.  Adding the top-coefficient
condition at infinity makes one condition too many, but the residue theorem
renders the infinity condition redundant exactly when the exponent sum is
admissible; we therefore always drop the infinity row, solve the remaining
square Vandermonde system, and re-check the dropped condition afterwards.

The h-system stacks one top-coefficient row for infinity, value rows at all
points, and first- plus second-derivative rows at the apparent points:

    row(infinity):  h_top                          = l1 * l2
    row(t_i):       h(t_i)                         = rho1 * rho2 * psi'(t_i)^2
    row(q_j):       h(q_j)                         = 0
    row(q_j, d1):   h'(q_j)                        = p_j * psi'(q_j)^2
    row(q_j, d2):   h''(q_j)                       = delta_j p_j^2 + epsilon_j p_j

with the local constants

    mu_j      = 1 / psi'(q_j)^2
    kappa_j   = -psi''(q_j) / psi'(q_j)^3
    g1_j      = g'(q_j)/psi'(q_j) + psi''(q_j)/(2 psi'(q_j))
    delta_j   = -2 psi'(q_j)^2
    epsilon_j = -2 psi'(q_j)^2 * (g1_j - psi''(q_j)/psi'(q_j)).

Every one of these closed forms is cross-checked against the Laurent-series
oracle in the test suite; none is taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, eliminate
from .model import FuchsianEquation, FuchsianInstance, fuchs_defect, psi, require_valid
from .polynomials import Polynomial
from .scalars import ZERO, GaussianRational


class FuchsViolation(ValueError):
    """The dropped infinity condition fails: the exponent sum is inadmissible."""


@dataclass(frozen=True)
class LocalConstants:
    """Derived quantities at one apparent point."""

    psi1: GaussianRational  # psi'(q_j)
    psi2: GaussianRational  # psi''(q_j)
    mu: GaussianRational
    kappa: GaussianRational
    g1: GaussianRational  # order-0 Laurent coefficient of g/psi at q_j
    delta: GaussianRational
    epsilon: GaussianRational


def g_rhs(instance: FuchsianInstance, kind: str, index: int) -> GaussianRational:
    """Right-hand side of the g-system value row at a point.

    kind "finite" gives (1 - rho1 - rho2) * psi'(t_i); kind "apparent" gives
    -psi'(q_j), which forces residue -1 of g/psi there.
    """
    require_valid(instance)
    dpsi = psi(instance).derivative()
    if kind == "finite":
        t, pair = instance.finite_points[index]
        return (GaussianRational(1) - pair.sum) * dpsi(t)
    if kind == "apparent":
        q, _ = instance.apparent_points[index]
        return -dpsi(q)
    raise ValueError(f"unknown point kind {kind!r}")


def build_g_system(instance: FuchsianInstance):
    """Square Vandermonde system for the g coefficients.

    Rows are the finite points followed by the apparent points; the redundant
    infinity row is omitted.  Columns are powers 0 .. n+N-1.
    """
    require_valid(instance)
    d = instance.n + instance.num_apparent
    points = instance.finite_positions + instance.apparent_positions
    rows = [_power_row(x, d) for x in points]
    rhs = [g_rhs(instance, "finite", i) for i in range(instance.n)] + [
        g_rhs(instance, "apparent", j) for j in range(instance.num_apparent)
    ]
    return Matrix.from_rows(rows), tuple(rhs)


def solve_g(instance: FuchsianInstance) -> Polynomial:
    """The unique g, with the dropped infinity condition re-checked.

    Raises FuchsViolation when the instance's exponent sum is inadmissible,
    which is exactly when the recovered top coefficient disagrees with
    1 + l1 + l2.
    """
    matrix, rhs = build_g_system(instance)
    outcome = eliminate(matrix, rhs)
    assert outcome.kind == "unique", "Vandermonde system with distinct nodes must be regular"
    g = Polynomial(outcome.particular)
    d = instance.n + instance.num_apparent
    expected_top = GaussianRational(1) + instance.infinity_exponents.sum
    if g.coefficient(d - 1) != expected_top:
        defect = fuchs_defect(instance)
        raise FuchsViolation(
            f"inconsistent at infinity: top coefficient {g.coefficient(d - 1)} != "
            f"{expected_top}; exponent-sum defect is {defect}"
        )
    return g


def local_constants(instance: FuchsianInstance, g: Polynomial, j: int) -> LocalConstants:
    """Closed-form constants at apparent point j (0-based)."""
    p = psi(instance)
    q = instance.apparent_positions[j]
    psi1 = p.derivative()(q)
    psi2 = p.derivative(2)(q)
    mu = GaussianRational(1) / (psi1 * psi1)
    kappa = -psi2 / (psi1 * psi1 * psi1)
    g1 = g.derivative()(q) / psi1 + psi2 / (2 * psi1)
    delta = -2 * psi1 * psi1
    epsilon = delta * (g1 - psi2 / psi1)
    return LocalConstants(
        psi1=psi1, psi2=psi2, mu=mu, kappa=kappa, g1=g1, delta=delta, epsilon=epsilon
    )


def h_rhs(
    instance: FuchsianInstance, g: Polynomial, row_kind: str, index: int = 0
) -> GaussianRational:
    """Right-hand side of one h-system row."""
    dpsi = psi(instance).derivative()
    if row_kind == "infinity":
        return instance.infinity_exponents.product
    if row_kind == "finite":
        t, pair = instance.finite_points[index]
        slope = dpsi(t)
        return pair.product * slope * slope
    if row_kind == "apparent_value":
        return ZERO
    if row_kind == "apparent_derivative":
        q, p = instance.apparent_points[index]
        slope = dpsi(q)
        return p * slope * slope
    if row_kind == "apparent_second":
        consts = local_constants(instance, g, index)
        p = instance.apparent_points[index][1]
        return consts.delta * p * p + consts.epsilon * p
    raise ValueError(f"unknown row kind {row_kind!r}")


def h_matrix(instance: FuchsianInstance) -> Matrix:
    """Coefficient matrix of the h-system; depends on the points only.

    Shape (n + 3N + 1) x (2n + 2N - 1).  Row order: infinity, values at
    t_1..t_n, values at q_1..q_N, first derivatives at q_1..q_N, second
    derivatives at q_1..q_N.  Columns are powers 0 .. 2(n+N-1).
    """
    require_valid(instance)
    d = instance.n + instance.num_apparent
    width = 2 * d - 1
    rows = [[ZERO] * (width - 1) + [GaussianRational(1)]]
    for t in instance.finite_positions:
        rows.append(_power_row(t, width))
    for q in instance.apparent_positions:
        rows.append(_power_row(q, width))
    for q in instance.apparent_positions:
        rows.append(_derivative_row(q, width, 1))
    for q in instance.apparent_positions:
        rows.append(_derivative_row(q, width, 2))
    return Matrix.from_rows(rows)


def build_h_system(instance: FuchsianInstance, g: Polynomial):
    """The h-system matrix together with its right-hand side."""
    matrix = h_matrix(instance)
    n, num = instance.n, instance.num_apparent
    rhs = [h_rhs(instance, g, "infinity")]
    rhs += [h_rhs(instance, g, "finite", i) for i in range(n)]
    rhs += [h_rhs(instance, g, "apparent_value", j) for j in range(num)]
    rhs += [h_rhs(instance, g, "apparent_derivative", j) for j in range(num)]
    rhs += [h_rhs(instance, g, "apparent_second", j) for j in range(num)]
    return matrix, tuple(rhs)


def construct(instance: FuchsianInstance) -> FuchsianEquation:
    """Build the unique equation for the square case N = n - 2.

    For other apparent-point counts use the dimension module (solve_under /
    check_momenta).  Raises FuchsViolation on an inadmissible exponent sum.
    """
    require_valid(instance)
    n, num = instance.n, instance.num_apparent
    if num != n - 2:
        raise ValueError(
            f"construct requires N = n - 2 (got n={n}, N={num}); "
            "use fuchsian.dimension.solve_under or check_momenta instead"
        )
    g = solve_g(instance)
    matrix, rhs = build_h_system(instance, g)
    outcome = eliminate(matrix, rhs)
    assert outcome.kind == "unique", "square confluent Vandermonde system must be regular"
    return FuchsianEquation(g, Polynomial(outcome.particular), instance)


def _power_row(x: GaussianRational, width: int) -> list:
    row = []
    power = GaussianRational(1)
    for _ in range(width):
        row.append(power)
        power = power * x
    return row


def _derivative_row(x: GaussianRational, width: int, order: int) -> list:
    """Row of the order-th derivative of (1, z, z^2, ...) evaluated at x."""
    row = []
    for k in range(width):
        factor = 1
        for step in range(order):
            factor *= k - step
        if factor == 0:
            row.append(ZERO)
        else:
            row.append(GaussianRational(factor) * x ** (k - order))
    return row
