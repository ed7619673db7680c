"""General apparent-point counts: classification, free parameters, constraints."""

import random
from fractions import Fraction

import pytest

from fuchsian.builder import build_h_system, h_matrix, local_constants, solve_g
from fuchsian.dimension import (
    check_momenta,
    classify,
    exact_quadratic_roots,
    float_obstructions,
    pinned_columns,
    quadratic_constraints,
    solve_quadratic_float,
    solve_under,
)
from fuchsian.frobenius import verify
from fuchsian.linalg import eliminate, rank
from fuchsian.model import FuchsianInstance
from fuchsian.sampling import random_instance
from fuchsian.scalars import ZERO, GaussianRational


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


N2N1 = FuchsianInstance([(0, (0, 1)), (1, (0, 1))], (-1, -1), [(2, 3)])
# n=3, N=0 with admissible exponent sum 2 = n - N - 1
UNDER3 = FuchsianInstance([(0, (0, 1)), (1, (0, 1)), (2, (0, 2))], (-1, -1))


def test_classify_cases():
    square = classify(random_instance(4, 2, seed=1))
    assert (square.case, square.total_dimension) == ("square", 2)
    under = classify(random_instance(4, 1, seed=1))
    assert (under.case, under.h_free_dim, under.total_dimension) == ("under", 1, 2)
    over = classify(N2N1)
    assert (over.case, over.constraint_count, over.total_dimension) == ("over", 1, 0)


def test_classify_json_shape():
    obj = classify(N2N1).to_json_obj()
    assert obj == {
        "n": 2,
        "N": 1,
        "case": "over",
        "h_free_dim": 0,
        "constraint_count": 1,
        "total_dimension": 0,
    }


def test_pinned_columns_fallback():
    # The trailing choice would pin the top coefficient, which the infinity
    # row already fixes, so the deterministic fallback must kick in.
    cols, used_fallback = pinned_columns(UNDER3)
    assert used_fallback
    assert cols == (3,)  # n + 3N = 3 for n=3, N=0
    with pytest.raises(ValueError):
        pinned_columns(N2N1)


def test_solve_under_free_values():
    eq0 = solve_under(UNDER3, [0])
    eq1 = solve_under(UNDER3, [1])
    assert eq0.h != eq1.h
    assert verify(eq0).overall and verify(eq1).overall
    assert eq0.h.coefficient(3) == ZERO
    assert eq1.h.coefficient(3) == gr(1)
    with pytest.raises(ValueError):
        solve_under(UNDER3, [0, 0])
    with pytest.raises(ValueError):
        solve_under(random_instance(3, seed=2), [0])


def test_under_nullspace_dimension():
    g = solve_g(UNDER3)
    matrix, rhs = build_h_system(UNDER3, g)
    outcome = eliminate(matrix, rhs)
    assert outcome.kind == "underdetermined"
    assert len(outcome.nullspace_basis) == 1  # n - 2 - N


def test_quadratic_constraint_n2n1():
    constraints = quadratic_constraints(N2N1)
    assert len(constraints) == 1
    c = constraints[0]
    assert c.j == 1
    g = solve_g(N2N1)
    assert c.quad[1] == local_constants(N2N1, g, 0).delta == gr(-8)
    assert c.single_variable()
    # evaluating at the instance momentum p=3: -8*9 + 12*3 - 4 = -40
    assert c.evaluate([gr(3)]) == gr(-40)


def test_constraints_momentum_independent():
    other = N2N1.with_momenta([gr(7, 2)])
    a = quadratic_constraints(N2N1)
    b = quadratic_constraints(other)
    assert [(c.j, c.quad, c.lin, c.const_term) for c in a] == [
        (c.j, c.quad, c.lin, c.const_term) for c in b
    ]


def test_constraint_counts_random():
    rng = random.Random(8191)
    for n in (2, 3, 4):
        for num in range(n - 1, n + 2):
            inst = random_instance(n, num, seed=rng.randint(0, 10**6))
            constraints = quadratic_constraints(inst)
            assert len(constraints) == num - n + 2
            for c in constraints:
                assert c.quad.get(c.j), "own quadratic term must survive"
                assert n - 1 <= c.j <= num


def test_check_momenta_paths():
    bad = check_momenta(N2N1)
    assert not bad.consistent
    assert bad.violations == ((1, gr(-40)),)

    constraints = quadratic_constraints(N2N1)
    c = constraints[0]
    roots = exact_quadratic_roots(c.quad[1], c.lin.get(1, ZERO), c.const_term)
    assert roots is not None
    assert set(roots) == {gr(1), gr(Fraction(1, 2))}
    good = check_momenta(N2N1.with_momenta([roots[0]]))
    assert good.consistent
    assert verify(good.equation).overall
    # perturbing a consistent momentum breaks it again
    worse = check_momenta(N2N1.with_momenta([roots[0] + 1]))
    assert not worse.consistent


def test_zero_exponent_over_instance_admits_zero_momentum():
    # All exponent products vanish, so h = 0 with p = 0 must be a solution;
    # the constraint then has 0 as an exact root.
    inst = FuchsianInstance([(0, (0, 2)), (1, (0, -2))], (0, 0), [(3, 0)])
    report = classify(inst)
    assert report.case == "over"
    (constraint,) = quadratic_constraints(inst)
    assert constraint.evaluate([ZERO]) == ZERO
    result = check_momenta(inst)
    assert result.consistent
    assert result.equation.h.is_zero
    assert verify(result.equation).overall


def test_solve_quadratic_float_examples():
    assert set(solve_quadratic_float(1, -3, 2)) == {1 + 0j, 2 + 0j}
    roots = solve_quadratic_float(1, 0, 1)
    assert sorted((r.real, r.imag) for r in roots) == [(0.0, -1.0), (0.0, 1.0)]
    assert set(solve_quadratic_float(2, -2, 0)) == {0j, 1 + 0j}
    with pytest.raises(ZeroDivisionError):
        solve_quadratic_float(0, 1, 1)


def test_exact_quadratic_roots():
    assert set(exact_quadratic_roots(1, -3, 2)) == {gr(1), gr(2)}
    assert exact_quadratic_roots(1, 0, -2) is None
    with pytest.raises(ZeroDivisionError):
        exact_quadratic_roots(0, 1, 1)


def test_float_roots_give_small_obstruction():
    rng = random.Random(555)
    for _ in range(4):
        inst = random_instance(2, 1, seed=rng.randint(0, 10**6))
        (c,) = quadratic_constraints(inst)
        assert c.single_variable()
        roots = solve_quadratic_float(
            c.quad[1].to_complex(),
            c.lin.get(1, ZERO).to_complex(),
            c.const_term.to_complex(),
        )
        for root in roots:
            (omega,) = float_obstructions(inst, [root])
            assert abs(omega) < 1e-9


def test_constraints_equivalent_to_full_system_consistency():
    # The constraints must capture solvability exactly: for any momenta, all
    # constraints vanish iff eliminating the full overdetermined system with
    # the corresponding right-hand side reports a consistent outcome.
    rng = random.Random(2468)
    for _ in range(8):
        n = rng.choice([2, 3])
        num = n - 1  # one constraint
        base = random_instance(n, num, seed=rng.randint(0, 10**6))
        constraints = quadratic_constraints(base)
        momenta = [
            gr(Fraction(rng.randint(-4, 4), rng.randint(1, 2)), rng.randint(-1, 1))
            for _ in range(num)
        ]
        inst = base.with_momenta(momenta)
        g = solve_g(inst)
        matrix, rhs = build_h_system(inst, g)
        outcome = eliminate(matrix, rhs)
        all_zero = all(not c.evaluate(momenta) for c in constraints)
        assert all_zero == (outcome.kind != "inconsistent")


def test_rank_formula_small_sweep():
    rng = random.Random(777)
    for n in (2, 3, 4, 5):
        for num in range(0, n + 1):
            inst = random_instance(n, num, seed=rng.randint(0, 10**6))
            expected = min(2 * n + 2 * num - 1, n + 3 * num + 1)
            assert rank(h_matrix(inst)) == expected


def test_constraint_json_shape():
    (c,) = quadratic_constraints(N2N1)
    assert c.to_json_obj() == {
        "j": 1,
        "quad": {"1": ["-8", "0"]},
        "lin": {"1": ["12", "0"]},
        "const": ["-4", "0"],
    }
