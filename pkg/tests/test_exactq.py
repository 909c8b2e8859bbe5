import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polygroth.errors import DomainError, UsageError
from polygroth.exactq import (
    dot,
    format_rat,
    gauss_solve,
    improve_below,
    lp_feasible,
    lp_optimize,
    mat_rank,
    nullspace,
    parse_rat,
    primitive_normalize,
    vec,
)

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


# -- rational scalars -------------------------------------------------------


def test_parse_rat_literals():
    assert parse_rat("5/2") == F(5, 2)
    assert parse_rat("-3") == F(-3)
    assert parse_rat("-1/2") == F(-1, 2)
    assert parse_rat("0") == 0


@pytest.mark.parametrize("bad", ["1.5", "3/-2", "1/0", "2e3", "", "x"])
def test_parse_rat_rejects(bad):
    with pytest.raises(UsageError):
        parse_rat(bad)


def test_format_rat_roundtrip():
    for q in [F(5, 2), F(-7, 3), F(4), F(0), F(-1, 9)]:
        assert parse_rat(format_rat(q)) == q


@given(rationals, rationals)
def test_exact_add_sub(p, q):
    assert (p + q) - q == p


@given(rationals, rationals.filter(lambda q: q != 0))
def test_exact_mul_div(p, q):
    assert (p * q) / q == p


# -- gauss_solve ------------------------------------------------------------


def test_gauss_identity():
    sol = gauss_solve([[1, 0], [0, 1]], [F(1, 2), -3])
    assert sol is not None
    x, basis = sol
    assert x == (F(1, 2), F(-3))
    assert basis == []


def test_gauss_one_degree_of_freedom():
    sol = gauss_solve([[1, 1]], [0])
    assert sol is not None
    x, basis = sol
    assert x[0] + x[1] == 0
    assert len(basis) == 1
    v = basis[0]
    assert v[0] + v[1] == 0 and v != (0, 0)


def test_gauss_inconsistent():
    assert gauss_solve([[1, 0], [1, 0]], [0, 1]) is None


def test_gauss_empty_system():
    x, basis = gauss_solve([], [], 3)
    assert x == (0, 0, 0)
    assert len(basis) == 3


def test_gauss_random_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 4)
        r = rng.randint(0, 4)
        rows = [[F(rng.randint(-5, 5)) for _ in range(n)] for _ in range(r)]
        xtrue = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
        rhs = [dot(vec(row), vec(xtrue)) for row in rows]
        sol = gauss_solve(rows, rhs, n)
        assert sol is not None
        x, basis = sol
        for row, b in zip(rows, rhs):
            assert dot(vec(row), x) == b
            for v in basis:
                assert dot(vec(row), v) == 0
        assert mat_rank(rows, n) == n - len(basis)


def test_nullspace_of_empty_matrix_is_everything():
    assert len(nullspace([], 4)) == 4


# -- primitive_normalize ----------------------------------------------------


def test_primitive_normalize_examples():
    assert primitive_normalize([F(2, 3), F(4, 3)], 2) == ((1, 2), F(3))
    assert primitive_normalize([-4, 6], 1) == ((-2, 3), F(1, 2))
    assert primitive_normalize([1, 0], 0) == ((1, 0), F(0))


def test_primitive_normalize_idempotent_and_zero_error():
    a, b = primitive_normalize([F(9, 4), F(-3, 8)], F(7, 2))
    assert primitive_normalize(a, b) == (a, b)
    with pytest.raises(DomainError):
        primitive_normalize([0, 0], 1)


def test_primitive_normalize_preserves_halfspace():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 3)
        a = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]
        if all(x == 0 for x in a):
            a[0] = F(1)
        b = F(rng.randint(-5, 5), rng.randint(1, 3))
        a2, b2 = primitive_normalize(a, b)
        for _ in range(10):
            x = vec([F(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(n)])
            assert (dot(vec(a), x) >= b) == (dot(vec(a2), x) >= b2)


# -- lp_optimize ------------------------------------------------------------


def test_lp_interval_endpoint():
    res = lp_optimize([(vec([1]), F(0)), (vec([-1]), F(-1))], vec([1]), "max")
    assert res.status == "optimum"
    assert res.value == 1
    assert res.point == (F(1),)


def test_lp_unbounded():
    res = lp_optimize([(vec([1]), F(0))], vec([1]), "max")
    assert res.status == "unbounded"


def test_lp_infeasible():
    res = lp_optimize([(vec([1]), F(1)), (vec([-1]), F(0))], vec([1]), "max")
    assert res.status == "infeasible"


def test_lp_min_sense():
    res = lp_optimize([(vec([1, 0]), F(-1)), (vec([0, 1]), F(2))], vec([1, 1]), "min")
    assert res.status == "optimum"
    assert res.value == 1
    assert res.point == (F(-1), F(2))


def test_lp_degenerate_square_vertex():
    cons = [
        (vec([1, 0]), F(0)),
        (vec([0, 1]), F(0)),
        (vec([-1, 0]), F(-1)),
        (vec([0, -1]), F(-1)),
        (vec([1, 1]), F(0)),  # redundant through the origin
    ]
    res = lp_optimize(cons, vec([-1, -1]), "max")
    assert res.status == "optimum"
    assert res.value == 0
    assert res.point == (F(0), F(0))


def test_lp_random_bounded_exactness():
    # box plus random cuts: reported optimum satisfies every constraint and
    # no sampled feasible point beats it
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 3)
        cons = []
        for j in range(n):
            e = [F(0)] * n
            e[j] = F(1)
            cons.append((vec(e), F(-3)))
            cons.append((vec([-x for x in e]), F(-3)))
        for _ in range(rng.randint(0, 3)):
            a = [F(rng.randint(-3, 3)) for _ in range(n)]
            if all(x == 0 for x in a):
                continue
            cons.append((vec(a), F(rng.randint(-4, 0))))
        obj = vec([F(rng.randint(-3, 3)) for _ in range(n)])
        res = lp_optimize(cons, obj, "max")
        assert res.status == "optimum"
        for a, b in cons:
            assert dot(a, res.point) >= b
        assert dot(obj, res.point) == res.value
        for _ in range(30):
            x = vec([F(rng.randint(-12, 12), 4) for _ in range(n)])
            if all(dot(a, x) >= b for a, b in cons):
                assert dot(obj, x) <= res.value


def test_lp_feasible_returns_point_or_none():
    assert lp_feasible([(vec([1]), F(1)), (vec([-1]), F(0))], 1) is None
    p = lp_feasible([(vec([1, 1]), F(2))], 2)
    assert p is not None and p[0] + p[1] >= 2


# -- improve_below ----------------------------------------------------------


def test_improve_below_finds_point():
    # region x >= 0 inside dimension 1, witness 2, objective x: min is 0 >= -1?
    cons = [(vec([1]), F(0))]
    res = improve_below(cons, vec([2]), vec([1]), F(0), F(1))
    assert res is not None and res[0] < 1 and res[0] >= 0
    assert improve_below(cons, vec([2]), vec([1]), F(0), F(0)) is None


def test_improve_below_unbounded_direction():
    cons = [(vec([1, 0]), F(0))]
    res = improve_below(cons, vec([1, 0]), vec([0, 1]), F(0), F(-100))
    assert res is not None
    assert res[0] >= 0 and res[1] < -100


def test_improve_below_respects_constraints():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 3)
        cons = []
        w = vec([F(rng.randint(-2, 2)) for _ in range(n)])
        for _ in range(rng.randint(1, 5)):
            a = vec([F(rng.randint(-3, 3)) for _ in range(n)])
            if all(x == 0 for x in a):
                continue
            cons.append((a, dot(a, w) - F(rng.randint(0, 3))))
        obj = vec([F(rng.randint(-2, 2)) for _ in range(n)])
        bound = dot(obj, w) - F(rng.randint(0, 2))
        res = improve_below(cons, w, obj, F(0), bound)
        if res is not None:
            assert all(dot(a, res) >= b for a, b in cons)
            assert dot(obj, res) < bound
        else:
            direct = lp_optimize(cons, obj, "min")
            assert direct.status == "optimum" and direct.value >= bound
