import random
from fractions import Fraction as F

import pytest

from polygroth.constructible import (
    And,
    Atom,
    ConstructibleSet,
    Not,
    Or,
    parse_constructible,
    product,
)
from polygroth.errors import DomainError
from polygroth.euler import chi, chi_b
from polygroth.grothendieck import (
    GradedClass,
    UngradedClass,
    class_of,
    class_of_cone,
    class_of_polyhedron,
    class_of_polyhedron_closed_form,
    one,
    sigma,
    u_power,
    ungraded,
    v_power,
    zero,
)
from polygroth.polyhedron import HPolyhedron


def P(n, rows):
    return HPolyhedron(n, [(tuple(a), F(b)) for a, b in rows])


def cs1(expr):
    return ConstructibleSet(1, expr)


HALFLINE = cs1(Atom((1,), F(0)))
OPENHALF = cs1(Atom((1,), F(0), True))
POINT = cs1(And((Atom((1,), F(0)), Atom((-1,), F(0)))))


# -- ring structure -----------------------------------------------------------


def test_ring_identities():
    x = u_power(2, 3) + v_power(1) - one()
    assert one() * x == x
    assert zero() + x == x
    assert x - x == zero()


def test_u_times_v_is_zero():
    assert u_power(1) * v_power(1) == zero()
    assert u_power(2, 5) * v_power(3, -7) == zero()


def test_mul_assoc_comm_random():
    rng = random.Random(3)

    def rand_class():
        terms = []
        for _ in range(rng.randint(0, 3)):
            terms.append((rng.randint(1, 3), rng.randint(-3, 3), rng.randint(-3, 3)))
        return GradedClass(rng.randint(-3, 3), terms)

    for _ in range(40):
        x, y, z = rand_class(), rand_class(), rand_class()
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_render():
    assert (u_power(2) + v_power(2)).render() == "u^2 + v^2"
    assert zero().render() == "0"
    assert sigma().render() == "u + v"
    assert (v_power(2) - u_power(2)).render() == "-u^2 + v^2"
    assert (one() + u_power(1, 2)).render() == "1 + 2*u"
    assert GradedClass(-1, ((3, 0, -1),)).render() == "-1 - v^3"


# -- classes of sets ----------------------------------------------------------


def test_generator_classes():
    assert class_of(HALFLINE) == v_power(1)
    assert class_of(OPENHALF) == u_power(1, -1)
    assert class_of(POINT) == sigma()  # chi = chi_b = 1


def test_prodzero():
    assert class_of(HALFLINE) * class_of(OPENHALF) == zero()


def test_sigma_shifts_grading():
    rng = random.Random(5)
    pool = [Atom((1,), F(0)), Atom((1,), F(1), True), Atom((-1,), F(-2))]
    for _ in range(8):
        expr = pool[rng.randrange(len(pool))]
        if rng.random() < 0.5:
            expr = Not(expr)
        C = cs1(expr)
        shifted = product(C, ConstructibleSet(1, And((Atom((1,), F(0)),
                                                      Atom((-1,), F(0))))))
        assert class_of(shifted) == sigma() * class_of(C)


def test_class_of_product_law():
    C = parse_constructible("dim 1; x1 >= 0 & x1 < 1")
    D = parse_constructible("dim 1; x1 > 0")
    CD = product(C, D)
    assert class_of(CD) == class_of(C) * class_of(D)


def test_rational_isomorphism_collapse():
    a = parse_constructible("dim 1; x1 >= 0 & x1 <= 1")
    b = parse_constructible("dim 1; x1 >= 0 & x1 <= 2")
    assert class_of(a) == class_of(b) == u_power(1) + v_power(1)


def test_degree_zero_classes():
    assert class_of(ConstructibleSet.space(0)) == one()
    assert class_of(ConstructibleSet.empty(0)) == zero()


# -- cone closed form ---------------------------------------------------------


def test_class_of_cone_subspaces():
    assert class_of_cone(HPolyhedron.space(2)) == v_power(2) + u_power(2)
    xaxis = P(2, [((0, 1), 0), ((0, -1), 0)])
    assert class_of_cone(xaxis) == v_power(2) - u_power(2)
    origin2 = P(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    assert class_of_cone(origin2) == v_power(2) + u_power(2)


def test_class_of_cone_non_subspace():
    quadrant = P(2, [((1, 0), 0), ((0, 1), 0)])
    assert class_of_cone(quadrant) == v_power(2)
    halfplane = P(2, [((1, 1), 0)])
    assert class_of_cone(halfplane) == v_power(2)


def test_class_of_cone_rejects_offsets():
    with pytest.raises(DomainError):
        class_of_cone(P(1, [((1,), 1)]))


def test_class_of_cone_agrees_with_cell_oracle():
    cones = [
        HPolyhedron.space(1),
        P(1, [((1,), 0)]),
        P(1, [((1,), 0), ((-1,), 0)]),
        HPolyhedron.space(2),
        P(2, [((1, 0), 0)]),
        P(2, [((1, 0), 0), ((0, 1), 0)]),
        P(2, [((0, 1), 0), ((0, -1), 0)]),
        P(2, [((1, -1), 0), ((1, 1), 0)]),
        P(3, [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0)]),
        P(3, [((0, 0, 1), 0), ((0, 0, -1), 0)]),
    ]
    for cone in cones:
        assert class_of_cone(cone) == class_of_polyhedron(cone), cone


# -- polyhedron closed form -----------------------------------------------------


def test_class_closed_form_examples():
    square = P(2, [((1, 0), 0), ((-1, 0), -1), ((0, 1), 0), ((0, -1), -1)])
    assert class_of_polyhedron_closed_form(square) == u_power(2) + v_power(2)
    assert class_of_polyhedron_closed_form(HPolyhedron.space(3)) == \
        v_power(3) - u_power(3)
    halfline = P(1, [((1,), 0)])
    assert class_of_polyhedron_closed_form(halfline) == v_power(1)
    assert class_of_polyhedron_closed_form(P(1, [((1,), 1), ((-1,), 0)])) == zero()


def test_class_closed_form_agrees_with_cell_oracle():
    from tests.test_euler import CLOSED_FORM_SUITE
    for name, Q in CLOSED_FORM_SUITE:
        assert class_of_polyhedron_closed_form(Q) == class_of_polyhedron(Q), name


# -- scissor relation ----------------------------------------------------------


def test_scissor_relation_random():
    rng = random.Random(29)
    pool = [Atom((1,), F(0)), Atom((1,), F(1), True), Atom((-1,), F(-2)),
            Atom((1,), F(-1), True), Atom((-1,), F(0))]

    def rand_expr(depth=0):
        r = rng.random()
        if depth > 2 or r < 0.45:
            return pool[rng.randrange(len(pool))]
        if r < 0.65:
            return And((rand_expr(depth + 1), rand_expr(depth + 1)))
        if r < 0.85:
            return Or((rand_expr(depth + 1), rand_expr(depth + 1)))
        return Not(rand_expr(depth + 1))

    for _ in range(25):
        C = cs1(rand_expr())
        D = C & cs1(rand_expr())
        assert class_of(C) == class_of(D) + class_of(C - D)


# -- ungraded quotient -----------------------------------------------------------


def test_ungraded_examples():
    square = parse_constructible(
        "dim 2; x1 >= 0 & -x1 >= -1 & x2 >= 0 & -x2 >= -1")
    assert ungraded(class_of(square)) == UngradedClass(1, 1)
    assert ungraded(sigma()) == UngradedClass(1, 1)
    assert ungraded(v_power(1)) == UngradedClass(0, 1)


def test_ungraded_matches_euler_pair():
    rng = random.Random(41)
    pool = [Atom((1,), F(0)), Atom((1,), F(1), True), Atom((-1,), F(-2))]
    for _ in range(10):
        expr = pool[rng.randrange(len(pool))]
        if rng.random() < 0.5:
            expr = Not(expr)
        C = cs1(expr)
        u = ungraded(class_of(C))
        assert (u.chi, u.chi_b) == (chi(C), chi_b(C))


def test_ungraded_ring_ops():
    a = UngradedClass(2, 3)
    b = UngradedClass(-1, 4)
    assert a + b == UngradedClass(1, 7)
    assert a * b == UngradedClass(-2, 12)
    assert a - b == UngradedClass(3, -1)
