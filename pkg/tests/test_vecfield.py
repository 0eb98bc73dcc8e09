import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from singfol import (
    PolyVectorField,
    Polynomial,
    PreconditionError,
    euler_field,
    homogeneity_defect,
    homogeneity_defect_inverse,
    pushforward,
)
from conftest import random_field

x = Polynomial.variable(2, 0)
y = Polynomial.variable(2, 1)
Z2 = Polynomial.zero(2)
t = Polynomial.variable(1, 0)

e = PolyVectorField([Z2, x])        # x d/dy
f = PolyVectorField([y, Z2])        # y d/dx
h = PolyVectorField([x, -y])        # x d/dx - y d/dy


def test_bracket_on_the_line():
    X = PolyVectorField([t])
    Y = PolyVectorField([t * t])
    # hand oracle: x * 2x - x^2 * 1 = x^2
    assert X.lie_bracket(Y) == Y


def test_bracket_gives_sl2_relations():
    assert e.lie_bracket(f) == h
    assert h.lie_bracket(e) == e * 2
    assert h.lie_bracket(f) == f * (-2)


def test_bracket_antisymmetry_on_self():
    assert e.lie_bracket(e).is_zero


def test_euler_field_definition():
    assert euler_field(1) == PolyVectorField([t])
    E = euler_field(2)
    assert E == PolyVectorField([x, y])
    assert E.lie_bracket(E).is_zero


def test_euler_scales_homogeneous_fields():
    # X = x^2 d/dy is homogeneous of degree 2: [E, X] = (2 - 1) X
    X = PolyVectorField([Z2, x * x])
    assert euler_field(2).lie_bracket(X) == X


def test_homogeneous_components():
    X = PolyVectorField([Z2, x + x * x])
    parts = X.homogeneous_components()
    assert [d for d, _ in parts] == [1, 2]
    assert parts[0][1] == PolyVectorField([Z2, x])
    assert parts[1][1] == PolyVectorField([Z2, x * x])
    assert PolyVectorField.zero(2).homogeneous_components() == []


def test_homogeneity_defect_examples():
    X3 = PolyVectorField([t ** 3])
    X2 = PolyVectorField([t ** 2])
    X4 = PolyVectorField([t ** 4])
    assert homogeneity_defect(X3, 2) == X3
    assert homogeneity_defect(X2, 2).is_zero
    assert homogeneity_defect(X4, 2) == X4 * 2


def test_homogeneity_defect_inverse_examples():
    X4 = PolyVectorField([t ** 4])
    X3 = PolyVectorField([t ** 3])
    assert homogeneity_defect_inverse(X4, 2) == X4 * Fraction(1, 2)
    assert homogeneity_defect_inverse(X3, 2) == X3
    with pytest.raises(PreconditionError, match="degree 2"):
        homogeneity_defect_inverse(PolyVectorField([t ** 2]), 2)


def test_defect_characterizes_homogeneity():
    E = euler_field(2)
    for k, field, expected in [
        (1, e, True),
        (2, PolyVectorField([Z2, x * x]), True),
        (2, e, False),
        (1, PolyVectorField([Z2, x + x * x]), False),
    ]:
        is_scaled = E.lie_bracket(field) == field * (k - 1)
        assert is_scaled == expected


def test_defect_inversion_both_ways_randomized():
    rng = random.Random(7)
    for _ in range(40):
        k = rng.choice([1, 2, 3])
        Z = random_field(rng, 2, 6, min_order=k + 1)
        if Z.is_zero:
            continue
        assert homogeneity_defect(homogeneity_defect_inverse(Z, k), k) == Z
        assert homogeneity_defect_inverse(homogeneity_defect(Z, k), k) == Z


def test_linear_matrix_is_a_homomorphism():
    # on linear fields the assignment must turn brackets into commutators
    def mat(field):
        return field.linear_coefficient_matrix()

    def comm(a, b):
        n = len(a)
        return tuple(
            tuple(
                sum(a[i][k] * b[k][j] - b[i][k] * a[k][j] for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )

    assert mat(h.lie_bracket(e)) == comm(mat(h), mat(e))
    assert mat(e.lie_bracket(f)) == comm(mat(e), mat(f))


def test_render_example():
    assert h.render(["x", "y"]) == "x*dx + (-1)*y*dy"
    assert (e + PolyVectorField([Z2, x * x])).render(["x", "y"]) == "x^2*dy + x*dy"
    assert PolyVectorField.zero(2).render() == "0"


def test_pushforward_is_bracket_preserving():
    image = [x + y * y, y]
    inverse = [x - y * y, y]
    pe = pushforward(e, image, inverse)
    pf = pushforward(f, image, inverse)
    ph = pushforward(h, image, inverse)
    assert pe.lie_bracket(pf) == ph
    assert ph.lie_bracket(pe) == pe * 2


def test_pushforward_rejects_non_inverse():
    with pytest.raises(PreconditionError):
        pushforward(e, [x + y * y, y], [x, y])


fields = st.lists(
    st.tuples(
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
        st.fractions(min_value=-3, max_value=3, max_denominator=3),
    ),
    max_size=3,
).map(
    lambda pairs: PolyVectorField(
        [Polynomial(2, dict(pairs)), Polynomial(2, dict(reversed(pairs)))]
    )
)


@given(fields, fields)
def test_bracket_antisymmetric(X, Y):
    assert X.lie_bracket(Y) == -(Y.lie_bracket(X))


@given(fields, fields, fields)
def test_jacobi_identity(X, Y, Z):
    total = (
        X.lie_bracket(Y.lie_bracket(Z))
        + Y.lie_bracket(Z.lie_bracket(X))
        + Z.lie_bracket(X.lie_bracket(Y))
    )
    assert total.is_zero


@given(fields)
def test_components_reassemble(X):
    total = PolyVectorField.zero(2)
    for _, part in X.homogeneous_components():
        total = total + part
    assert total == X
