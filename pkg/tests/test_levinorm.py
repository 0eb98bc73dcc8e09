import random
from fractions import Fraction

import pytest

from singfol import (
    FoliationModule,
    InputRejected,
    LeviConnection,
    Polynomial,
    PolyVectorField,
    euler_field,
    improve_step,
    induced_isotropy_section,
    initial_connection,
    isotropy_algebra,
    jet,
    linearize,
    pushforward,
    radical_foliation,
    semidirect_product,
    verify_connection,
)
from singfol.fixtures import load_fixture
from conftest import random_field

x = Polynomial.variable(2, 0)
y = Polynomial.variable(2, 1)
Z2 = Polynomial.zero(2)

e = PolyVectorField([Z2, x])
f = PolyVectorField([y, Z2])
h = PolyVectorField([x, -y])
E2 = PolyVectorField([x, y])


def module(name):
    return FoliationModule(load_fixture(name).generators)


def perturbed():
    image = [x + y * y, y]
    inverse = [x - y * y, y]
    return FoliationModule([pushforward(g, image, inverse) for g in (e, f, h)])


def test_fixture_file_matches_pushforward_construction():
    assert module("perturbed-sl2").same_module(perturbed())


def test_initial_connection_sl2_is_exactly_flat():
    F = module("sl2")
    conn = initial_connection(F, 5)
    assert conn.certified_order == 2
    assert [img.field for img in conn.images] == [e, f, h]
    report = verify_connection(conn, F, 5)
    assert report.rows == tuple((d, 0, 0) for d in range(1, 6))


def test_initial_connection_empty_for_trivial_semisimple_part():
    for name in ("circles", "quadratic-x2dx", "weighted-n2"):
        F = module(name)
        conn = initial_connection(F, 4)
        assert conn.images == ()
        assert conn.euler.field == euler_field(F.nvars)


def test_initial_connection_perturbed_has_degree_two_defect():
    F = module("perturbed-sl2")
    conn = initial_connection(F, 5)
    assert conn.certified_order == 2
    report = verify_connection(conn, F, 5)
    assert report.rows[0] == (1, 0, 0)
    degree2 = report.rows[1]
    assert degree2[0] == 2 and degree2[1] > 0


def test_improve_step_eliminates_degree_two_defect():
    F = module("perturbed-sl2")
    conn = improve_step(initial_connection(F, 5), F)
    assert conn.certified_order == 3
    report = verify_connection(conn, F, 5)
    assert report.rows[1] == (2, 0, 0)
    # images move only in degrees >= 2
    base = initial_connection(F, 5)
    for old, new in zip(base.images, conn.images):
        diff = new.field - old.field
        assert diff.is_zero or diff.vanishing_order() >= 2


def test_improve_step_is_identity_on_flat_connection():
    F = module("sl2")
    conn = initial_connection(F, 5)
    better = improve_step(conn, F)
    assert better.certified_order == 3
    assert [i.field for i in better.images] == [i.field for i in conn.images]
    assert better.euler.field == conn.euler.field


def test_linearize_perturbed_to_order_five():
    F = module("perturbed-sl2")
    conn = linearize(F, 5)
    assert conn.certified_order == 5
    report = verify_connection(conn, F, 5)
    assert report.rows == tuple((d, 0, 0) for d in range(1, 6))
    assert len(conn.steps) == 3
    assert all(s.implication_verified for s in conn.steps)
    for img in conn.exact_images:
        assert F.membership(img).member


def test_linearize_conjugation_oracle():
    # the normalized generators themselves, with the transported Euler
    # field, form an exactly flat and linear pair at every order
    F = module("perturbed-sl2")
    iso = isotropy_algebra(F)
    image = [x + y * y, y]
    inverse = [x - y * y, y]
    oracle = LeviConnection(
        isotropy=iso,
        semisimple=iso.ss_data.algebra,
        images=tuple(jet(g, 8) for g in F.generators),
        exact_images=F.generators,
        euler=jet(pushforward(E2, image, inverse), 8),
        certified_order=2,
        truncation_order=8,
    )
    report = verify_connection(oracle, F, 8)
    assert report.rows == tuple((d, 0, 0) for d in range(1, 9))


def test_linearize_trivial_cases():
    conn = linearize(module("quadratic-x2dx"), 6)
    assert conn.images == ()
    assert conn.certified_order == 6
    conn = linearize(module("sl2-semidirect-euler"), 4)
    assert [i.field for i in conn.images] == [e, f, h]
    report = verify_connection(conn, module("sl2-semidirect-euler"), 4)
    assert report.rows == tuple((d, 0, 0) for d in range(1, 5))


def test_euler_commutation_shift_on_random_fields():
    # for X of vanishing order >= k and E Euler-like, [E, X]/(k-1) agrees
    # with X one order deeper
    rng = random.Random(23)
    corrections = PolyVectorField([y * y, x * y])
    E = euler_field(2) + corrections
    for _ in range(20):
        k = rng.choice([2, 3])
        X = random_field(rng, 2, 5, min_order=k)
        if X.is_zero:
            continue
        shifted = E.lie_bracket(X) * Fraction(1, k - 1) - X
        assert shifted.is_zero or shifted.vanishing_order() >= k + 1


def test_induced_section_perturbed():
    F = module("perturbed-sl2")
    conn = linearize(F, 2)
    check = induced_isotropy_section(conn)
    assert check.is_section


def test_induced_section_mixed_fixture_with_larger_bound():
    # sl2 on the plane, a quadratic line factor making the bound 2
    z3 = Polynomial.zero(3)
    x3, y3, z3v = (Polynomial.variable(3, i) for i in range(3))
    gens = [
        PolyVectorField([z3, x3, z3]),
        PolyVectorField([y3, z3, z3]),
        PolyVectorField([x3, -y3, z3]),
        PolyVectorField([z3, z3, z3v * z3v]),
    ]
    F = FoliationModule(gens)
    from singfol import artin_rees_certify

    cert = artin_rees_certify(F, cap=6)
    assert cert.bound == 2
    conn = linearize(F, cert.bound + 1)
    check = induced_isotropy_section(conn)
    assert check.is_section


def test_radical_foliation_sl2_semidirect_euler():
    F = module("sl2-semidirect-euler")
    conn = linearize(F, 5)
    dec = radical_foliation(F, conn, 5)
    assert dec.radical_generators == (E2,)
    assert dec.invariance_verified
    assert dec.class_level_split
    assert not dec.degraded
    assert dec.all_additive
    assert dec.graded_rows[0] == (1, 4, 3, 1, True)


def test_radical_foliation_circles_is_everything():
    F = module("circles")
    conn = linearize(F, 4)
    dec = radical_foliation(F, conn, 4)
    # no semisimple part: the kernel carries the whole module
    for d, m, s, r, ok in dec.graded_rows:
        assert s == 0 and m == r and ok


def test_radical_foliation_pure_sl2():
    F = module("sl2")
    conn = linearize(F, 4)
    dec = radical_foliation(F, conn, 4)
    assert dec.radical_generators == ()
    assert dec.all_additive
    # degree 1: all three classes come from the section
    assert dec.graded_rows[0] == (1, 3, 3, 0, True)


def test_semidirect_product_sl2_with_euler():
    M = semidirect_product([e, f, h], [E2])
    assert len(M.generators) == 4
    assert M.check_involutive().closed
    assert M.same_module(module("sl2-semidirect-euler"))


def test_semidirect_product_empty_action():
    M = semidirect_product([], [E2])
    assert M.same_module(FoliationModule([E2]))


def test_semidirect_product_invariance_failure():
    with pytest.raises(InputRejected, match="invariance"):
        semidirect_product([e, f, h], [e])


def test_semidirect_product_intersection_failure():
    # invariance holds ([h, h] = 0) but the spans overlap
    with pytest.raises(InputRejected, match="meets"):
        semidirect_product([h], [h])


def test_semidirect_product_rejects_nonlinear_action():
    with pytest.raises(InputRejected, match="linear"):
        semidirect_product([e * x], [E2])


def test_verify_connection_flags_corruption():
    F = module("perturbed-sl2")
    conn = linearize(F, 5)
    bad_images = list(conn.exact_images)
    bad_images[0] = bad_images[0] + PolyVectorField([Z2, x ** 3])
    bad = LeviConnection(
        isotropy=conn.isotropy,
        semisimple=conn.semisimple,
        images=tuple(jet(g, 5) for g in bad_images),
        exact_images=tuple(bad_images),
        euler=conn.euler,
        certified_order=2,
        truncation_order=5,
    )
    report = verify_connection(bad, F, 5)
    by_degree = {d: (lin, flat) for d, lin, flat in report.rows}
    assert by_degree[3] != (0, 0)
    assert by_degree[2] == (0, 0)
