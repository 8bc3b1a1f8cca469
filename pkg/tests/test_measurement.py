import random
from fractions import Fraction as Q
from itertools import combinations

import pytest

from positroids.errors import PreconditionError
from positroids.linalg import RationalMatrix, minor, pluecker, twist
from positroids.measurement import (
    boundary_partial,
    face_pluecker,
    gauge_apply,
    gauge_fix,
    matrix_from_pluecker,
    measure,
    monodromy,
    monodromy_from_neighbors,
    monomial_map,
    random_weighting,
    twisted_pluecker_laurent,
    verify_diagram,
)

LETTERS = "abcdefghijklmnopqrstu"


def eq1_matrix(w):
    a, b, c, d, e, f, g, h = (w[x] for x in "abcdefgh")
    i, j, k, l, m, n, o, p = (w[x] for x in "ijklmnop")
    q, r, s, t, u = (w[x] for x in "qrstu")
    return RationalMatrix.build(
        [
            [1, 0, -(a * e * p) / (b * k * s), 0, (f * m * o * p) / (k * l * n * s),
             (k * l * q * u + f * p * r * u) / (k * l * s * t)],
            [0, 1, (a * d * k + a * e * j) / (b * i * k), 0,
             -(f * j * m * o) / (i * k * l * n), -(f * j * r * u) / (i * k * l * t)],
            [0, 0, 0, b * c * i * k * l * n * s * t,
             b * i * k * o * s * t * (h * l + g * m), b * g * i * k * n * r * s * u],
        ]
    )


def letter_weights(rng):
    return {x: Q(rng.randint(1, 40), rng.randint(1, 40)) for x in LETTERS}


def test_measure_square4_all_ones(square4):
    p = measure(square4, {e: 1 for e in square4.edges})
    assert [p[I] for I in combinations(range(1, 5), 2)] == [1, 1, 1, 1, 2, 1]


def test_measure_square4_single_weight(square4):
    z = {e: Q(1) for e in square4.edges}
    z["s12"] = Q(3, 5)
    p = measure(square4, z)
    assert p[(2, 4)] == Q(8, 5)
    assert p[(2, 3)] == Q(3, 5)
    for I in ((1, 2), (1, 3), (1, 4), (3, 4)):
        assert p[I] == 1


def test_measure_matches_printed_matrix(schubert36):
    rng = random.Random(17)
    for _ in range(3):
        w = letter_weights(rng)
        assert measure(schubert36, w) == pluecker(eq1_matrix(w))


def test_measure_vanishing_pattern(schubert36):
    rng = random.Random(18)
    p = measure(schubert36, letter_weights(rng))
    assert p[(1, 2, 3)] == 0
    assert all(
        p[I] != 0 for I in combinations(range(1, 7), 3) if I != (1, 2, 3)
    )


def test_three_term_pluecker_relations(d4):
    rng = random.Random(19)
    p = measure(d4, random_weighting(d4, rng))
    for _ in range(30):
        S = tuple(sorted(rng.sample(range(1, 9), 2)))
        rest = [x for x in range(1, 9) if x not in S]
        a, b, c, d = sorted(rng.sample(rest, 4))

        def coord(*extra):
            return p[tuple(sorted(S + extra))]

        assert coord(a, c) * coord(b, d) == (
            coord(a, b) * coord(c, d) + coord(a, d) * coord(b, c)
        )


def test_gauge_identity_and_covariance(square4):
    rng = random.Random(20)
    z = random_weighting(square4, rng)
    p = measure(square4, z)
    assert gauge_apply(square4, z, {}) == z
    scaled = measure(square4, gauge_apply(square4, z, {"v1": Q(2)}))
    assert all(scaled[I] == 2 * p[I] for I in p.coords)
    restricted = gauge_apply(square4, z, {"v1": Q(3), "v2": Q(1, 3)})
    assert measure(square4, restricted) == p


def test_matrix_from_pluecker_round_trips(square4):
    a = RationalMatrix.build([[1, 0, -1, -2], [0, 1, 1, 1]])
    p = pluecker(a)
    assert pluecker(matrix_from_pluecker(p)) == p
    p2 = measure(square4, {e: 1 for e in square4.edges})
    m = matrix_from_pluecker(p2)
    assert minor(m, (2, 4)) == 2
    ident = RationalMatrix.build([[1, 0, 4, 7], [0, 1, 5, 8]])
    assert matrix_from_pluecker(pluecker(ident)) == ident


def test_matrix_from_pluecker_rejects_bad_vector():
    from positroids.linalg import PlueckerVector

    coords = {I: Q(0) for I in combinations(range(1, 7), 3)}
    coords[(1, 2, 3)] = Q(1)
    coords[(4, 5, 6)] = Q(1)
    with pytest.raises(PreconditionError):
        matrix_from_pluecker(PlueckerVector(6, 3, coords))
    with pytest.raises(PreconditionError):
        matrix_from_pluecker(PlueckerVector(6, 3, {I: Q(0) for I in coords}))


def test_face_pluecker_all_ones(square4):
    p = measure(square4, {e: 1 for e in square4.edges})
    tau = twist(matrix_from_pluecker(p), "right")
    values = face_pluecker(square4, pluecker(tau), "source")
    assert all(v == 1 for v in values.values())


def test_face_pluecker_zero_reported(square4):
    a = RationalMatrix.build([[1, 0, 0, -1], [0, 1, 0, 1]])  # column 3 zero
    with pytest.raises(PreconditionError, match="face"):
        face_pluecker(square4, pluecker(a), "source")


def test_monomial_map(square4):
    assert all(
        v == 1
        for v in monomial_map(square4, {e: 1 for e in square4.edges}, "min").values()
    )
    z = {e: Q(1) for e in square4.edges}
    z["s12"] = Q(5)
    assert monomial_map(square4, z, "min")["f1"] == Q(1, 5)


def test_monomial_map_matches_twisted_face_pluecker(schubert36):
    rng = random.Random(21)
    z = random_weighting(schubert36, rng)
    A = matrix_from_pluecker(measure(schubert36, z))
    got = face_pluecker(schubert36, pluecker(twist(A, "right")), "source")
    assert got == monomial_map(schubert36, z, "min")


def test_boundary_partial_identity(square4):
    ones = {f.id: Q(1) for f in square4.faces()}
    z, note = boundary_partial(square4, ones, "min")
    assert all(v == 1 for v in z.values())
    assert note["factor"] == 1


def test_boundary_partial_round_trip(square4, schubert36, d4):
    rng = random.Random(22)
    for g in (square4, schubert36, d4):
        x = {f.id: Q(rng.randint(1, 60), rng.randint(1, 60)) for f in g.faces()}
        for direction in ("min", "max"):
            z, _ = boundary_partial(g, x, direction)
            assert monomial_map(g, z, direction) == x


def test_boundary_partial_square4_internal_coordinate(square4):
    x = {f.id: Q(1) for f in square4.faces()}
    x["f1"] = Q(7)
    z, note = boundary_partial(square4, x, "min")
    assert monomial_map(square4, z, "min") == x
    assert note["factor"] == Q(7) ** (2 - 1)


def test_double_twist_on_face_vectors(square4, schubert36):
    # (Mmin of rpartial(x))_f = x_f * prod_{i in source label} x_{i-}/x_{i+}
    rng = random.Random(23)
    for g in (square4, schubert36):
        x = {f.id: Q(rng.randint(1, 50), rng.randint(1, 50)) for f in g.faces()}
        z, _ = boundary_partial(g, x, "max")
        got = monomial_map(g, z, "min")
        src = g.face_labels("source")
        for f in g.faces():
            want = x[f.id]
            for i in src[f.id]:
                plus = g.boundary_face(i).id
                minus = g.boundary_face((i - 2) % g.n + 1).id
                want *= x[minus] / x[plus]
            assert got[f.id] == want


def test_monodromy(square4):
    z = {e: Q(1) for e in square4.edges}
    assert monodromy(square4, z, "f1") == 1
    z["s12"] = Q(3)
    alpha = monodromy(square4, z, "f1")
    assert alpha in (Q(3), Q(1, 3))
    assert alpha == monodromy_from_neighbors(square4, z, "f1")
    # gauge invariance
    gauged = gauge_apply(square4, z, {"v1": Q(5), "v3": Q(7, 2)})
    assert monodromy(square4, gauged, "f1") == alpha


def test_monodromy_neighbor_identity(schubert36, d4):
    rng = random.Random(24)
    for g in (schubert36, d4):
        z = random_weighting(g, rng)
        for f in g.faces():
            if f.kind == "internal":
                assert monodromy(g, z, f.id) == monodromy_from_neighbors(g, z, f.id)


def test_monodromy_rejects_boundary_face(square4):
    with pytest.raises(ValueError):
        monodromy(square4, {e: 1 for e in square4.edges}, "b1")


def test_laurent_formula_square4(square4):
    rng = random.Random(25)
    z = random_weighting(square4, rng)
    p = measure(square4, z)
    source_values = face_pluecker(square4, p, "source")
    left = pluecker(twist(matrix_from_pluecker(p), "left"))
    for J in combinations(range(1, 5), 2):
        terms = twisted_pluecker_laurent(square4, J)
        assert sum((t.evaluate(source_values) for t in terms), Q(0)) == left[J]
    # boundary-face label: a single term
    label = square4.face_labels("source")["b1"]
    assert len(twisted_pluecker_laurent(square4, label)) == 1


def test_laurent_unmatchable_is_empty(schubert36):
    assert twisted_pluecker_laurent(schubert36, (1, 2, 3)) == []


def test_laurent_d4_term_counts(d4):
    assert len(twisted_pluecker_laurent(d4, (4, 5, 6, 8))) == 2
    assert len(twisted_pluecker_laurent(d4, (2, 4, 6, 8))) == 17


def test_laurent_d4_recurrence_shape(d4):
    # the two-term sum is 1/x_f + x_top x_center / (x_f x_left x_right) in the
    # source labels of the figure
    src = d4.face_labels("source")
    terms = twisted_pluecker_laurent(d4, (4, 5, 6, 8))
    monomials = sorted(
        tuple(sorted((src[f], e) for f, e in t.exponents.items() if e)) for t in terms
    )
    assert monomials == sorted(
        [
            (((4, 5, 6, 8), -1),),
            tuple(sorted([
                ((4, 5, 6, 7), 1),
                ((2, 4, 6, 8), 1),
                ((4, 5, 6, 8), -1),
                ((2, 4, 5, 6), -1),
                ((4, 6, 7, 8), -1),
            ])),
        ]
    )


def test_verify_diagram_fixtures(square4, schubert36, d4, chamber_graph):
    for g in (square4, schubert36, d4, chamber_graph):
        report = verify_diagram(g, seed=7, trials=2)
        assert all(r["status"] == "pass" for r in report)


def test_random_weighting_is_seed_deterministic(square4):
    a = random_weighting(square4, random.Random(42))
    b = random_weighting(square4, random.Random(42))
    assert a == b


def test_gauge_fix(square4):
    rng = random.Random(26)
    z = random_weighting(square4, rng)
    targets = {"leg1": Q(1), "leg2": Q(1), "leg3": Q(1), "leg4": Q(1)}
    fixed = gauge_fix(square4, z, targets)
    assert all(fixed[e] == 1 for e in targets)
    assert measure(square4, fixed).coords.keys() == measure(square4, z).coords.keys()
