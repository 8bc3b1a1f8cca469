import random
from fractions import Fraction as Q

import pytest

from positroids.errors import PreconditionError
from positroids.linalg import (
    RationalMatrix,
    double_twist_mu,
    matrix_necklace,
    minor,
    pluecker,
    rank,
    signed_minor,
    twist,
)

CHAIN = [
    RationalMatrix.build([[1, 0, 1, 0, 1], [-1, 1, 0, 0, 0], [1, -1, 0, 1, 1]]),
    RationalMatrix.build([[1, 0, 1, -1, 0], [0, 1, 1, 0, 1], [0, 0, 0, 1, 1]]),
    RationalMatrix.build([[1, -1, 0, 0, 0], [0, 1, 1, -1, 0], [1, -1, 0, 1, 1]]),
]


def example74(p=2, q=3, r=5, s=7, t=11):
    return RationalMatrix.build([[p, q, 0, -s], [0, 0, r, t]])


def random_matrix(rng, k, n, lo=-6, hi=6):
    while True:
        m = RationalMatrix.build(
            [[Q(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(n)] for _ in range(k)]
        )
        if rank(m) == k:
            return m


def test_minor_basic():
    a = RationalMatrix.build([[1, 0, -1, -2], [0, 1, 1, 1]])
    assert minor(a, (2, 4)) == 2
    assert minor(a, (1, 2)) == 1


def test_minor_cyclic_sign():
    a = RationalMatrix.build([[1, 2, 3, 4], [5, 6, 7, 8]])
    # column 5 is column 1; the increasing order (2, 5) lists them swapped
    assert minor(a, (2, 5)) == -minor(a, (1, 2))
    assert signed_minor(a, (5, 2)) == minor(a, (1, 2))
    assert signed_minor(a, (1, 5)) == 0


def test_minor_validation():
    a = RationalMatrix.build([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        minor(a, (1,))
    with pytest.raises(ValueError):
        minor(a, (2, 2))


def test_pluecker_zero_matrix():
    z = RationalMatrix.build([[0, 0, 0], [0, 0, 0]])
    assert pluecker(z).is_zero()
    assert rank(z) == 0


def test_identity_prefix_minor():
    a = RationalMatrix.build([[1, 0, 5], [0, 1, 7]])
    assert minor(a, (1, 2)) == 1


def test_matrix_necklace_74_example():
    pi, fwd, rev = matrix_necklace(example74(1, 1, 1, 1, 1))
    assert pi.values == (2, 4, 5, 7)
    assert fwd.elements == ((1, 3), (2, 3), (3, 4), (1, 4))
    assert rev.elements == ((1, 4), (2, 4), (2, 3), (3, 4))


def test_matrix_necklace_zero_column():
    m = RationalMatrix.build([[1, 0, 0, 1], [0, 0, 1, 1]])
    pi, _, _ = matrix_necklace(m)
    assert pi(2) == 2


def test_matrix_necklace_rank_deficient():
    with pytest.raises(PreconditionError):
        matrix_necklace(RationalMatrix.build([[1, 2], [2, 4]]))


def test_twist_chain_from_introduction():
    assert twist(CHAIN[0], "right") == CHAIN[1]
    assert twist(CHAIN[1], "right") == CHAIN[2]
    assert twist(CHAIN[2], "left") == CHAIN[1]
    assert twist(CHAIN[1], "left") == CHAIN[0]


def test_twist_row_inversion():
    row = RationalMatrix.build([[2, 3, Q(5, 7), -4]])
    want = RationalMatrix.build([[Q(1, 2), Q(1, 3), Q(7, 5), Q(-1, 4)]])
    assert twist(row, "right") == want
    assert twist(row, "left") == want


def test_twist_74_example():
    p, q, r, s, t = Q(2), Q(3), Q(5), Q(7), Q(11)
    tau = twist(example74(p, q, r, s, t), "right")
    assert tau == RationalMatrix.build(
        [[1 / p, 1 / q, t / (r * s), 0], [0, 0, 1 / r, 1 / t]]
    )


def test_twist_involutive_random():
    rng = random.Random(0)
    for _ in range(8):
        m = random_matrix(rng, 3, 6)
        assert twist(twist(m, "right"), "left") == m
        assert twist(twist(m, "left"), "right") == m


def test_twist_preserves_positroid():
    rng = random.Random(1)
    for _ in range(5):
        m = random_matrix(rng, 2, 5)
        pi, fwd, rev = matrix_necklace(m)
        for d in ("right", "left"):
            pi2, fwd2, rev2 = matrix_necklace(twist(m, d))
            assert pi2.values == pi.values
            assert fwd2.elements == fwd.elements


def test_necklace_minors_invert():
    rng = random.Random(2)
    for _ in range(5):
        m = random_matrix(rng, 2, 4)
        _, fwd, _ = matrix_necklace(m)
        tau = twist(m, "right")
        for a in range(1, 5):
            assert minor(tau, fwd.element(a)) == 1 / minor(m, fwd.element(a))


def test_orthogonality_window():
    rng = random.Random(3)
    for _ in range(5):
        m = random_matrix(rng, 3, 6)
        pi, _, _ = matrix_necklace(m)
        tau = twist(m, "right")
        for a in range(1, 7):
            for b in range(a + 1, pi(a)):
                dot1 = sum(x * y for x, y in zip(tau.column(a), m.column(b)))
                dot2 = sum(x * y for x, y in zip(tau.column(b), m.column(pi(a))))
                assert dot1 == 0 and dot2 == 0


def test_gram_determinant_identity():
    rng = random.Random(4)
    m = random_matrix(rng, 3, 6)
    tau = twist(m, "right")
    for _ in range(6):
        I = tuple(sorted(rng.sample(range(1, 7), 3)))
        J = tuple(sorted(rng.sample(range(1, 7), 3)))
        gram = [
            [sum(x * y for x, y in zip(tau.column(i), m.column(j))) for j in J]
            for i in I
        ]
        det = (
            gram[0][0] * (gram[1][1] * gram[2][2] - gram[1][2] * gram[2][1])
            - gram[0][1] * (gram[1][0] * gram[2][2] - gram[1][2] * gram[2][0])
            + gram[0][2] * (gram[1][0] * gram[2][1] - gram[1][1] * gram[2][0])
        )
        assert minor(tau, I) * minor(m, J) == det


def test_equivariance():
    rng = random.Random(5)
    m = random_matrix(rng, 2, 5)
    while True:
        alpha = [[Q(rng.randint(-4, 4)) for _ in range(2)] for _ in range(2)]
        det = alpha[0][0] * alpha[1][1] - alpha[0][1] * alpha[1][0]
        if det != 0:
            break
    beta = [Q(rng.randint(1, 9)) for _ in range(5)]
    twisted = twist(m, "right")
    prod = RationalMatrix.build(
        [
            [
                sum(alpha[r][t] * m.rows[t][c] for t in range(2)) * beta[c]
                for c in range(5)
            ]
            for r in range(2)
        ]
    )
    inv_t = [
        [alpha[1][1] / det, -alpha[1][0] / det],
        [-alpha[0][1] / det, alpha[0][0] / det],
    ]
    want = RationalMatrix.build(
        [
            [
                sum(inv_t[r][t] * twisted.rows[t][c] for t in range(2)) / beta[c]
                for c in range(5)
            ]
            for r in range(2)
        ]
    )
    assert twist(prod, "right") == want


def test_basis_lemma():
    # {tau(A)_b : a => b} spans the orthogonal complement of the span of
    # A_a..A_{pi(a)-1}
    from positroids.core import implied_window

    rng = random.Random(6)
    m = random_matrix(rng, 3, 6)
    pi, _, _ = matrix_necklace(m)
    tau = twist(m, "right")
    for a in range(1, 7):
        window_cols = [m.column(c) for c in range(a, pi(a))]
        basis = [tau.column((b - 1) % 6 + 1) for b in implied_window(pi, a)]
        dim = rank(RationalMatrix.build(list(zip(*window_cols))))
        if basis:
            stacked = RationalMatrix.build(basis)
            assert rank(stacked) == len(basis)
            for v in basis:
                assert all(
                    sum(x * y for x, y in zip(v, col)) == 0 for col in window_cols
                )
        assert len(basis) == 3 - dim


def test_mu_74_example_symbolic_points():
    rng = random.Random(7)
    for _ in range(5):
        p, q, r, s, t = (Q(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(5))
        a = example74(p, q, r, s, t)
        mu = double_twist_mu(a)
        assert mu == RationalMatrix.build(
            [[p, q, r * s / t, 0], [0, -q * t / s, 0, t]]
        )
        tau2 = twist(twist(a, "right"), "right")
        assert tau2 == RationalMatrix.build(
            [[p, q, r * s / t, 0], [-p * t / s, -q * t / s, 0, t]]
        )
        pm, p2 = pluecker(mu), pluecker(tau2)
        for I in ((1, 4), (2, 3), (2, 4), (3, 4)):
            assert pm[I] == p2[I]
        for I in ((1, 2), (1, 3)):
            assert pm[I] != p2[I]


def test_mu_at_ones():
    a = example74(1, 1, 1, 1, 1)
    assert double_twist_mu(a) == RationalMatrix.build([[1, 1, 1, 0], [0, -1, 0, 1]])
    assert twist(twist(a, "right"), "right") == RationalMatrix.build(
        [[1, 1, 1, 0], [-1, -1, 0, 1]]
    )


def test_mu_needs_full_rank():
    with pytest.raises(PreconditionError):
        double_twist_mu(RationalMatrix.build([[1, 2, 1], [2, 4, 2]]))


def test_double_twist_formula_on_source_labels():
    # Delta_I(tau^2 A) = Delta_{pi(I)}(A) * prod Delta_{I_i}/Delta_{I_{i+1}}
    rng = random.Random(8)
    m = random_matrix(rng, 2, 4)
    pi, fwd, _ = matrix_necklace(m)
    if pi.values != (2, 4, 5, 7):
        m = example74(Q(2), Q(5), Q(3), Q(11), Q(7))
        pi, fwd, _ = matrix_necklace(m)
    tau2 = twist(twist(m, "right"), "right")
    for I in ((1, 4), (2, 3), (2, 4), (3, 4)):
        reduced = tuple(sorted((pi(i) - 1) % 4 + 1 for i in I))
        want = minor(m, reduced)
        for i in I:
            want *= minor(m, fwd.element(i)) / minor(m, fwd.element(i + 1))
        assert minor(tau2, I) == want


def random_uniform_2n(rng, n):
    while True:
        m = RationalMatrix.build(
            [[Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(2)]
        )
        if all(v != 0 for v in pluecker(m).coords.values()):
            return m


def cyclic_consecutive_minor(m, i):
    # det(A_i, A_{i+1}) in that order, with the wrap picking up the sign
    j = i % m.n + 1
    d = minor(m, tuple(sorted(((i - 1) % m.n + 1, j))))
    return d if (i - 1) % m.n + 1 < j else -d


def test_gr2n_twist_closed_form():
    rng = random.Random(10)
    for n in (4, 5, 6):
        m = random_uniform_2n(rng, n)
        tau = twist(m, "right")
        for i in range(1, n + 1):
            d = cyclic_consecutive_minor(m, i)
            a_next, b_next = m.column(i + 1)
            assert tau.column(i) == (b_next / d, -a_next / d)


def test_gr2n_double_twist_closed_form():
    rng = random.Random(11)
    m = random_uniform_2n(rng, 6)
    t2 = twist(twist(m, "right"), "right")
    for i in range(1, 7):
        ratio = -cyclic_consecutive_minor(m, i) / cyclic_consecutive_minor(m, i + 1)
        assert t2.column(i) == tuple(ratio * x for x in m.column(i + 2))


def test_gr2n_odd_periodicity():
    # for odd n the 2n-th twist negates the matrix, which is invisible in
    # every Plucker coordinate; the 4n-th twist is the exact identity
    rng = random.Random(12)
    for n in (3, 5):
        m = random_uniform_2n(rng, n)
        x = m
        for _ in range(2 * n):
            x = twist(x, "right")
        assert x == RationalMatrix.build([[-v for v in row] for row in m.rows])
        assert pluecker(x) == pluecker(m)
        for _ in range(2 * n):
            x = twist(x, "right")
        assert x == m


def test_mu_matches_double_twist_on_fixture_labels(square4, schubert36, d4):
    import random as _random

    from positroids.measurement import matrix_from_pluecker, measure, random_weighting

    rng = _random.Random(99)
    for g in (square4, schubert36, d4):
        z = random_weighting(g, rng)
        a = matrix_from_pluecker(measure(g, z))
        mu_coords = pluecker(double_twist_mu(a))
        tau2_coords = pluecker(twist(twist(a, "right"), "right"))
        for label in g.face_labels("source").values():
            assert mu_coords[label] == tau2_coords[label]


def test_square4_measured_matrix_necklace(square4):
    from positroids.measurement import matrix_from_pluecker, measure

    a = matrix_from_pluecker(measure(square4, {e: 1 for e in square4.edges}))
    pi, fwd, _ = matrix_necklace(a)
    assert pi.values == (3, 4, 5, 6)
    assert fwd.elements == ((1, 2), (2, 3), (3, 4), (1, 4))


def test_matrix_json_round_trip():
    m = CHAIN[0]
    assert RationalMatrix.from_json(m.to_json()) == m
