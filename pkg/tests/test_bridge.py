from fractions import Fraction
from itertools import combinations

import pytest

from so8min.bridge import (
    F,
    F_inv,
    F_matrix,
    IsoMap,
    NotUnimodular,
    WrongRank,
    in_N1,
    kks_closed_form,
    kks_tangent_lift,
    lambda_prime,
    mu_sl2,
    omega1,
    sl2_act,
    sl2_act_quiver,
    to_bivector,
)
from so8min.linalg import Mat, inverse, rank
from so8min.orthogonal import Bivector, basis_vector, factorize, in_min_closure, kks_lambda, sample_min_orbit
from so8min.quiver import NOT_IN_N, QuiverPoint, in_N, sample_N, symplectic_form
from so8min.sampling import rand_sl, rand_vector, rand_word

e = [None] + [basis_vector(8, i) for i in range(1, 9)]
zero8 = (0,) * 8


def random_point(rng):
    return QuiverPoint.from_coordinates(3, rand_vector(rng, 16))


def orbit_map(rng):
    return IsoMap.from_columns(*factorize(sample_min_orbit(rand_word(rng, 8))))


def test_F_linear_and_bijective(rng):
    assert F(QuiverPoint.zero(3)).matrix.is_zero()
    m = F_matrix()
    assert m.shape == (16, 16) and rank(m) == 16
    for _ in range(100):
        p, q = random_point(rng), random_point(rng)
        assert F(p + q) == F(p) + F(q)
        assert F_inv(F(p)) == p
        f = IsoMap(Mat(8, 2, rand_vector(rng, 16)))
        assert F(F_inv(f)) == f
    with pytest.raises(WrongRank):
        F(QuiverPoint.zero(4))


def test_F_is_symplectic_on_all_basis_pairs():
    units = [QuiverPoint.from_coordinates(3, [int(i == j) for j in range(16)]) for i in range(16)]
    for p, q in combinations(units, 2):
        assert omega1(F(p), F(q)) == symplectic_form(p, q)


def test_omega1_examples(rng):
    f = IsoMap.from_columns(e[1], zero8)
    g = IsoMap.from_columns(zero8, e[8])
    assert omega1(f, g) == 1
    h = orbit_map(rng)
    assert omega1(h, h) == 0


def test_mu_examples():
    assert mu_sl2(IsoMap.from_columns(e[1], e[2])).is_zero()
    assert mu_sl2(IsoMap.from_columns(e[1], e[8])) == Mat.from_rows([[1, 0], [0, -1]])
    assert mu_sl2(IsoMap.from_columns(zero8, zero8)).is_zero()
    assert in_N1(IsoMap.from_columns(e[1], e[2]))
    assert not in_N1(IsoMap.from_columns(e[1], e[8]))


def test_membership_transfer(rng):
    for _ in range(50):
        p = sample_N(3, rng=rng)
        assert in_N1(F(p))
        f = orbit_map(rng)
        assert in_N(F_inv(f)) is not NOT_IN_N
        q = random_point(rng)
        assert (in_N(q) is not NOT_IN_N) == in_N1(F(q))


def test_to_bivector(rng):
    assert to_bivector(IsoMap.from_columns(e[1], e[2])) == Bivector.wedge(e[1], e[2])
    for _ in range(20):
        p = sample_N(3, rng=rng)
        f = F(p)
        g = rand_sl(rng, 2)
        assert to_bivector(sl2_act(g, f)) == to_bivector(f)
        assert in_min_closure(to_bivector(f))


def test_sl2_equivariance(rng):
    g0 = Mat.identity(2)
    p = random_point(rng)
    assert sl2_act_quiver(g0, p) == p and sl2_act(g0, F(p)) == F(p)
    for _ in range(50):
        g = rand_sl(rng, 2)
        p = random_point(rng)
        assert F(sl2_act_quiver(g, p)) == sl2_act(g, F(p))
    with pytest.raises(NotUnimodular):
        sl2_act(Mat.diag([2, 1]), F(p))


def test_mu_sl2_transforms_by_conjugation(rng):
    # the Gram matrix of the columns transforms as g^{-T} G g^{-1}; the zero fibre is preserved
    from so8min.orthogonal import pairing

    def gram_of(h):
        c = h.columns
        return Mat.from_rows([[pairing(c[i], c[j]) for j in range(2)] for i in range(2)])

    for _ in range(20):
        g = rand_sl(rng, 2)
        f = IsoMap(Mat(8, 2, rand_vector(rng, 16)))
        gi = inverse(g)
        assert gram_of(sl2_act(g, f)) == gi.T @ gram_of(f) @ gi
        assert in_N1(sl2_act(g, f)) == in_N1(f)


def test_lambda_prime(rng):
    f = orbit_map(rng)
    assert lambda_prime(f, IsoMap(Mat.zeros(8, 2))) == 0
    for _ in range(50):
        f = orbit_map(rng)
        w1, w2 = rand_vector(rng, 8), rand_vector(rng, 8)
        w = Bivector.wedge(w1, w2)
        target = kks_lambda(to_bivector(f), w)
        assert lambda_prime(f, kks_tangent_lift(f, w)) == target
        assert kks_closed_form(f, w1, w2) == target


def test_iso_map_json(rng):
    f = IsoMap(Mat(8, 2, [Fraction(x, 2) for x in rand_vector(rng, 16)]))
    assert IsoMap.from_json(f.to_json()) == f
