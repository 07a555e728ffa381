"""Root-data checks: normalizations, fundamental weights, conversions."""

from fractions import Fraction

import pytest

from weylkit.cartan import (
    LieType,
    Weight,
    cartan_matrix,
    delta,
    dominance_difference,
    fundamental_weight,
    fundamental_weights,
    half_sum_positive_roots,
    inner,
    positive_roots,
    preceq,
    root_coords,
    simple_roots,
    to_euclidean,
    to_root_coords,
    to_weight,
    zero_weight,
)

ALL_TYPES = [LieType("A", 6), LieType("B", 6), LieType("C", 6), LieType("D", 6),
             LieType("A", 12), LieType("B", 12), LieType("C", 12), LieType("D", 12)]


def F(a, b=1):
    return Fraction(a, b)


@pytest.mark.parametrize("family,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 8)])
def test_rank_guards(family, rank):
    with pytest.raises(ValueError):
        LieType(family, rank)


def test_simple_roots_b3():
    t = LieType("B", 3)
    a1, a2, a3 = simple_roots(t)
    assert a1 == (0, 0, 1)
    assert a2 == (0, 1, -1)
    assert a3 == (1, -1, 0)


def test_simple_roots_c2():
    t = LieType("C", 2)
    a1, a2 = simple_roots(t)
    assert a1 == (0, 2)
    assert a2 == (1, -1)


def test_simple_roots_d3():
    t = LieType("D", 3)
    a1, a2, a3 = simple_roots(t)
    assert a1 == (0, 1, 1)
    assert a2 == (0, 1, -1)
    assert a3 == (1, -1, 0)


def test_inner_normalizations():
    # A: (a_i, a_i) = 1, adjacent -1/2
    t = LieType("A", 5)
    roots = simple_roots(t)
    for i, a in enumerate(roots):
        assert inner(t, a, a) == 1
        if i + 1 < len(roots):
            assert inner(t, a, roots[i + 1]) == F(-1, 2)
    # B: (a1, a1) = 1, (a1, a2) = -1, long roots 2 / adjacent -1
    t = LieType("B", 5)
    roots = simple_roots(t)
    assert inner(t, roots[0], roots[0]) == 1
    assert inner(t, roots[0], roots[1]) == -1
    for i in range(1, 5):
        assert inner(t, roots[i], roots[i]) == 2
        if i + 1 < 5:
            assert inner(t, roots[i], roots[i + 1]) == -1
    # C: (a1, a1) = 4, (a1, a2) = -2
    t = LieType("C", 5)
    roots = simple_roots(t)
    assert inner(t, roots[0], roots[0]) == 4
    assert inner(t, roots[0], roots[1]) == -2
    # D: (a1, a1) = 2, (a1, a2) = 0, (a1, a3) = -1
    t = LieType("D", 5)
    roots = simple_roots(t)
    assert inner(t, roots[0], roots[0]) == 2
    assert inner(t, roots[0], roots[1]) == 0
    assert inner(t, roots[0], roots[2]) == -1
    # bilinearity sanity: (v, v) = 0 for v = 0
    zero = tuple(Fraction(0) for _ in range(5))
    assert inner(t, zero, zero) == 0


def test_inner_dimension_mismatch():
    t = LieType("B", 3)
    with pytest.raises(ValueError):
        inner(t, (F(1), F(0)), (F(1), F(0), F(0)))


@pytest.mark.parametrize("t", ALL_TYPES)
def test_coroot_pairing_is_kronecker(t):
    fw = fundamental_weights(t)
    roots = simple_roots(t)
    for i, w in enumerate(fw):
        for j, a in enumerate(roots):
            val = 2 * inner(t, w, a) / inner(t, a, a)
            assert val == (1 if i == j else 0)


def test_fundamental_weights_b():
    # w_l telescopes to e_1; w_1 is half the all-ones vector.  The norm
    # (w_i, w_i) = l-i+1 holds for i >= 2; the spin node has norm l/4
    # (the coroot condition leaves no other choice).
    for l in (4, 12):
        t = LieType("B", l)
        fw = fundamental_weights(t)
        assert fw[l - 1] == tuple([F(1)] + [F(0)] * (l - 1))
        assert fw[0] == tuple([F(1, 2)] * l)
        assert inner(t, fw[0], fw[0]) == F(l, 4)
        for i in range(1, l):
            assert inner(t, fw[i], fw[i]) == l - (i + 1) + 1


def test_fundamental_weight_norms_c_d():
    t = LieType("C", 12)
    for i, w in enumerate(fundamental_weights(t)):
        assert inner(t, w, w) == 12 - (i + 1) + 1
    t = LieType("D", 12)
    fw = fundamental_weights(t)
    assert inner(t, fw[0], fw[0]) == F(12, 4)
    assert inner(t, fw[1], fw[1]) == F(12, 4)
    for i in range(2, 12):
        assert inner(t, fw[i], fw[i]) == 12 - (i + 1) + 1


@pytest.mark.parametrize("t", ALL_TYPES)
def test_delta_two_ways(t):
    assert delta(t) == half_sum_positive_roots(t)


def test_delta_pairings():
    t = LieType("B", 9)
    roots = simple_roots(t)
    d = delta(t)
    assert inner(t, roots[0], d) == F(1, 2)
    for a in roots[1:]:
        assert inner(t, a, d) == 1
    t = LieType("C", 9)
    roots = simple_roots(t)
    d = delta(t)
    assert inner(t, roots[0], d) == 2
    for a in roots[1:]:
        assert inner(t, a, d) == 1


def test_delta_pairings_d():
    # The fork nodes pair to 1 with delta (not 2): delta = sum of the
    # fundamental weights gives (alpha_i, delta) = (alpha_i, alpha_i)/2 = 1
    # for every node of D since all D-roots have squared length 2.
    for l in (5, 12):
        t = LieType("D", l)
        roots = simple_roots(t)
        d = delta(t)
        for a in roots:
            assert inner(t, a, d) == 1


@pytest.mark.parametrize("t,count", [
    (LieType("A", 3), 6),
    (LieType("B", 12), 144),
    (LieType("C", 12), 144),
    (LieType("D", 12), 132),
])
def test_positive_root_counts(t, count):
    assert len(positive_roots(t)) == count


@pytest.mark.parametrize("t", ALL_TYPES)
def test_positive_roots_are_nonneg_root_combinations(t):
    simple = set(simple_roots(t))
    for beta in positive_roots(t):
        coords = root_coords(t, beta)
        assert all(c >= 0 and c.denominator == 1 for c in coords)
    for a in simple_roots(t):
        assert a in set(positive_roots(t))


def test_root_coords_examples():
    # B: w_l = a_l + ... + a_1, i.e. all-ones root coordinates
    t = LieType("B", 12)
    assert to_root_coords(t, fundamental_weight(t, 12)) == tuple([F(1)] * 12)
    # zero weight
    assert to_root_coords(t, zero_weight(t)) == tuple([F(0)] * 12)
    # A: w_1 = (1/(l+1)) (l*a_1 + (l-1)*a_2 + ... + 1*a_l)
    l = 7
    t = LieType("A", l)
    coords = to_root_coords(t, fundamental_weight(t, 1))
    assert coords == tuple(F(l - k, l + 1) for k in range(l))


@pytest.mark.parametrize("t", ALL_TYPES)
def test_root_coords_roundtrip(t):
    import random

    rng = random.Random(20240915)
    for _ in range(25):
        w = Weight(tuple(rng.randint(-3, 4) for _ in range(t.rank)))
        coords = to_root_coords(t, w)
        assert to_weight(t, coords) == w


def test_to_weight_rejects_non_lattice():
    t = LieType("B", 4)
    with pytest.raises(ValueError):
        to_weight(t, (Fraction(1, 3), 0, 0, 0))


def test_dominance_order():
    t = LieType("B", 12)
    lam = Weight((0,) * 11 + (3,))
    # w10 + w12 has higher level than 3*w12; not below it
    assert dominance_difference(t, lam, Weight((0,) * 9 + (1, 0, 1))) is None
    # but w10 (= e1+e2+e3) and w11+w12 (= 2e1+e2) are below 3*w12 = 3e1
    assert preceq(t, Weight((0,) * 9 + (1, 0, 0)), lam)
    mu = Weight((0,) * 10 + (1, 1))
    assert preceq(t, mu, lam)
    assert not preceq(t, lam, mu)


def test_cartan_matrix_shape():
    t = LieType("D", 4)
    mat = cartan_matrix(t)
    assert mat[0][0] == 2
    assert mat[0][1] == 0  # fork tips are not adjacent
    assert mat[0][2] == -1
    t = LieType("C", 3)
    mat = cartan_matrix(t)
    # alpha_1 long: 2(a1,a2)/(a2,a2) = -2, but 2(a2,a1)/(a1,a1) = -1
    assert mat[0][1] == -2
    assert mat[1][0] == -1


def test_euclidean_realization_consistency():
    t = LieType("A", 5)
    w = Weight((1, 0, 0, 0, 1))
    v = to_euclidean(t, w)
    assert sum(v) == 0
    roots = simple_roots(t)
    for i, a in enumerate(roots):
        pair = 2 * inner(t, v, a) / inner(t, a, a)
        assert pair == w.coeffs[i]
