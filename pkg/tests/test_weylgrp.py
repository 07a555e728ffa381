"""Weyl orders, parabolic stabilizers, orbit lengths vs. brute enumeration."""

import random
from math import factorial

import pytest

from weylkit.cartan import LieType, Weight, fundamental_weight, weight_from_dict, zero_weight
from weylkit.weylgrp import (
    ParabolicType,
    dominant_representative,
    orbit_enumerate,
    orbit_length,
    simple_reflection,
    stabilizer_type,
    weyl_order,
)


def test_weyl_orders():
    assert weyl_order(LieType("A", 15)) == factorial(16)
    assert weyl_order(LieType("B", 12)) == 2**12 * factorial(12) == 1961990553600
    assert weyl_order(LieType("C", 12)) == 2**12 * factorial(12)
    assert weyl_order(LieType("D", 12)) == 2**11 * factorial(12) == 980995276800


def test_stabilizer_examples():
    # B12, w12: zero nodes 1..11 form one B-component
    t = LieType("B", 12)
    assert stabilizer_type(t, fundamental_weight(t, 12)) == ParabolicType((("B", 11),))
    assert stabilizer_type(t, weight_from_dict(t, {11: 1, 12: 1})) == ParabolicType((("B", 10),))
    # D12, w10: fork component D9 plus the 2-chain {11,12}
    t = LieType("D", 12)
    assert stabilizer_type(t, fundamental_weight(t, 10)) == ParabolicType((("D", 9), ("A", 2)))
    # strictly dominant weight: trivial stabilizer
    t = LieType("C", 5)
    assert stabilizer_type(t, Weight((1, 2, 1, 1, 3))) == ParabolicType(())
    assert stabilizer_type(t, Weight((1, 2, 1, 1, 3))).order() == 1


def test_stabilizer_conventions():
    # B1 = C1 = A1 at the short/long end
    t = LieType("B", 5)
    st = stabilizer_type(t, Weight((0, 1, 1, 1, 1)))
    assert st == ParabolicType((("A", 1),))
    # D: fork tips without the junction give two separate A1 factors
    t = LieType("D", 6)
    st = stabilizer_type(t, Weight((0, 0, 1, 1, 1, 1)))
    assert st == ParabolicType((("A", 1), ("A", 1)))
    # D3-shaped component is reported as A3 (same group order 24)
    st = stabilizer_type(t, Weight((0, 0, 0, 1, 1, 1)))
    assert st == ParabolicType((("A", 3),))
    assert st.order() == 24
    # a component through the fork with >= 4 nodes is honest type D
    st = stabilizer_type(t, Weight((0, 0, 0, 0, 1, 1)))
    assert st == ParabolicType((("D", 4),))
    assert st.order() == 2**3 * factorial(4)


def test_stabilizer_rejects_non_dominant():
    t = LieType("B", 4)
    with pytest.raises(ValueError):
        stabilizer_type(t, Weight((1, -1, 0, 0)))


def test_orbit_length_examples():
    # C12, w10: 2^3 * 12*11*10 / 6 = 1760
    t = LieType("C", 12)
    assert orbit_length(t, fundamental_weight(t, 10)) == 1760
    # B12, 3*w12: stabilizer B11, orbit 2l = 24
    t = LieType("B", 12)
    assert orbit_length(t, weight_from_dict(t, {12: 3})) == 24
    # A15, w3: stabilizer A2 x A12, orbit 16!/(3! 13!) = 560
    t = LieType("A", 15)
    assert orbit_length(t, fundamental_weight(t, 3)) == 560
    # zero weight: full stabilizer
    for t in (LieType("A", 5), LieType("B", 7), LieType("D", 9)):
        assert orbit_length(t, zero_weight(t)) == 1


def test_orbit_enumerate_examples():
    t = LieType("B", 2)
    orb = orbit_enumerate(t, fundamental_weight(t, 2))
    assert len(orb) == 4
    t = LieType("A", 2)
    assert len(orbit_enumerate(t, fundamental_weight(t, 1))) == 3
    t = LieType("D", 4)
    assert orbit_enumerate(t, zero_weight(t)) == {zero_weight(t)}


def test_orbit_enumerate_rank_guard():
    t = LieType("B", 8)
    with pytest.raises(ValueError):
        orbit_enumerate(t, fundamental_weight(t, 1))


def _random_dominant(rng, rank, max_coeff=3):
    return Weight(tuple(rng.randint(0, max_coeff) for _ in range(rank)))


@pytest.mark.parametrize("family", ["A", "B", "C", "D"])
def test_orbit_oracle_small_ranks(family):
    """|orbit_enumerate| == orbit_length for fundamentals and random weights."""
    rng = random.Random(f"orbit-{family}")
    min_rank = {"A": 2, "B": 2, "C": 2, "D": 3}[family]
    ranks = list(range(min_rank, 7))
    for rank in ranks:
        t = LieType(family, rank)
        for i in range(1, rank + 1):
            w = fundamental_weight(t, i)
            assert len(orbit_enumerate(t, w)) == orbit_length(t, w)
    for _ in range(20):
        rank = rng.choice(ranks)
        t = LieType(family, rank)
        w = _random_dominant(rng, rank)
        assert len(orbit_enumerate(t, w)) == orbit_length(t, w)


@pytest.mark.parametrize("family", ["A", "B", "C", "D"])
def test_orbit_length_divides_weyl_order(family):
    rng = random.Random(f"divis-{family}")
    for rank in range(4, 17, 3):
        if rank < {"A": 1, "B": 2, "C": 2, "D": 3}[family]:
            continue
        t = LieType(family, rank)
        order = weyl_order(t)
        for _ in range(15):
            w = _random_dominant(rng, rank, max_coeff=2)
            st = stabilizer_type(t, w)
            l = orbit_length(t, w)
            assert l * st.order() == order
            assert st.node_count() == sum(1 for c in w.coeffs if c == 0)


@pytest.mark.parametrize("l", [12, 13, 14])
def test_d_wedge4_orbit_length(l):
    """Stabilizer computation settles the ambiguous tabulated entry: the
    orbit of the fourth-from-the-end fundamental in D has length
    2^4 l(l-1)(l-2)(l-3)/24 (stabilizer D_(l-4) x A_3), not 2^2 ... /24."""
    t = LieType("D", l)
    w = fundamental_weight(t, l - 3)
    assert stabilizer_type(t, w) == ParabolicType((("D", l - 4), ("A", 3)))
    assert orbit_length(t, w) == 2**4 * l * (l - 1) * (l - 2) * (l - 3) // 24


def test_dominant_representative_matches_reflections():
    rng = random.Random("domrep")
    for t in (LieType("A", 4), LieType("B", 4), LieType("C", 4), LieType("D", 4)):
        for _ in range(40):
            w = Weight(tuple(rng.randint(-3, 3) for _ in range(4)))
            rep = dominant_representative(t, w)
            assert rep.is_dominant()
            assert rep in orbit_enumerate(t, rep) and w in orbit_enumerate(t, rep)


def test_reflection_is_involution():
    t = LieType("D", 5)
    w = Weight((2, 0, 1, 3, 1))
    for i in range(5):
        assert simple_reflection(t, simple_reflection(t, w, i), i) == w
