"""Dominant weight lattices, Freudenthal multiplicities, module dimensions.

The recursion for the multiplicity of mu in the highest-weight module
with highest weight lam is

    m(mu) = 2 * sum_{alpha > 0} sum_{i >= 1} (mu + i*alpha, alpha) * m(mu + i*alpha)
            / [ (lam, lam) - (mu, mu) + 2*(lam - mu, delta) ]

with m(lam) = 1.  Non-dominant weights appearing in the strings are
resolved to their dominant Weyl-chamber representative (multiplicities
are W-invariant); strings stop at the first weight outside the module
(weight sets are saturated, so strings have no gaps).

Internally all vectors are integer tuples in orthogonal coordinates,
scaled by l+1 (type A) or 2 (B/C/D) to clear denominators.  The global
scale and the type-A form normalization cancel out of every ratio, so
the whole computation runs on machine-fast big integers.

The dimension comes out two independent ways: as the orbit-length sum
over the dominant lattice, and by the Weyl product formula
prod (lam + delta, alpha) / (delta, alpha).  The two must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import (
    LieType,
    Weight,
    delta,
    fundamental_weights,
    positive_roots,
)
from .weylgrp import orbit_length

BOX_ORACLE_MAX_RANK = 6


@dataclass(frozen=True)
class DominantLattice:
    """All dominant weights mu <= highest, ordered from the top down."""

    lietype: LieType
    highest: Weight
    members: tuple[Weight, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, w):
        return w in self.members


@dataclass(frozen=True)
class MultiplicityTable:
    """Multiplicities and orbit lengths for the dominant weights of a module."""

    lietype: LieType
    highest: Weight
    lattice: DominantLattice
    mult: dict[Weight, int]
    orbit: dict[Weight, int]

    def dim(self) -> int:
        return sum(self.mult[w] * self.orbit[w] for w in self.lattice)

    def rows(self):
        """(weight, multiplicity, orbit length) triples, top weight first."""
        return [(w, self.mult[w], self.orbit[w]) for w in self.lattice]


# -- scaled integer root data ------------------------------------------------


class _RootData:
    """Integer-vector realisation of the root data of one LieType."""

    def __init__(self, t: LieType):
        self.t = t
        self.rank = t.rank
        self.dim = t.ambient_dim
        self.scale = t.rank + 1 if t.family == "A" else 2
        s = self.scale
        self.proots = tuple(
            tuple(int(c * s) for c in alpha) for alpha in positive_roots(t)
        )
        self.sdelta = tuple(int(c * s) for c in delta(t))
        self.sfw = tuple(
            tuple(int(c * s) for c in v) for v in fundamental_weights(t)
        )

        # positive roots in sparse form (touched coordinates and their shifts),
        # for fast "subtract a root and test dominance locally" walks
        self.sparse_neg_roots = tuple(
            (
                tuple(i for i, c in enumerate(alpha) if c),
                tuple(-alpha[i] for i in range(self.dim) if alpha[i]),
            )
            for alpha in self.proots
        )

    def weight_vec(self, w: Weight) -> tuple[int, ...]:
        acc = [0] * self.dim
        for c, v in zip(w.coeffs, self.sfw):
            if c:
                for i, x in enumerate(v):
                    acc[i] += c * x
        return tuple(acc)

    def is_dominant(self, v) -> bool:
        fam = self.t.family
        if fam == "A":
            return all(v[i] >= v[i + 1] for i in range(self.dim - 1))
        if fam == "D":
            return all(v[i] >= v[i + 1] for i in range(self.dim - 2)) and v[-2] >= abs(v[-1])
        return all(v[i] >= v[i + 1] for i in range(self.dim - 1)) and v[-1] >= 0

    def dominant_rep(self, v) -> tuple[int, ...]:
        """Dominant representative under the (signed-)permutation action."""
        fam = self.t.family
        if fam == "A":
            return tuple(sorted(v, reverse=True))
        if fam in ("B", "C"):
            return tuple(sorted(map(abs, v), reverse=True))
        # D: even sign changes only; a leftover sign lands on the last entry
        # unless some coordinate vanishes to absorb it
        neg = False
        for x in v:
            if x < 0:
                neg = not neg
        out = sorted(map(abs, v), reverse=True)
        if neg and out[-1]:
            out[-1] = -out[-1]
        return tuple(out)

    def weight_coeffs(self, v) -> tuple[int, ...]:
        """Fundamental-weight coefficients of a scaled lattice vector."""
        fam = self.t.family
        s = self.scale
        l = self.rank
        out = []
        if fam == "A":
            raw = [v[i] - v[i + 1] for i in range(l)]
        else:
            if fam == "B":
                head = 2 * v[l - 1]
            elif fam == "C":
                head = v[l - 1]
            else:
                head = v[l - 2] + v[l - 1]
            raw = [head]
            if fam == "D":
                raw.append(v[l - 2] - v[l - 1])
                raw.extend(v[l - i] - v[l - i + 1] for i in range(3, l + 1))
            else:
                raw.extend(v[l - i] - v[l - i + 1] for i in range(2, l + 1))
        for x in raw:
            q, r = divmod(x, s)
            if r:
                raise AssertionError(f"vector {v} is not in the weight lattice")
            out.append(q)
        return tuple(out)

    def to_weight(self, v) -> Weight:
        return Weight(self.weight_coeffs(v))

    def scaled_root_coords(self, v) -> tuple[int, ...]:
        """scale * (simple-root coordinates of v); type C/D halves stay exact
        because the scale is even."""
        fam = self.t.family
        l = self.rank
        if fam == "A":
            out = []
            acc = 0
            for k in range(l):
                acc += v[k]
                out.append(acc)
            return tuple(out)
        s_part = [0] * (l + 1)
        for k in range(1, l + 1):
            s_part[k] = s_part[k - 1] + v[k - 1]
        if fam == "B":
            c1 = 2 * s_part[l]
        else:
            c1 = s_part[l]
        out = [c1]
        if fam == "D":
            out.append(s_part[l - 2] + v[l - 2] - v[l - 1])
            out.extend(2 * s_part[l - i + 1] for i in range(3, l + 1))
        else:
            out.extend(2 * s_part[l - i + 1] for i in range(2, l + 1))
        return tuple(out)

    def height_diff(self, u, v) -> int:
        """Monotone height of u - v (sum of scaled root coordinates)."""
        diff = tuple(a - b for a, b in zip(u, v))
        return sum(self.scaled_root_coords(diff))


@lru_cache(maxsize=None)
def _root_data(t: LieType) -> _RootData:
    return _RootData(t)


# -- dominant lattice ----------------------------------------------------------


def dominant_lattice(t: LieType, lam: Weight) -> DominantLattice:
    """Dominant weights mu <= lam, by descending closure from the top.

    Walks downward subtracting positive roots, keeping dominant results;
    members come out ordered by increasing depth below lam.  Completeness
    of the closure is certified against the box oracle at small rank.
    """
    members = _lattice_vectors(t, lam)
    rd = _root_data(t)
    return DominantLattice(t, lam, tuple(rd.to_weight(v) for v in members))


def _lattice_vectors(t: LieType, lam: Weight, bound_hook=None) -> list[tuple[int, ...]]:
    """Scaled vectors of the dominant lattice, sorted top-down.

    bound_hook, if given, is called on each new member and may raise to
    abort the walk early (used for orbit-length certificates).
    """
    if not lam.is_dominant():
        raise ValueError(f"highest weight {lam} is not dominant")
    rd = _root_data(t)
    top = rd.weight_vec(lam)
    seen = {top}
    frontier = [top]
    if bound_hook is not None:
        bound_hook(top)
    fam = t.family
    n = rd.dim
    last = n - 1
    sparse = rd.sparse_neg_roots
    while frontier:
        nxt = []
        for v in frontier:
            for pos, shifts in sparse:
                u = list(v)
                for i, d in zip(pos, shifts):
                    u[i] += d
                # v was dominant and only `pos` changed, so it suffices to
                # recheck the chamber conditions around those coordinates
                # (descending pairs, plus u[last] >= 0 for B/C and
                # u[last-1] + u[last] >= 0 for D)
                ok = True
                for i in pos:
                    if i and u[i - 1] < u[i]:
                        ok = False
                        break
                    if i < last and u[i] < u[i + 1]:
                        ok = False
                        break
                    if i >= last - 1:
                        if fam == "D":
                            if u[last - 1] + u[last] < 0:
                                ok = False
                                break
                        elif fam != "A" and u[last] < 0:
                            ok = False
                            break
                if not ok:
                    continue
                ut = tuple(u)
                if ut not in seen:
                    seen.add(ut)
                    nxt.append(ut)
                    if bound_hook is not None:
                        bound_hook(ut)
        frontier = nxt
    return sorted(seen, key=lambda v: rd.height_diff(top, v))


BOX_ORACLE_MAX_VOLUME = 2_000_000


def dominant_lattice_boxed(t: LieType, lam: Weight) -> set[Weight]:
    """Slow oracle for dominant_lattice: enumerate the full coordinate box
    0 <= c_i <= rootcoord(lam)_i of the root lattice below lam."""
    if t.rank > BOX_ORACLE_MAX_RANK:
        raise ValueError(f"box oracle limited to rank <= {BOX_ORACLE_MAX_RANK}")
    if not lam.is_dominant():
        raise ValueError(f"highest weight {lam} is not dominant")
    rd = _root_data(t)
    top = rd.weight_vec(lam)
    # scaled_root_coords carries an extra factor 2 outside family A
    eff = rd.scale if t.family == "A" else 2 * rd.scale
    bounds = [c // eff for c in rd.scaled_root_coords(top)]
    volume = 1
    for b in bounds:
        volume *= b + 1
    if volume > BOX_ORACLE_MAX_VOLUME:
        raise ValueError(f"box volume {volume} too large for the oracle")
    sroots = [
        tuple(int(c * rd.scale) for c in alpha)
        for alpha in _simple_root_vectors(t)
    ]
    found = set()

    def rec(i, vec):
        if i == len(bounds):
            if rd.is_dominant(vec):
                found.add(rd.to_weight(tuple(vec)))
            return
        cur = list(vec)
        for c in range(bounds[i] + 1):
            rec(i + 1, tuple(cur))
            cur = [a - b for a, b in zip(cur, sroots[i])]

    rec(0, top)
    return found


def _simple_root_vectors(t: LieType):
    from .cartan import simple_roots

    return simple_roots(t)


# -- multiplicities ------------------------------------------------------------


@lru_cache(maxsize=512)
def multiplicity_table(t: LieType, lam: Weight) -> MultiplicityTable:
    """Freudenthal multiplicities and orbit lengths for all of the
    dominant lattice of lam."""
    rd = _root_data(t)
    vectors = _lattice_vectors(t, lam)
    top = vectors[0]
    index = {v: k for k, v in enumerate(vectors)}
    mults = _freudenthal(rd, vectors, index)
    weights = [rd.to_weight(v) for v in vectors]
    lattice = DominantLattice(t, lam, tuple(weights))
    mult = {w: m for w, m in zip(weights, mults)}
    orbit = {w: orbit_length(t, w) for w in weights}
    return MultiplicityTable(t, lam, lattice, mult, orbit)


def _freudenthal(rd: _RootData, vectors, index) -> list[int]:
    """Multiplicities along the height-sorted dominant lattice.

    The string term (mu + i*alpha, alpha) is expanded as
    (mu, alpha) + i*(alpha, alpha), so the inner loop takes a dot
    product only once per nonempty string.
    """
    top = vectors[0]
    sdelta = rd.sdelta
    proots = rd.proots
    norms = [_raw(a, a) for a in proots]
    raw_top = _raw(top, top) + 2 * _raw(top, sdelta)
    mults = [1] + [0] * (len(vectors) - 1)
    rep = rd.dominant_rep
    index_get = index.get
    add = int.__add__
    roots_with_norms = list(zip(proots, norms))
    for k in range(1, len(vectors)):
        mu = vectors[k]
        num = 0
        for alpha, na in roots_with_norms:
            nu = tuple(map(add, mu, alpha))
            j = index_get(rep(nu))
            if j is None:
                continue
            # the string is nonempty: now it pays to take the dot product
            pa = _raw(mu, alpha)
            num += (pa + na) * mults[j]
            i = 2
            while True:
                nu = tuple(map(add, nu, alpha))
                j = index_get(rep(nu))
                if j is None:
                    break
                num += (pa + i * na) * mults[j]
                i += 1
        den = raw_top - _raw(mu, mu) - 2 * _raw(mu, sdelta)
        if den <= 0:
            raise AssertionError(f"nonpositive Freudenthal denominator at {mu}")
        val, rem = divmod(2 * num, den)
        if rem or val <= 0:
            raise AssertionError(f"non-integral multiplicity at {mu}: 2*{num}/{den}")
        mults[k] = val
    return mults


def _raw(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def multiplicity(t: LieType, lam: Weight, mu: Weight) -> int:
    """m_lam(mu) in characteristic zero; 0 when mu is not a weight of
    the lam-module."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if not mu.is_dominant():
        raise ValueError(f"{mu} is not dominant")
    table = multiplicity_table(t, lam)
    return table.mult.get(mu, 0)


def dim_weyl_module(t: LieType, lam: Weight) -> int:
    """Module dimension as sum of multiplicity * orbit length."""
    return multiplicity_table(t, lam).dim()


def dim_weyl_product(t: LieType, lam: Weight) -> int:
    """Module dimension by the Weyl product formula (independent oracle)."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    rd = _root_data(t)
    v = rd.weight_vec(lam)
    shifted = tuple(a + b for a, b in zip(v, rd.sdelta))
    num = 1
    den = 1
    for alpha in rd.proots:
        num *= _raw(shifted, alpha)
        den *= _raw(rd.sdelta, alpha)
    q = Fraction(num, den)
    if q.denominator != 1 or q <= 0:
        raise AssertionError(f"Weyl product is not a positive integer: {q}")
    return int(q)
