"""Weyl-group orders, parabolic stabilizers and orbit lengths.

The stabilizer of a dominant weight is the parabolic subgroup generated
by the simple reflections at its zero coefficients.  Its type is read
off the induced sub-diagram: each connected component of the zero set
is classified as A/B/C/D according to which distinguished end nodes it
contains.  Orbit lengths are the exact quotient |W| / |Stab|.

A brute-force orbit enumeration (closure under simple reflections) is
kept as an oracle for small ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .cartan import LieType, Weight, adjacency, cartan_matrix

ORBIT_ENUM_MAX_RANK = 7


@dataclass(frozen=True)
class ParabolicType:
    """Multiset of irreducible factors (family, rank), canonically sorted."""

    factors: tuple[tuple[str, int], ...]

    def __init__(self, factors):
        object.__setattr__(self, "factors", tuple(sorted(factors)))

    def order(self) -> int:
        n = 1
        for fam, k in self.factors:
            n *= _component_order(fam, k)
        return n

    def node_count(self) -> int:
        return sum(k for _, k in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " x ".join(f"{fam}{k}" for fam, k in self.factors)


def weyl_order(t: LieType) -> int:
    """|W|: (l+1)! for A, 2^l l! for B/C, 2^(l-1) l! for D."""
    l = t.rank
    if t.family == "A":
        return factorial(l + 1)
    if t.family in ("B", "C"):
        return 2**l * factorial(l)
    return 2 ** (l - 1) * factorial(l)


def _component_order(family: str, k: int) -> int:
    if family == "A":
        return factorial(k + 1)
    if family in ("B", "C"):
        return 2**k * factorial(k)
    return 2 ** (k - 1) * factorial(k)


def stabilizer_type(t: LieType, w: Weight) -> ParabolicType:
    """Parabolic type of Stab_W(w) for dominant w, from its zero nodes.

    Conventions for degenerate components: B1 = C1 = A1; a D-component
    needs both fork tips 1, 2 and the junction 3 (D2 arises as two A1
    factors automatically since the tips are not adjacent); D3 is
    reported as A3 (same reflection group).
    """
    if not w.is_dominant():
        raise ValueError(f"weight {w} is not dominant")
    zeros = {i + 1 for i, c in enumerate(w.coeffs) if c == 0}
    adj = adjacency(t)
    factors = []
    remaining = set(zeros)
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            node = frontier.pop()
            for nb in adj[node]:
                if nb in remaining:
                    remaining.remove(nb)
                    comp.add(nb)
                    frontier.append(nb)
        factors.append(_classify_component(t, comp))
    return ParabolicType(tuple(factors))


def _classify_component(t: LieType, comp: set[int]) -> tuple[str, int]:
    k = len(comp)
    if t.family in ("B", "C") and 1 in comp:
        return ("A", 1) if k == 1 else (t.family, k)
    if t.family == "D" and {1, 2, 3} <= comp:
        return ("A", 3) if k == 3 else ("D", k)
    return ("A", k)


def orbit_length(t: LieType, w: Weight) -> int:
    """|W . w| = |W| / |Stab_W(w)|; the division is exact by Lagrange."""
    order = weyl_order(t)
    stab = stabilizer_type(t, w).order()
    q, r = divmod(order, stab)
    if r:
        raise AssertionError(f"stabilizer order {stab} does not divide |W| = {order}")
    return q


def simple_reflection(t: LieType, w: Weight, i: int) -> Weight:
    """Reflection of w along alpha_i, in fundamental-weight coordinates."""
    row = cartan_matrix(t)[i]
    a = w.coeffs[i]
    return Weight(tuple(c - a * row[j] for j, c in enumerate(w.coeffs)))


def orbit_enumerate(t: LieType, w: Weight) -> set[Weight]:
    """Full W-orbit of w by closure under the simple reflections.

    Guarded to small ranks; orbit sizes grow like 2^l l!.
    """
    if t.rank > ORBIT_ENUM_MAX_RANK:
        raise ValueError(
            f"orbit enumeration is limited to rank <= {ORBIT_ENUM_MAX_RANK} "
            f"(got {t.rank}); use orbit_length instead"
        )
    seen = {w}
    frontier = [w]
    while frontier:
        v = frontier.pop()
        for i in range(t.rank):
            if v.coeffs[i] == 0:
                continue
            u = simple_reflection(t, v, i)
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen


def dominant_representative(t: LieType, w: Weight) -> Weight:
    """The unique dominant weight in the W-orbit of w."""
    cur = w
    mat = cartan_matrix(t)
    while True:
        for i, c in enumerate(cur.coeffs):
            if c < 0:
                row = mat[i]
                cur = Weight(tuple(x - c * row[j] for j, x in enumerate(cur.coeffs)))
                break
        else:
            return cur
