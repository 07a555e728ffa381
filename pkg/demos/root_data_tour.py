#!/usr/bin/env python3
"""A tour of the root data: the four classical families, their simple
roots in the reversed node order, inner-product normalizations, and the
two independent constructions of the special weight delta.

Run:  python3 demos/root_data_tour.py
"""

from weylkit.cartan import (
    LieType,
    delta,
    fundamental_weights,
    half_sum_positive_roots,
    inner,
    positive_roots,
    simple_roots,
    to_root_coords,
    fundamental_weight,
)


def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


def main():
    print("Node 1 sits at the short/long end of B/C and at a fork tip of D;")
    print("node l is at the far end of the chain.\n")

    for t in (LieType("A", 4), LieType("B", 4), LieType("C", 4), LieType("D", 4)):
        print(f"== {t} ==")
        roots = simple_roots(t)
        for i, a in enumerate(roots, 1):
            print(f"  alpha_{i} = {show(a)}")
        print("  squared lengths:", [str(inner(t, a, a)) for a in roots])
        print(f"  positive roots: {len(positive_roots(t))}")

        d1 = delta(t)
        d2 = half_sum_positive_roots(t)
        assert d1 == d2
        print(f"  delta = sum of fundamental weights = half sum of positive roots = {show(d1)}")
        pairings = [str(inner(t, a, d1)) for a in roots]
        print(f"  (alpha_i, delta) = {pairings}")
        print()

    print("For D the fork nodes pair to 1 with delta, like every other node:")
    t = LieType("D", 12)
    for i in (1, 2, 3):
        val = inner(t, simple_roots(t)[i - 1], delta(t))
        print(f"  (alpha_{i}, delta) = {val}")
    print()

    print("Fundamental weights against the coroots (B4):")
    t = LieType("B", 4)
    roots = simple_roots(t)
    for i, w in enumerate(fundamental_weights(t), 1):
        row = [str(2 * inner(t, w, a) / inner(t, a, a)) for a in roots]
        print(f"  w_{i} = {show(w)}   coroot pairings {row}")
    print()

    print("Weights can be moved between the fundamental-weight basis and")
    print("simple-root coordinates; the top node of B telescopes to all ones:")
    t = LieType("B", 6)
    w = fundamental_weight(t, 6)
    print(f"  {w} in root coordinates: {show(to_root_coords(t, w))}")


if __name__ == "__main__":
    main()
