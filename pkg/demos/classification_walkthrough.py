#!/usr/bin/env python3
"""Walk through the certified classification of small-dimension weights.

The classifier searches the finite frontier left after orbit-length
certificates prune interior support patterns, then decides each
candidate: proven closed form, characteristic-zero upper bound, orbit
certificates, or an every-characteristic lower bound.  Whatever cannot
be decided is reported as formula-dependent rather than guessed.

Run:  python3 demos/classification_walkthrough.py
"""

from weylkit.cartan import LieType
from weylkit.classify import classify_admissible, is_admissible
from weylkit.cartan import weight_from_dict


def main():
    t = LieType("B", 12)
    rep = classify_admissible(t)
    print(f"== {t}, bound l^4 = {rep.bound} ==")
    print("admissible:", ", ".join(str(w) for w in rep.admissible))
    print("\nfrontier rejections (first five of", len(rep.audit), "audit entries):")
    for entry in rep.audit[:5]:
        print(f"  [{entry.rule}] {entry.subject}: orbit {entry.certificate.value}")
    print("\nundecidable without a characteristic-p dimension formula:")
    for w in rep.formula_dependent:
        v = next(v for v in rep.verdicts if v.weight == w)
        print(f"  {w}: characteristic-zero dimension {v.dimension} exceeds the bound,")
        print(f"      but no orbit below it is long enough to certify exclusion")

    print("\n== individual verdicts ==")
    b16, b17 = LieType("B", 16), LieType("B", 17)
    for t_, node in ((b16, 1), (b17, 1)):
        v = is_admissible(t_, weight_from_dict(t_, {node: 1}))
        extra = f"dim {v.dimension}" if v.dimension else f"orbit {v.certificate.value}"
        print(f"  {t_} w1: {v.status} ({extra}; bound {t_.rank ** 4})")

    print("\n== family A at rank 16, characteristic 5 ==")
    a16 = LieType("A", 16)
    rep = classify_admissible(a16, p=5)
    print("admissible:", ", ".join(str(w) for w in rep.admissible))
    for v in rep.verdicts:
        if v.note and v.status == "admissible":
            print(f"\n  note on {v.weight}: {v.note}")


if __name__ == "__main__":
    main()
