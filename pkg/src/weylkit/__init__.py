"""Exact-arithmetic toolkit for classical root systems.

Computes weight multiplicities (Freudenthal recursion), Weyl-orbit
lengths, module dimensions (orbit sums cross-checked against the Weyl
product formula) and the classification of dominant weights whose
irreducible modules stay below a rank-polynomial dimension bound.

Everything is exact: integers are arbitrary precision, intermediate
vector arithmetic is rational.  No floating point is used anywhere.
"""

from .cartan import LieType, Weight
from .weylgrp import ParabolicType, weyl_order, stabilizer_type, orbit_length, orbit_enumerate
from .freudenthal import (
    DominantLattice,
    MultiplicityTable,
    dominant_lattice,
    multiplicity,
    multiplicity_table,
    dim_weyl_module,
    dim_weyl_product,
)
from .closedform import epsilon_p, steinberg_decompose, dim_closed, formula_registry
from .classify import (
    AdmissibilityBound,
    Verdict,
    AdmissibleReport,
    coeff_sequence,
    is_admissible,
    classify_admissible,
)

__version__ = "0.1.0"
