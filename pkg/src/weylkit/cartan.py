"""Root data for the classical families A, B, C, D.

Node labels run in the reversed direction compared to the common
textbook convention: node 1 sits at the short/long end of the B/C
diagram and at one fork tip of the D diagram, node ``l`` at the far
end of the chain.  Concretely, with ``{e_1, ..., e_l}`` an orthogonal
basis (A lives in ``l+1`` coordinates):

    A:  alpha_i = e_i - e_{i+1}
    B:  alpha_1 = e_l,            alpha_i = e_{l-i+1} - e_{l-i+2}
    C:  alpha_1 = 2 e_l,          alpha_i = e_{l-i+1} - e_{l-i+2}
    D:  alpha_1 = e_{l-1} + e_l,  alpha_i = e_{l-i+1} - e_{l-i+2}

The bilinear form is the Euclidean dot product, except for A where it
is scaled by 1/2 so that (alpha_i, alpha_i) = 1.  The scaling cancels
out of every multiplicity, orbit and dimension computation; it only
fixes the normalization of reported inner products.

Fundamental weights are defined through the coroot pairing
``2 (w_i, alpha_j) / (alpha_j, alpha_j) = delta_ij`` (the naive pairing
``(w_i, alpha_j) = delta_ij`` fails at end nodes whose roots do not
have squared length 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

FAMILIES = ("A", "B", "C", "D")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class LieType:
    """A classical family (A/B/C/D) together with its rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"{self.family}_{self.rank} is degenerate; "
                f"rank must be >= {_MIN_RANK[self.family]} for type {self.family}"
            )

    @property
    def ambient_dim(self) -> int:
        # A_l is realised inside the sum-zero hyperplane of R^(l+1)
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Integer coefficient vector in the fundamental-weight basis."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_p_restricted(self, p: int) -> bool:
        return all(0 <= c <= p - 1 for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def level(self) -> int:
        """Sum of the coefficients (crude size measure)."""
        return sum(self.coeffs)

    def support(self) -> tuple[int, ...]:
        """1-based node indices with a nonzero coefficient."""
        return tuple(i + 1 for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 1:
                terms.append(f"w{i + 1}")
            elif c:
                terms.append(f"{c}*w{i + 1}")
        return "+".join(terms)


def fundamental_weight(t: LieType, i: int) -> Weight:
    """The i-th fundamental weight (1-based node index) as a Weight."""
    if not 1 <= i <= t.rank:
        raise ValueError(f"node index {i} out of range 1..{t.rank}")
    return Weight(tuple(1 if j == i - 1 else 0 for j in range(t.rank)))


def weight_from_dict(t: LieType, coeffs: dict[int, int]) -> Weight:
    """Build a Weight from a sparse {node: coefficient} mapping."""
    vec = [0] * t.rank
    for i, c in coeffs.items():
        if not 1 <= i <= t.rank:
            raise ValueError(f"node index {i} out of range 1..{t.rank}")
        vec[i - 1] += c
    return Weight(tuple(vec))


def zero_weight(t: LieType) -> Weight:
    return Weight((0,) * t.rank)


def _e(dim: int, *terms) -> Vector:
    """Vector from (index, value) terms in a `dim`-dimensional space (1-based)."""
    v = [Fraction(0)] * dim
    for idx, val in terms:
        v[idx - 1] += Fraction(val)
    return tuple(v)


@lru_cache(maxsize=None)
def simple_roots(t: LieType) -> tuple[Vector, ...]:
    """Simple roots alpha_1..alpha_l in orthogonal coordinates."""
    l, d = t.rank, t.ambient_dim
    if t.family == "A":
        return tuple(_e(d, (i, 1), (i + 1, -1)) for i in range(1, l + 1))
    tail = tuple(_e(d, (l - i + 1, 1), (l - i + 2, -1)) for i in range(2, l + 1))
    if t.family == "B":
        head = _e(d, (l, 1))
    elif t.family == "C":
        head = _e(d, (l, 2))
    else:  # D
        head = _e(d, (l - 1, 1), (l, 1))
    return (head,) + tail


def inner(t: LieType, u: Vector, v: Vector) -> Fraction:
    """Bilinear form on the ambient space (A is scaled so roots have norm 1)."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    dot = sum(a * b for a, b in zip(u, v))
    return Fraction(dot, 2) if t.family == "A" else Fraction(dot)


@lru_cache(maxsize=None)
def fundamental_weights(t: LieType) -> tuple[Vector, ...]:
    """Fundamental weights w_1..w_l in orthogonal coordinates.

    Characterised by 2 (w_i, alpha_j) / (alpha_j, alpha_j) = delta_ij.
    """
    l, d = t.rank, t.ambient_dim
    half = Fraction(1, 2)
    out = []
    if t.family == "A":
        # w_i = e_1 + ... + e_i - (i/(l+1)) (e_1 + ... + e_{l+1})
        for i in range(1, l + 1):
            shift = Fraction(i, l + 1)
            out.append(tuple(Fraction(1) - shift if j < i else -shift for j in range(d)))
    elif t.family == "B":
        out.append(tuple(half for _ in range(d)))
        for i in range(2, l + 1):
            k = l - i + 1
            out.append(tuple(Fraction(1) if j < k else Fraction(0) for j in range(d)))
    elif t.family == "C":
        for i in range(1, l + 1):
            k = l - i + 1
            out.append(tuple(Fraction(1) if j < k else Fraction(0) for j in range(d)))
    else:  # D
        out.append(tuple(half for _ in range(d)))
        out.append(tuple(half if j < d - 1 else -half for j in range(d)))
        for i in range(3, l + 1):
            k = l - i + 1
            out.append(tuple(Fraction(1) if j < k else Fraction(0) for j in range(d)))
    return tuple(out)


@lru_cache(maxsize=None)
def positive_roots(t: LieType) -> tuple[Vector, ...]:
    """All positive roots; counts are l(l+1)/2 (A), l^2 (B/C), l(l-1) (D)."""
    l, d = t.rank, t.ambient_dim
    roots = []
    if t.family == "A":
        for i in range(1, l + 2):
            for j in range(i + 1, l + 2):
                roots.append(_e(d, (i, 1), (j, -1)))
        return tuple(roots)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            roots.append(_e(d, (i, 1), (j, -1)))
            roots.append(_e(d, (i, 1), (j, 1)))
    if t.family == "B":
        roots.extend(_e(d, (i, 1)) for i in range(1, l + 1))
    elif t.family == "C":
        roots.extend(_e(d, (i, 2)) for i in range(1, l + 1))
    return tuple(roots)


@lru_cache(maxsize=None)
def delta(t: LieType) -> Vector:
    """Sum of the fundamental weights; equals half the sum of positive roots."""
    return _vec_sum(fundamental_weights(t))


def half_sum_positive_roots(t: LieType) -> Vector:
    return tuple(c / 2 for c in _vec_sum(positive_roots(t)))


def _vec_sum(vs) -> Vector:
    acc = [Fraction(0)] * len(vs[0])
    for v in vs:
        for i, c in enumerate(v):
            acc[i] += c
    return tuple(acc)


def coroot_pairing(t: LieType, v: Vector, alpha: Vector) -> Fraction:
    """2 (v, alpha) / (alpha, alpha)."""
    return 2 * inner(t, v, alpha) / inner(t, alpha, alpha)


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """C[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j); row i expresses
    alpha_i in the fundamental-weight basis."""
    roots = simple_roots(t)
    mat = []
    for a in roots:
        row = []
        for b in roots:
            val = coroot_pairing(t, a, b)
            assert val.denominator == 1
            row.append(int(val))
        mat.append(tuple(row))
    return tuple(mat)


@lru_cache(maxsize=None)
def adjacency(t: LieType) -> dict[int, tuple[int, ...]]:
    """Dynkin-diagram neighbours per node (1-based), from the Cartan matrix."""
    mat = cartan_matrix(t)
    l = t.rank
    return {
        i: tuple(j for j in range(1, l + 1) if j != i and mat[i - 1][j - 1] != 0)
        for i in range(1, l + 1)
    }


def to_euclidean(t: LieType, w: Weight) -> Vector:
    """Realise a Weight as a vector in orthogonal coordinates."""
    fw = fundamental_weights(t)
    acc = [Fraction(0)] * t.ambient_dim
    for c, v in zip(w.coeffs, fw):
        if c:
            for i, x in enumerate(v):
                acc[i] += c * x
    return tuple(acc)


def euclidean_to_coeffs(t: LieType, v: Vector) -> tuple[Fraction, ...]:
    """Coefficients of v against the fundamental weights (coroot pairing)."""
    return tuple(coroot_pairing(t, v, a) for a in simple_roots(t))


def root_coords(t: LieType, v: Vector) -> tuple[Fraction, ...]:
    """Coordinates of v in the simple-root basis.

    Uses the triangular structure of the simple systems; raises if v is
    not in the rational span of the roots.
    """
    l = t.rank
    if t.family == "A":
        # v must have coordinate sum zero; c_k = v_1 + ... + v_k
        s = Fraction(0)
        out = []
        for k in range(l):
            s += v[k]
            out.append(s)
        if s + v[l] != 0:
            raise ValueError("vector is not in the root space (coordinate sum != 0)")
        return tuple(out)
    # partial sums s_k = v_1 + ... + v_k
    s = [Fraction(0)] * (l + 1)
    for k in range(1, l + 1):
        s[k] = s[k - 1] + v[k - 1]
    if t.family == "B":
        c1 = s[l]
    elif t.family == "C":
        c1 = s[l] / 2
    else:  # D
        c1 = s[l] / 2
    out = [c1]
    if t.family == "D":
        out.append((s[l - 2] + v[l - 2] - v[l - 1]) / 2)
        out.extend(s[l - i + 1] for i in range(3, l + 1))
    else:
        out.extend(s[l - i + 1] for i in range(2, l + 1))
    return tuple(out)


def to_root_coords(t: LieType, w: Weight) -> tuple[Fraction, ...]:
    """Express a Weight in simple-root coordinates."""
    return root_coords(t, to_euclidean(t, w))


def to_weight(t: LieType, coords) -> Weight:
    """Inverse of to_root_coords; rejects vectors outside the weight lattice."""
    coords = tuple(Fraction(c) for c in coords)
    if len(coords) != t.rank:
        raise ValueError(f"expected {t.rank} root coordinates, got {len(coords)}")
    roots = simple_roots(t)
    acc = [Fraction(0)] * t.ambient_dim
    for c, a in zip(coords, roots):
        for i, x in enumerate(a):
            acc[i] += c * x
    cf = euclidean_to_coeffs(t, tuple(acc))
    if any(x.denominator != 1 for x in cf):
        raise ValueError(f"root coordinates {coords} are not in the weight lattice")
    return Weight(tuple(int(x) for x in cf))


def dominance_difference(t: LieType, lam: Weight, mu: Weight):
    """Root coordinates of lam - mu, or None if mu is not <= lam.

    mu <= lam holds iff every coordinate is a nonnegative integer.
    """
    diff = root_coords(t, tuple(a - b for a, b in zip(to_euclidean(t, lam), to_euclidean(t, mu))))
    if all(c >= 0 and c.denominator == 1 for c in diff):
        return diff
    return None


def preceq(t: LieType, mu: Weight, lam: Weight) -> bool:
    """Dominance order: lam - mu a nonnegative integer root combination."""
    return dominance_difference(t, lam, mu) is not None
