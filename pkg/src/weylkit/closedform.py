"""Closed dimension formulas with characteristic-p corrections.

Formulas live in a declarative JSON registry (``data/formulas.json``)
rather than hard-coded branches, so gaps are explicit: a weight with no
matching entry gets "unknown", never a guess.  Each entry carries a
weight pattern, a validity condition on (l, p), an integer expression
over ``l``, ``p`` and the divisibility indicator ``eps``, a
proven/conjectural status, and a provenance note.

Pattern language (JSON): keys are node indices as strings, positive
counted from node 1, negative from the right end (-1 is node l, -2 is
node l-1, ...).  The special key "j" is a bound variable matching any
single node in the entry's ``param_range``; expressions may then use
``j``.  For family A an entry also matches the diagram-reversed weight
(duality leaves dimensions invariant).

``eps(m)`` is 1 if the working prime divides m and 0 otherwise; at
p = "generic" every eps vanishes and every p-condition passes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from math import comb, isqrt

from .cartan import LieType, Weight

_REGISTRY_CACHE: dict = {}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def epsilon_p(p: int, m: int) -> int:
    """1 if the prime p divides m, else 0."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if m < 1:
        raise ValueError(f"m = {m} must be positive")
    return 1 if m % p == 0 else 0


def steinberg_decompose(w: Weight, p: int) -> list[Weight]:
    """Base-p digit weights w_0, ..., w_r with w = sum p^k w_k.

    Every digit weight is p-restricted; trailing zeros are trimmed, so r
    is minimal.  The zero weight decomposes as [0].
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    digits = []
    coeffs = list(w.coeffs)
    while any(coeffs):
        digits.append(Weight(tuple(c % p for c in coeffs)))
        coeffs = [c // p for c in coeffs]
    return digits or [Weight(tuple(0 for _ in w.coeffs))]


# -- formula registry ----------------------------------------------------------


@dataclass(frozen=True)
class DimFormula:
    """One registry entry."""

    id: str
    family: str
    pattern: dict[int, int]
    dimension: str
    status: str
    note: str
    p_ne: tuple[int, ...] = ()
    p_gt: str | None = None
    p_ndiv: tuple[str, ...] = ()
    rank_min: int = 1
    param_range: tuple | None = None
    all_p: bool = False
    char0_agrees: bool = True


@dataclass(frozen=True)
class DimClosed:
    """Result of a closed-form lookup."""

    value: int
    status: str
    formula_id: str
    note: str


def _exact_div(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"non-exact division {a}/{b} in formula expression")
    return q


def _eval_dim(expr: str, l: int, p, j=None) -> int:
    def eps(m):
        return 0 if p is None else epsilon_p(p, m)

    ns = {"l": l, "p": p, "j": j, "comb": comb, "eps": eps, "div": _exact_div}
    val = eval(expr, {"__builtins__": {}}, ns)  # registry data is trusted input
    if not isinstance(val, int):
        raise TypeError(f"formula {expr!r} did not evaluate to an integer")
    return val


def formula_registry(path=None) -> tuple[DimFormula, ...]:
    """Load the formula registry (shipped file, or a user-supplied path)."""
    key = path or "__default__"
    if key in _REGISTRY_CACHE:
        return _REGISTRY_CACHE[key]
    if path is None:
        text = resources.files("weylkit").joinpath("data/formulas.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    raw = json.loads(text)
    entries = []
    for e in raw["formulas"]:
        pattern = {}
        param = None
        for k, v in e["pattern"].items():
            if k == "j":
                param = int(v)
            else:
                pattern[int(k)] = int(v)
        if param is not None:
            pattern["j"] = param
        entries.append(
            DimFormula(
                id=e["id"],
                family=e["family"],
                pattern=pattern,
                dimension=e["dimension"],
                status=e.get("status", "proven"),
                note=e.get("note", ""),
                p_ne=tuple(e.get("p_ne", ())),
                p_gt=e.get("p_gt"),
                p_ndiv=tuple(e.get("p_ndiv", ())),
                rank_min=e.get("rank_min", 1),
                param_range=tuple(e["param_range"]) if "param_range" in e else None,
                all_p=e.get("all_p", False),
                char0_agrees=e.get("char0_agrees", True),
            )
        )
    out = tuple(entries)
    _REGISTRY_CACHE[key] = out
    return out


def _resolve_node(k: int, l: int) -> int:
    return k if k > 0 else l + 1 + k


def _match_pattern(entry: DimFormula, w: Weight, l: int):
    """Return the j-binding (or True) if the sparse pattern matches w exactly."""
    support = {i + 1: c for i, c in enumerate(w.coeffs) if c}
    fixed = {}
    j_coeff = None
    for k, v in entry.pattern.items():
        if k == "j":
            j_coeff = v
        else:
            node = _resolve_node(k, l)
            if not 1 <= node <= l:
                return None
            fixed[node] = fixed.get(node, 0) + v
    if j_coeff is None:
        return True if support == fixed else None
    if set(fixed) - set(support):
        return None
    extra = {n: c for n, c in support.items() if n not in fixed or support[n] != fixed[n]}
    # exactly one unmatched node carrying the parametric coefficient
    if len(extra) != 1:
        return None
    (node, coeff), = extra.items()
    if node in fixed or coeff != j_coeff:
        return None
    lo, hi = entry.param_range
    lo = _eval_dim(str(lo), l, None) if isinstance(lo, str) else lo
    hi = _eval_dim(str(hi), l, None) if isinstance(hi, str) else hi
    if not lo <= node <= hi:
        return None
    if any(support.get(n) != c for n, c in fixed.items()):
        return None
    return node


def _condition_holds(entry: DimFormula, l: int, p) -> bool:
    if l < entry.rank_min:
        return False
    if p is None:
        return True
    if p in entry.p_ne:
        return False
    if entry.p_gt is not None and not p > _eval_dim(entry.p_gt, l, None):
        return False
    for expr in entry.p_ndiv:
        if _eval_dim(expr, l, None) % p == 0:
            return False
    return True


def match_formulas(t: LieType, w: Weight, path=None):
    """All registry entries applicable to w, with their j-bindings."""
    out = []
    for entry in formula_registry(path):
        if entry.family not in ("*", t.family):
            continue
        binding = _match_pattern(entry, w, t.rank)
        if binding is None and t.family == "A":
            binding = _match_pattern(entry, Weight(tuple(reversed(w.coeffs))), t.rank)
        if binding is not None:
            out.append((entry, binding))
    return out


def dim_closed(t: LieType, w: Weight, p=None, path=None) -> DimClosed | None:
    """Closed-form dimension of the irreducible module at p, if tabulated.

    p is an int prime or None for "generic" (all eps terms vanish, all
    p-conditions pass).  Returns None when no formula covers (w, p).
    """
    if p is not None and not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    if w.is_zero():
        return DimClosed(1, "proven", "zero", "trivial module")
    best = None
    for entry, binding in match_formulas(t, w, path):
        if not _condition_holds(entry, t.rank, p):
            continue
        j = binding if binding is not True else None
        value = _eval_dim(entry.dimension, t.rank, p, j)
        cand = DimClosed(value, entry.status, entry.id, entry.note)
        if best is None or (best.status == "conjectural" and entry.status == "proven"):
            best = cand
        elif best.status == entry.status == "proven" and best.value != value:
            raise AssertionError(
                f"registry entries {best.formula_id} and {entry.id} disagree on "
                f"{w} over {t}: {best.value} vs {value}"
            )
    return best


def worst_case_lower_bound(t: LieType, w: Weight, path=None):
    """Smallest value of an every-characteristic formula over all eps
    assignments; a lower bound for the irreducible dimension at every p.

    Only entries flagged all_p qualify.  Returns (value, formula_id) or None.
    """
    if w.is_zero():
        return None
    for entry, binding in match_formulas(t, w, path):
        if not entry.all_p or entry.status != "proven":
            continue
        j = binding if binding is not True else None
        values = [_eval_dim(entry.dimension, t.rank, None, j)]
        values.append(_eval_dim_all_eps_one(entry.dimension, t.rank, j))
        return (min(values), entry.id)
    return None


def _eval_dim_all_eps_one(expr: str, l: int, j=None) -> int:
    ns = {"l": l, "p": None, "j": j, "comb": comb, "eps": lambda m: 1, "div": _exact_div}
    return eval(expr, {"__builtins__": {}}, ns)
