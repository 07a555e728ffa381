"""Reproduction of the tabulated multiplicity / orbit / dimension tables.

Every value in an emitted table is recomputed from scratch; the
hard-coded *tabulated* values live only here and in the golden tests,
and serve purely as comparison targets.  Where a recomputed entry
differs from its tabulated counterpart the row gets a note -- tabulated
misprints and bound-vs-exact-value gaps are surfaced, never silently
corrected.

Known divergences (all annotated in the emitted tables):

  * appendix-c, fourth power section: the tabulated rows repeat
    "2*w_l" (with multiplicity 1, orbit 2l); the dominant lattice shows
    the row is 2*w_(l-1) with orbit 2l(l-1).
  * appendix-c, w_(l-3) section: orbit of w_(l-1) tabulated as
    2l(l-1)/6; the stabilizer gives 2l(l-1).
  * appendix-d, fourth power section: orbit of w_(l-3) tabulated with a
    2^2 prefactor; the stabilizer (D_(l-4) x A_3) gives 2^4.
  * several multiplicity entries are tabulated as bounds for the
    characteristic-p module and differ from the characteristic-zero
    values computed here (flagged "bound").
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import LieType, Weight, weight_from_dict
from .closedform import dim_closed
from .freudenthal import dim_weyl_module, multiplicity_table

TABLE_NAMES = ("lemma-b2", "lemma-b3", "appendix-c", "appendix-d", "theorem-a")


@dataclass(frozen=True)
class TableRow:
    section: str
    mu: str
    computed_mult: int | None
    tabulated_mult: int | None
    computed_orbit: int | None
    tabulated_orbit: int | None
    note: str = ""

    def to_dict(self):
        return {
            "section": self.section,
            "mu": self.mu,
            "computed_mult": _s(self.computed_mult),
            "tabulated_mult": _s(self.tabulated_mult),
            "computed_orbit": _s(self.computed_orbit),
            "tabulated_orbit": _s(self.tabulated_orbit),
            "note": self.note,
        }


def _s(v):
    return None if v is None else str(v)


@dataclass(frozen=True)
class TableReport:
    name: str
    lietype: LieType
    rows: tuple[TableRow, ...]
    # what the two value columns hold: ("multiplicity", "orbit length")
    # for the multiplicity tables, ("dimension", None) for theorem-a
    value_columns: tuple = ("multiplicity", "orbit length")

    def discrepancies(self):
        return [r for r in self.rows if r.note]

    def to_dicts(self):
        return [r.to_dict() for r in self.rows]


# -- multiplicity-table specs --------------------------------------------------
#
# Section layout: (family, highest-weight pattern, rows); each row is
# (mu pattern, tabulated mult (function of l) or None,
#  tabulated orbit (function of l) or None, note-kind or None,
#  printed row label override or None).
# Patterns use node offsets from the right end: -1 is node l.

_BOUND = "bound"        # tabulated as a characteristic-p bound, not the char-0 value
_MISPRINT = "misprint"  # tabulated entry inconsistent with its own table


def _rows_lemma_b2():
    return [
        (
            {-3: 1},
            [
                ({-3: 1}, lambda l: 1, None, None, None),
                ({-2: 1}, lambda l: 1, None, None, None),
                ({-1: 1}, lambda l: l - 1, None, None, None),
                ({}, lambda l: l, None, None, None),
            ],
        ),
        (
            {-4: 1},
            [
                ({-4: 1}, lambda l: 1, None, None, None),
                ({-3: 1}, lambda l: 1, None, None, None),
                ({-2: 1}, lambda l: l - 1, None, _BOUND, None),
                ({-1: 1}, lambda l: l, None, _BOUND, None),
                ({}, lambda l: l * (l + 1) // 2, None, _BOUND, None),
            ],
        ),
    ]


def _rows_lemma_b3():
    return [
        (
            {-1: 3},
            [
                ({-1: 3}, lambda l: 1, None, None, None),
                ({-2: 1, -1: 1}, lambda l: 1, None, None, None),
                ({-3: 1}, lambda l: 1, None, None, None),
                ({-1: 2}, lambda l: 1, None, None, None),
                ({-2: 1}, lambda l: 1, None, None, None),
                ({-1: 1}, lambda l: l, None, None, None),
                ({}, lambda l: l, None, None, None),
            ],
        ),
        (
            {-1: 4},
            [
                ({-1: 4}, lambda l: 1, None, None, None),
                ({-2: 1, -1: 2}, lambda l: 1, None, None, None),
                ({-2: 2}, lambda l: 1, None, None, None),
                ({-3: 1, -1: 1}, lambda l: 1, None, None, None),
                ({-4: 1}, lambda l: 1, None, None, None),
                ({-1: 3}, lambda l: 1, None, None, None),
                ({-2: 1, -1: 1}, lambda l: 1, None, None, None),
                ({-3: 1}, lambda l: 1, None, None, None),
                ({-1: 2}, lambda l: l, None, None, None),
                ({-2: 1}, lambda l: l, None, None, None),
                ({-1: 1}, lambda l: l, None, None, None),
                ({}, lambda l: l * (l - 1) // 2, None, _BOUND, None),
            ],
        ),
    ]


def _rows_appendix_c():
    return [
        (
            {-1: 3},
            [
                ({-1: 3}, lambda l: 1, lambda l: 2 * l, None, None),
                ({-2: 1, -1: 1}, lambda l: 1, lambda l: 4 * l * (l - 1), None, None),
                ({-3: 1}, lambda l: 1, lambda l: 4 * l * (l - 1) * (l - 2) // 3, None, None),
                ({-1: 1}, lambda l: l, lambda l: 2 * l, None, None),
            ],
        ),
        (
            {-1: 4},
            [
                ({-1: 4}, lambda l: 1, lambda l: 2 * l, None, None),
                ({-2: 1, -1: 2}, lambda l: 1, lambda l: 4 * l * (l - 1), None, None),
                # tabulated as a repeated "2*w_l, 1, 2l" row
                ({-2: 2}, lambda l: 1, lambda l: 2 * l, _MISPRINT, "2*w[l]"),
                ({-3: 1, -1: 1}, lambda l: 1, lambda l: 4 * l * (l - 1) * (l - 2), None, None),
                ({-4: 1}, lambda l: 1, lambda l: 2 * l * (l - 1) * (l - 2) * (l - 3) // 3, None, None),
                ({-1: 2}, lambda l: l, lambda l: 2 * l, None, None),
                ({-2: 1}, lambda l: l, lambda l: 2 * l * (l - 1), None, None),
                ({}, lambda l: l * (l + 1) // 2, lambda l: 1, None, None),
            ],
        ),
        (
            {-3: 1},
            [
                ({-3: 1}, lambda l: 1, lambda l: 8 * l * (l - 1) * (l - 2) // 6, None, None),
                ({-1: 1}, lambda l: l - 2, lambda l: 2 * l, None, None),
            ],
        ),
        (
            {-4: 1},
            [
                ({-4: 1}, lambda l: 1, lambda l: 16 * l * (l - 1) * (l - 2) * (l - 3) // 24, None, None),
                ({-2: 1}, lambda l: l - 3, lambda l: 2 * l * (l - 1) // 6, _MISPRINT, None),
                ({}, lambda l: l * (l - 3) // 2, lambda l: 1, None, None),
            ],
        ),
        (
            {-2: 1, -1: 1},
            [
                ({-2: 1, -1: 1}, lambda l: 1, lambda l: 4 * l * (l - 1), None, None),
                ({-3: 1}, lambda l: 2, lambda l: 4 * l * (l - 1) * (l - 2) // 3, None, None),
                ({-1: 1}, lambda l: 2 * (l - 1), lambda l: 2 * l, None, None),
            ],
        ),
    ]


def _rows_appendix_d():
    return [
        (
            {-1: 3},
            [
                ({-1: 3}, lambda l: 1, lambda l: 2 * l, None, None),
                ({-2: 1, -1: 1}, lambda l: 1, lambda l: 4 * l * (l - 1), None, None),
                ({-3: 1}, lambda l: 1, lambda l: 4 * l * (l - 1) * (l - 2) // 3, None, None),
                ({-1: 1}, lambda l: l - 1, lambda l: 2 * l, None, None),
            ],
        ),
        (
            {-1: 4},
            [
                ({-1: 4}, lambda l: 1, lambda l: 2 * l, None, None),
                ({-2: 1, -1: 2}, lambda l: 1, lambda l: 4 * l * (l - 1), None, None),
                ({-2: 2}, lambda l: 1, lambda l: 2 * l * (l - 1), None, None),
                ({-3: 1, -1: 1}, lambda l: 1, lambda l: 4 * l * (l - 1) * (l - 2), None, None),
                # tabulated with a 2^2 prefactor; the stabilizer gives 2^4
                ({-4: 1}, lambda l: 1, lambda l: 4 * l * (l - 1) * (l - 2) * (l - 3) // 24, _MISPRINT, None),
                ({-1: 2}, lambda l: l, lambda l: 2 * l, _BOUND, None),
                ({-2: 1}, lambda l: l, lambda l: 2 * l * (l - 1), _BOUND, None),
                ({}, lambda l: l * (l - 1) // 2, lambda l: 1, None, None),
            ],
        ),
        (
            {-3: 1},
            [
                ({-3: 1}, lambda l: 1, lambda l: 8 * l * (l - 1) * (l - 2) // 6, None, None),
                ({-1: 1}, lambda l: l - 1, lambda l: 2 * l, None, None),
            ],
        ),
        (
            {-4: 1},
            [
                ({-4: 1}, lambda l: 1, lambda l: 16 * l * (l - 1) * (l - 2) * (l - 3) // 24, None, None),
                ({-2: 1}, lambda l: l - 2, lambda l: 2 * l * (l - 1), None, None),
                ({}, lambda l: l * (l - 1) // 2, lambda l: 1, None, None),
            ],
        ),
        (
            {-2: 1, -1: 1},
            [
                ({-2: 1, -1: 1}, lambda l: 1, lambda l: 4 * l * (l - 1), None, None),
                ({-3: 1}, lambda l: 2, lambda l: 8 * l * (l - 1) * (l - 2) // 6, None, None),
                ({-1: 1}, lambda l: 2 * (l - 1), lambda l: 2 * l, None, None),
            ],
        ),
    ]


_MULT_TABLES = {
    "lemma-b2": ("B", _rows_lemma_b2),
    "lemma-b3": ("B", _rows_lemma_b3),
    "appendix-c": ("C", _rows_appendix_c),
    "appendix-d": ("D", _rows_appendix_d),
}


def _pattern_weight(t: LieType, pattern: dict) -> Weight:
    l = t.rank
    resolved = {(k if k > 0 else l + 1 + k): v for k, v in pattern.items()}
    return weight_from_dict(t, resolved)


def build_mult_table(name: str, rank: int) -> TableReport:
    family, spec_fn = _MULT_TABLES[name]
    t = LieType(family, rank)
    l = rank
    rows = []
    for top_pattern, row_specs in spec_fn():
        top = _pattern_weight(t, top_pattern)
        table = multiplicity_table(t, top)
        section = str(top)
        tabulated = {}
        for mu_pattern, m_fn, o_fn, kind, printed_label in row_specs:
            mu = _pattern_weight(t, mu_pattern)
            tabulated[mu] = (
                None if m_fn is None else m_fn(l),
                None if o_fn is None else o_fn(l),
                kind,
                printed_label,
            )
        members = set(table.lattice)
        for mu, m, orb in table.rows():
            tab = tabulated.pop(mu, (None, None, None, None))
            tab_m, tab_o, kind, printed_label = tab
            note = _compare_note(m, tab_m, orb, tab_o, kind, printed_label)
            rows.append(TableRow(section, str(mu), m, tab_m, orb, tab_o, note))
        for mu, (tab_m, tab_o, kind, printed_label) in tabulated.items():
            rows.append(
                TableRow(
                    section,
                    str(mu),
                    None,
                    tab_m,
                    None,
                    tab_o,
                    "tabulated row is not a dominant weight of this module",
                )
            )
    return TableReport(name, t, tuple(rows))


def _compare_note(m, tab_m, orb, tab_o, kind, printed_label) -> str:
    parts = []
    if printed_label is not None:
        parts.append(f"tabulated row is labelled {printed_label} (misprint for this weight)")
    if tab_m is not None and m is not None and m != tab_m:
        what = "bound" if kind == _BOUND else "tabulated value"
        parts.append(f"multiplicity: computed {m} vs {what} {tab_m}")
    if tab_o is not None and orb is not None and orb != tab_o:
        parts.append(f"orbit: computed {orb} vs tabulated {tab_o} (misprint)")
    return "; ".join(parts)


# -- the family-A dimension table ----------------------------------------------
#
# Row: (list of weight patterns (duals grouped), tabulated dimension as a
# function of (l, p), condition description, condition test(l, p),
# rank_min).  p = None stands for generic.

def _a_dim_rows():
    def nz(p, m):  # eps
        return 0 if p is None else (1 if m % p == 0 else 0)

    return [
        ([{}], lambda l, p: 1, "all p", lambda l, p: True, 1),
        ([{1: 1}, {-1: 1}], lambda l, p: l + 1, "all p", lambda l, p: True, 1),
        ([{2: 1}, {-2: 1}], lambda l, p: l * (l + 1) // 2, "all p", lambda l, p: True, 2),
        ([{3: 1}, {-3: 1}], lambda l, p: (l - 1) * l * (l + 1) // 6, "all p", lambda l, p: True, 3),
        ([{4: 1}, {-4: 1}], lambda l, p: (l - 2) * (l - 1) * l * (l + 1) // 24, "all p",
         lambda l, p: True, 4),
        ([{1: 2}, {-1: 2}], lambda l, p: (l + 2) * (l + 1) // 2, "p != 2",
         lambda l, p: p != 2, 1),
        ([{1: 3}, {-1: 3}], lambda l, p: (l + 3) * (l + 2) * (l + 1) // 6, "p != 2, 3",
         lambda l, p: p not in (2, 3), 1),
        ([{1: 1, -1: 1}], lambda l, p: l * (l + 2), "p ndiv l+1",
         lambda l, p: p is None or (l + 1) % p, 2),
        ([{1: 1, -1: 1}], lambda l, p: l * (l + 2) - 1, "p | l+1",
         lambda l, p: p is not None and (l + 1) % p == 0, 2),
        ([{1: 1, -2: 1}, {2: 1, -1: 1}], lambda l, p: (l + 2) * (l + 1) * (l - 1) // 2,
         "p ndiv l", lambda l, p: p is None or l % p, 3),
        ([{1: 1, -2: 1}, {2: 1, -1: 1}],
         lambda l, p: (l + 2) * (l + 1) * (l - 1) // 2 - (l + 1),
         "p | l", lambda l, p: p is not None and l % p == 0, 3),
        ([{1: 1, -1: 2}, {1: 2, -1: 1}], lambda l, p: (l + 1) * l * (l + 3) // 2,
         "p != 2, p ndiv l+2", lambda l, p: p != 2 and (p is None or (l + 2) % p), 2),
        ([{1: 1, -1: 2}, {1: 2, -1: 1}],
         lambda l, p: (l + 1) * l * (l + 3) // 2 - (l + 1),
         "p != 2, p | l+2", lambda l, p: p not in (None, 2) and (l + 2) % p == 0, 2),
        ([{1: 1, 2: 1}, {-2: 1, -1: 1}], lambda l, p: l * (l + 1) * (l + 2) // 3,
         "p != 3", lambda l, p: p != 3, 2),
        ([{1: 1, 2: 1}, {-2: 1, -1: 1}],
         lambda l, p: l * (l + 1) * (l + 2) // 3 - (l - 1) * l * (l + 1) // 6,
         "p = 3", lambda l, p: p == 3, 2),
        ([{1: 4}, {-1: 4}], lambda l, p: (l + 4) * (l + 3) * (l + 2) * (l + 1) // 24,
         "p != 2, 3; rank >= 16", lambda l, p: p not in (2, 3), 16),
    ]


def build_theorem_a_table(rank: int, p=None) -> TableReport:
    """The family-A admissible-dimension table at one rank.

    Each branch row is evaluated at a witness prime satisfying its
    condition (the given p when applicable); computed values come from
    the closed-form registry, cross-checked against the orbit-sum
    dimension on generic rows.
    """
    t = LieType("A", rank)
    l = rank
    rows = []
    for patterns, dim_fn, cond, test, rank_min in _a_dim_rows():
        if l < rank_min:
            continue
        witness = p if (p is not None and test(l, p)) else _witness_prime(test, l)
        if p is not None and not test(l, p):
            continue  # with an explicit p, emit only the applicable branches
        label = ", ".join(str(_pattern_weight(t, pat)) for pat in patterns)
        tab = dim_fn(l, witness)
        notes = []
        computed = None
        for pat in patterns:
            w = _pattern_weight(t, pat)
            res = dim_closed(t, w, witness)
            val = res.value if res is not None else None
            if computed is None:
                computed = val
            elif val != computed:
                notes.append(f"dual weights disagree: {val} vs {computed}")
            if witness is None:
                char0 = dim_weyl_module(t, w)
                if char0 != val:
                    notes.append(f"generic closed form {val} vs orbit sum {char0}")
        if computed != tab:
            notes.append(f"computed {computed} vs tabulated {tab}")
        rows.append(
            TableRow(
                section=f"characteristic {cond}",
                mu=label,
                computed_mult=computed,
                tabulated_mult=tab,
                computed_orbit=None,
                tabulated_orbit=None,
                note="; ".join(notes),
            )
        )
    return TableReport("theorem-a", t, tuple(rows), value_columns=("dimension", None))


def _witness_prime(test, l):
    if test(l, None):
        return None
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43):
        if test(l, q):
            return q
    raise RuntimeError("no witness prime found for a tabulated branch")


def build_table(name: str, rank: int, p=None) -> TableReport:
    if name in _MULT_TABLES:
        return build_mult_table(name, rank)
    if name == "theorem-a":
        return build_theorem_a_table(rank, p)
    raise KeyError(f"unknown table {name!r}; known: {', '.join(TABLE_NAMES)}")


# -- tabulated classification lists ---------------------------------------------


def tabulated_admissible(family: str, rank: int, p=None) -> set[Weight]:
    """The tabulated admissible set for one family/rank/characteristic.

    Golden data for tests and for the classification emitters; the
    classifier itself never consults this.
    """
    l = rank
    t = LieType(family, l)
    out = set()
    if family == "A":
        for patterns, _dim, _cond, test, rank_min in _a_dim_rows():
            if l < rank_min or not test(l, p):
                continue
            for pat in patterns:
                w = _pattern_weight(t, pat)
                if p is None or w.is_p_restricted(p):
                    out.add(w)
        return out
    patterns = [{}, {-1: 1}, {-1: 2}, {-1: 3}, {-1: 4}, {-2: 1}, {-3: 1}, {-4: 1},
                {-2: 1, -1: 1}]
    if family == "B" and l <= 16:
        patterns.append({1: 1})
    if family == "D" and l <= 17:
        patterns.extend([{1: 1}, {2: 1}])
    for pat in patterns:
        w = _pattern_weight(t, pat)
        if p is None or w.is_p_restricted(p):
            out.add(w)
    return out
