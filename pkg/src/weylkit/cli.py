"""Command-line surface: mult / dim / classify / table.

All integers are emitted as decimal strings (values routinely exceed
64 bits); envelopes are deterministic apart from the timing field.
Exit codes: 0 success, 2 usage or validation error, 3 internal
invariant violation (the two dimension routes disagreeing).

Node labels follow the reversed convention of the library (node 1 at
the short/long end of B/C, fork tips 1 and 2 for D); pass
``--label-convention bourbaki`` to read and write indices in the
standard textbook order instead (the map is i <-> l+1-i throughout).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
import time

from .cartan import LieType, Weight
from .classify import classify_admissible
from .closedform import dim_closed, is_prime
from .freudenthal import dim_weyl_module, dim_weyl_product, multiplicity, multiplicity_table
from .tables import TABLE_NAMES, build_table

SCHEMA_VERSION = 1

_TERM_RE = re.compile(r"^(?:(\d+)\*)?w(\d+)$")


class CliError(Exception):
    """Validation failure: reported on stderr, exit code 2."""


class InvariantError(Exception):
    """Cross-check failure: reported on stderr, exit code 3."""


def parse_weight_spec(spec: str, rank: int) -> Weight:
    """Parse '0' or 'k*wi+...+wj' into a Weight (duplicate nodes summed)."""
    text = spec.replace(" ", "")
    if text == "0":
        return Weight((0,) * rank)
    coeffs = [0] * rank
    if not text:
        raise CliError("empty weight spec")
    for term in text.split("+"):
        m = _TERM_RE.match(term)
        if not m:
            raise CliError(f"cannot parse weight term {term!r} (expected [k*]w<i>)")
        k = int(m.group(1)) if m.group(1) else 1
        i = int(m.group(2))
        if not 1 <= i <= rank:
            raise CliError(f"node index {i} out of range 1..{rank}")
        if k < 1:
            raise CliError(f"coefficient in {term!r} must be >= 1")
        coeffs[i - 1] += k
    return Weight(tuple(coeffs))


def render_weight(w: Weight) -> str:
    return str(w)


def _reverse_weight(w: Weight) -> Weight:
    return Weight(tuple(reversed(w.coeffs)))


def _convert_in(w: Weight, convention: str) -> Weight:
    return _reverse_weight(w) if convention == "bourbaki" else w


def _convert_out(w: Weight, convention: str) -> Weight:
    return _reverse_weight(w) if convention == "bourbaki" else w


def _lietype(args) -> LieType:
    try:
        return LieType(args.type, args.rank)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _parse_p(value):
    if value is None or value == "generic":
        return None
    try:
        p = int(value)
    except ValueError:
        raise CliError(f"--p must be a prime or 'generic', got {value!r}") from None
    if not is_prime(p):
        raise CliError(f"--p must be prime, got {p}")
    return p


def _envelope(operation, t, values, provenance, started, extra=None):
    env = {
        "schema_version": SCHEMA_VERSION,
        "operation": operation,
        "family": t.family,
        "rank": t.rank,
        "values": values,
        "provenance": provenance,
    }
    if extra:
        env.update(extra)
    env["timing_ms"] = int((time.monotonic() - started) * 1000)
    return env


def _emit(env, stream=None):
    json.dump(env, stream or sys.stdout, sort_keys=True, indent=2)
    (stream or sys.stdout).write("\n")


# -- mult ------------------------------------------------------------------------


def _mult_payload(t: LieType, lam: Weight, convention: str):
    table = multiplicity_table(t, lam)
    rows = [
        {
            "mu": render_weight(_convert_out(mu, convention)),
            "multiplicity": str(m),
            "orbit_length": str(orb),
        }
        for mu, m, orb in table.rows()
    ]
    return {
        "lambda": render_weight(_convert_out(lam, convention)),
        "rows": rows,
        "dimension": str(table.dim()),
    }


def cmd_mult(args) -> int:
    started = time.monotonic()
    t = _lietype(args)
    lam = _convert_in(parse_weight_spec(args.weight, t.rank), args.label_convention)
    if not lam.is_dominant():
        raise CliError(f"lambda = {args.weight} is not dominant")
    if args.mu is not None:
        mu = _convert_in(parse_weight_spec(args.mu, t.rank), args.label_convention)
        if not mu.is_dominant():
            raise CliError(f"mu = {args.mu} is not dominant")
        value = multiplicity(t, lam, mu)
        env = _envelope(
            "mult",
            t,
            {"multiplicity": str(value)},
            ["freudenthal-recursion"],
            started,
            extra={
                "lambda": render_weight(_convert_out(lam, args.label_convention)),
                "mu": render_weight(_convert_out(mu, args.label_convention)),
            },
        )
        _emit(env)
        return 0
    payload, cache_note = _cached_mult_payload(t, lam, args)
    if args.format == "csv":
        _print_mult_csv(payload)
        return 0
    if args.format == "md":
        _print_mult_md(payload)
        return 0
    env = _envelope(
        "mult",
        t,
        payload,
        ["freudenthal-recursion", "orbit-length"] + cache_note,
        started,
    )
    _emit(env)
    return 0


def _cache_dir(args):
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    return os.environ.get("WEYLKIT_CACHE")


def _cached_mult_payload(t, lam, args):
    cache_dir = _cache_dir(args)
    if not cache_dir:
        return _mult_payload(t, lam, args.label_convention), []
    key = f"mult-v{SCHEMA_VERSION}-{t.family}{t.rank}-" + "-".join(map(str, lam.coeffs))
    path = os.path.join(cache_dir, key + ".json")
    cached = None
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                cached = json.load(fh)
            if cached.get("schema_version") != SCHEMA_VERSION:
                cached = None
        except (json.JSONDecodeError, OSError):
            cached = None
        if cached is None:
            print(f"warning: discarding corrupt cache entry {path}", file=sys.stderr)
    if cached is not None and not args.verify_cache:
        return cached["payload"], [f"cache-hit:{key}"]
    payload = _mult_payload(t, lam, args.label_convention)
    if cached is not None and args.verify_cache:
        if cached["payload"] != payload:
            print(
                f"warning: cache entry {path} disagrees with recomputation; replacing",
                file=sys.stderr,
            )
        else:
            return payload, [f"cache-verified:{key}"]
    os.makedirs(cache_dir, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump({"schema_version": SCHEMA_VERSION, "payload": payload}, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return payload, [f"cache-store:{key}"]


def _print_mult_csv(payload):
    print("mu,multiplicity,orbit_length")
    for row in payload["rows"]:
        print(f"{row['mu']},{row['multiplicity']},{row['orbit_length']}")
    print(f"dimension,{payload['dimension']},")


def _print_mult_md(payload):
    print(f"| mu | multiplicity | orbit length |")
    print("|---|---|---|")
    for row in payload["rows"]:
        print(f"| {row['mu']} | {row['multiplicity']} | {row['orbit_length']} |")
    print(f"\ndimension = {payload['dimension']}")


# -- dim -------------------------------------------------------------------------


def cmd_dim(args) -> int:
    started = time.monotonic()
    t = _lietype(args)
    lam = _convert_in(parse_weight_spec(args.weight, t.rank), args.label_convention)
    if not lam.is_dominant():
        raise CliError(f"lambda = {args.weight} is not dominant")
    p = _parse_p(args.p)
    values = {}
    provenance = []
    modes = [args.mode] if args.mode != "all" else ["weyl", "sum", "closed"]
    if "weyl" in modes:
        values["weyl"] = str(dim_weyl_product(t, lam))
        provenance.append("weyl-product")
    if "sum" in modes:
        values["sum"] = str(dim_weyl_module(t, lam))
        provenance.append("orbit-sum")
    if "closed" in modes:
        res = dim_closed(t, lam, p)
        if res is None:
            values["closed"] = "unknown"
        else:
            values["closed"] = str(res.value)
            values["closed_status"] = res.status
            provenance.append(f"closed-form:{res.formula_id}")
    if "weyl" in values and "sum" in values and values["weyl"] != values["sum"]:
        raise InvariantError(
            f"dimension routes disagree: weyl={values['weyl']} sum={values['sum']}"
        )
    env = _envelope(
        "dim",
        t,
        values,
        provenance,
        started,
        extra={
            "lambda": render_weight(_convert_out(lam, args.label_convention)),
            "p": p if p is not None else "generic",
        },
    )
    _emit(env)
    return 0


# -- classify --------------------------------------------------------------------


def cmd_classify(args) -> int:
    started = time.monotonic()
    t = _lietype(args)
    p = _parse_p(args.p)
    report = classify_admissible(t, p=p, exponent=args.exponent)
    if args.label_convention == "bourbaki":
        body = report.to_dict(render=lambda w: render_weight(_reverse_weight(w)))
    else:
        body = report.to_dict()
    env = _envelope("classify", t, body, ["certified-search"], started)
    _emit(env)
    return 0


# -- table -----------------------------------------------------------------------


def cmd_table(args) -> int:
    started = time.monotonic()
    if args.name not in TABLE_NAMES:
        raise CliError(f"unknown table {args.name!r}; known: {', '.join(TABLE_NAMES)}")
    rank = args.rank
    try:
        report = build_table(args.name, rank, _parse_p(args.p))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        env = _envelope(
            "table",
            report.lietype,
            {"name": args.name, "rows": report.to_dicts()},
            ["recomputed; tabulated values only in the note comparator"],
            started,
        )
        _emit(env)
        return 0
    c1, c2 = report.value_columns
    if args.format == "csv":
        cols = ["section", "mu", f"computed_{c1}", f"tabulated_{c1}"]
        if c2:
            cols += [f"computed_{c2}", f"tabulated_{c2}"]
        cols.append("note")
        print(",".join(c.replace(" ", "_") for c in cols))
        for r in report.rows:
            cells = [r.section, r.mu, _cell(r.computed_mult), _cell(r.tabulated_mult)]
            if c2:
                cells += [_cell(r.computed_orbit), _cell(r.tabulated_orbit)]
            cells.append('"' + r.note + '"' if "," in r.note else r.note)
            print(",".join(cells))
        return 0
    # markdown: one block per section, laid out like the tabulated original
    current = None
    for r in report.rows:
        if r.section != current:
            current = r.section
            print(f"\n**{current}**\n")
            if c2:
                print(f"| mu | {c1} | {c2} | note |")
                print("|---|---|---|---|")
            else:
                print(f"| weight | {c1} (computed) | tabulated | note |")
                print("|---|---|---|---|")
        if c2:
            print(
                f"| {r.mu} | {_md_pair(r.computed_mult, r.tabulated_mult)} "
                f"| {_md_pair(r.computed_orbit, r.tabulated_orbit)} | {r.note} |"
            )
        else:
            print(f"| {r.mu} | {_cell(r.computed_mult)} | {_cell(r.tabulated_mult)} | {r.note} |")
    return 0


def _cell(v):
    return "" if v is None else str(v)


def _md_pair(computed, tabulated):
    if tabulated is None or computed == tabulated:
        return _cell(computed)
    return f"{_cell(computed)} (tabulated: {_cell(tabulated)})"


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="weylkit",
        description="Exact weight multiplicities, orbit lengths, module dimensions "
        "and admissible-weight classification for classical root systems.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_rank=True):
        if with_rank:
            p.add_argument("--type", required=True, choices=["A", "B", "C", "D"])
            p.add_argument("--rank", required=True, type=int)
        p.add_argument(
            "--label-convention",
            choices=["reversed", "bourbaki"],
            default="reversed",
            help="node labelling for weight specs in input and output",
        )

    p = sub.add_parser("mult", help="Freudenthal multiplicities / full table")
    common(p)
    p.add_argument("--lambda", dest="weight", required=True, metavar="SPEC")
    p.add_argument("--mu", metavar="SPEC")
    p.add_argument("--format", choices=["json", "csv", "md"], default="json")
    p.add_argument("--cache-dir", help="cache directory (or env WEYLKIT_CACHE)")
    p.add_argument("--verify-cache", action="store_true",
                   help="recompute and compare against any cached entry")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("dim", help="module dimension (orbit sum / Weyl product / closed form)")
    common(p)
    p.add_argument("--lambda", dest="weight", required=True, metavar="SPEC")
    p.add_argument("--p", help="prime or 'generic'")
    p.add_argument("--mode", choices=["all", "weyl", "sum", "closed"], default="all")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("classify", help="admissible-weight classification")
    common(p)
    p.add_argument("--p", help="prime or 'generic'")
    p.add_argument("--exponent", type=int, default=4,
                   help="bound exponent n (bound l^n, or (l/2)^n for family A)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="emit a tabulated table, recomputed")
    p.add_argument("--name", required=True)
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--p", help="prime or 'generic'")
    p.add_argument("--format", choices=["json", "csv", "md"], default="json")
    p.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
