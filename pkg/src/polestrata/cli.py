"""Command line interface: ``polestrata <command> ...``.

Exit codes: 0 success, 2 unparsable input, 3 domain error, 4 internal
search cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from .bounds import bounds_report
from .documents import (
    bounds_to_json,
    certificate_to_json,
    dumps,
    irreducibility_to_json,
    rep_from_json,
    rep_to_json,
    violation_to_json,
)
from .errors import (
    InvalidRepresentation,
    MalformedInput,
    MalformedStratum,
    ParseError,
    PoleStrataError,
    SearchCapExceeded,
    UnsupportedStratum,
)
from .notation import parse_stratum
from .representation import enumerate_reps, is_irreducible, kappa, validate
from .residues import realize_residues
from .stratum import Nonemptiness, Stratum, is_nonempty, iter_strata

__all__ = ["ATLAS_COLUMNS", "analyze", "atlas_rows", "main"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CAP = 4

ATLAS_COLUMNS = (
    "pattern",
    "k",
    "g",
    "n",
    "p",
    "nonempty",
    "kappa",
    "irreducible",
    "mgas_lower",
    "mgas_upper",
    "sc_lower",
    "sc_stratum_bound",
    "fv_components_max",
)


def _require_nonempty(stratum: Stratum) -> None:
    if is_nonempty(stratum) is Nonemptiness.EMPTY:
        raise UnsupportedStratum(f"{stratum} is empty")


def analyze(stratum: Stratum) -> dict:
    """Genus, nonemptiness, reducibility and bounds in one document.

    Reducibility and bounds are omitted (null) for empty strata and when
    they are outside the supported range.
    """
    status = is_nonempty(stratum)
    doc = {
        "stratum": str(stratum),
        "k": stratum.k,
        "g": stratum.genus,
        "n": stratum.n,
        "p": stratum.p,
        "nonempty": status.value,
        "kappa": None,
        "irreducible": None,
        "irreducibility": None,
        "bounds": None,
    }
    if status is Nonemptiness.EMPTY:
        return doc
    try:
        report = is_irreducible(stratum)
    except PoleStrataError:
        report = None
    if report is not None:
        doc["kappa"] = kappa(stratum)
        doc["irreducible"] = report.irreducible
        doc["irreducibility"] = irreducibility_to_json(report)
    doc["bounds"] = bounds_to_json(bounds_report(stratum))
    return doc


def atlas_rows(
    k: int, max_pole_sum: int, genus: int = 0, max_singularities: int = 8
) -> list[dict]:
    """One row per stratum in the given range, sorted canonically."""
    strata = iter_strata(
        k, max_pole_sum, genera=(genus,), max_singularities=max_singularities, min_poles=0
    )
    ordered = sorted(
        strata, key=lambda s: (s.genus, sum(s.poles), s.p, s.n, s.poles, s.zeros)
    )
    rows = []
    for stratum in ordered:
        doc = analyze(stratum)
        bounds = doc["bounds"] or {}
        upper = bounds.get("mgas_upper")
        fv = bounds.get("max_finite_volume_components")
        rows.append(
            {
                "pattern": doc["stratum"],
                "k": doc["k"],
                "g": doc["g"],
                "n": doc["n"],
                "p": doc["p"],
                "nonempty": doc["nonempty"],
                "kappa": doc["kappa"],
                "irreducible": doc["irreducible"],
                "mgas_lower": bounds.get("mgas_lower"),
                "mgas_upper": None if upper is None else upper["value"],
                "sc_lower": bounds.get("sc_lower"),
                "sc_stratum_bound": bounds.get("sc_stratum_bound"),
                "fv_components_max": fv,
            }
        )
    return rows


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ATLAS_COLUMNS)
    for row in rows:
        writer.writerow([_csv_cell(row[c]) for c in ATLAS_COLUMNS])
    return buf.getvalue()


def _read_rep(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc.msg}") from exc
    return rep_from_json(doc)


def _triangles(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise MalformedInput(f"bad triangle list {text!r}") from exc


# ---------------------------------------------------------------------------
# text rendering


def _flat(value) -> bool:
    """Lists of scalars, or of lists of scalars, print on one line."""

    def scalar(x) -> bool:
        return not isinstance(x, (dict, list))

    return isinstance(value, list) and all(
        scalar(v) or (isinstance(v, list) and all(map(scalar, v))) for v in value
    )


def _text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for key, value in doc.items():
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, (dict, list)) and item and not _flat(item):
                lines.append(f"{pad}-")
                lines.append(_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(doc)}")
    return "\n".join(lines)


def _scalar(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return str(value)


# ---------------------------------------------------------------------------
# commands


def _cmd_analyze(args) -> dict:
    return analyze(parse_stratum(args.stratum))


def _cmd_reps(args) -> dict:
    stratum = parse_stratum(args.stratum)
    _require_nonempty(stratum)
    reps = enumerate_reps(stratum, max_level=args.max_level, pure_only=args.pure)
    return {
        "stratum": str(stratum),
        "count": len(reps),
        "representations": [rep_to_json(r) for r in reps],
    }


def _cmd_kappa(args) -> dict:
    stratum = parse_stratum(args.stratum)
    _require_nonempty(stratum)
    return {"stratum": str(stratum), "method": args.method, "kappa": kappa(stratum, args.method)}


def _cmd_realize(args) -> dict:
    rep = _read_rep(args.rep)
    violations = validate(rep)
    if violations:
        raise InvalidRepresentation(
            "representation is invalid: " + "; ".join(v.message for v in violations)
        )
    return certificate_to_json(realize_residues(rep, seed=args.seed))


def _cmd_check(args) -> dict:
    rep = _read_rep(args.rep)
    violations = validate(rep)
    return {
        "stratum": str(rep.stratum),
        "valid": not violations,
        "violations": [violation_to_json(v) for v in violations],
    }


def _cmd_bounds(args) -> dict:
    stratum = parse_stratum(args.stratum)
    _require_nonempty(stratum)
    triangles = _triangles(args.triangles) if args.triangles is not None else None
    return bounds_to_json(bounds_report(stratum, triangles))


def _cmd_atlas(args) -> dict:
    rows = atlas_rows(args.k, args.max_pole_sum, args.genus, args.max_singularities)
    out = Path(args.out)
    table = args.table or ("json" if out.suffix == ".json" else "csv")
    if table == "json":
        out.write_text(dumps(rows))
    else:
        out.write_text(_rows_to_csv(rows))
    return {"out": str(out), "table": table, "rows": len(rows)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polestrata",
        description="Combinatorics of strata of meromorphic differentials with poles.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="genus, nonemptiness, kappa, irreducibility, bounds")
    p.add_argument("stratum")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("reps", help="graph representations up to isomorphism")
    p.add_argument("stratum")
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--pure", action="store_true", help="only weight-free representations")
    p.set_defaults(func=_cmd_reps)

    p = sub.add_parser("kappa", help="reducibility index")
    p.add_argument("stratum")
    p.add_argument("--method", choices=("direct", "reduce"), default="direct")
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("realize", help="residue certificate for a representation file")
    p.add_argument("rep")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("check", help="validate a representation file")
    p.add_argument("rep")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bounds", help="arc and saddle connection bounds")
    p.add_argument("stratum")
    p.add_argument("--triangles", default=None, help="comma separated t_1,...,t_s")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("atlas", help="table of every stratum within limits")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-pole-sum", type=int, required=True)
    p.add_argument("--genus", type=int, default=0, help="genus of the strata (default 0)")
    p.add_argument("--max-singularities", type=int, default=8, help="bound on n + p")
    p.add_argument("--out", required=True)
    p.add_argument("--table", choices=("csv", "json"), default=None,
                   help="table format (default: from the file extension)")
    p.set_defaults(func=_cmd_atlas)
    return parser


def _exit_code(exc: PoleStrataError) -> int:
    if isinstance(exc, (ParseError, MalformedStratum, MalformedInput)):
        return EXIT_PARSE
    if isinstance(exc, SearchCapExceeded):
        return EXIT_CAP
    return EXIT_DOMAIN


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.func(args)
    except PoleStrataError as exc:
        error = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            error["position"] = exc.position
        code = _exit_code(exc)
        if args.format == "json":
            sys.stdout.write(dumps({"error": error, "exit_code": code}))
        else:
            print(f"error: {error['type']}: {error['message']}", file=sys.stderr)
        return code
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    else:
        print(_text(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
