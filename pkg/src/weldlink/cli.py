"""Command-line interface.

Subcommands: validate, conn, tube, canon, moves, equiv, invariants, census,
render.  Exit status 0 on success, 1 on domain errors (validation failures,
stale move instances), 2 on usage or parse errors.  All output is
deterministic for fixed inputs and flags; ``--json`` switches machine output
on where supported.

Input files are recognized by extension (.gauss / .ribbon), overridable with
--format; '-' reads stdin.  Default search budgets come from the environment
variables WELDLINK_MAX_CROSSINGS and WELDLINK_MAX_STATES when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import report as report_mod
from .correspondence import conn_map, tube_map
from .invariants import fingerprint_obj
from .model import validate_gauss_code, validate_solid_ribbon
from .moves import KINDS, StaleInstanceError, applicable_moves, apply_move
from .planar import emit_svg, realize_planar
from .search import Budget, CensusCapError, canonical_form, census, equivalent_within
from .textio import (
    ParseError,
    code_to_json,
    emit_gauss_text,
    emit_ribbon_text,
    parse_gauss_text,
    parse_ribbon_text,
    ribbon_to_json,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class DomainError(Exception):
    pass


class UsageError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _detect_format(path, override):
    if override:
        return override
    if path.endswith(".gauss"):
        return "gauss"
    if path.endswith(".ribbon"):
        return "ribbon"
    raise UsageError(
        "cannot infer format of %r; use --format gauss|ribbon" % path
    )


def _load_gauss(path, fmt=None):
    if fmt is None:
        fmt = "gauss" if path == "-" else _detect_format(path, None)
    if fmt != "gauss":
        raise UsageError("expected a Gauss code input, got format %r" % fmt)
    try:
        code = parse_gauss_text(_read(path))
    except ParseError as exc:
        raise UsageError("%s: %s" % (path, exc)) from exc
    report = validate_gauss_code(code)
    if not report.ok:
        raise DomainError("%s: %s" % (path, "; ".join(report.violations)))
    return code


def _load_ribbon(path, fmt=None):
    try:
        data = parse_ribbon_text(_read(path))
    except ParseError as exc:
        raise UsageError("%s: %s" % (path, exc)) from exc
    report = validate_solid_ribbon(data)
    if not report.ok:
        raise DomainError("%s: %s" % (path, "; ".join(report.violations)))
    return data


def _budget(args):
    max_crossings = args.max_crossings
    if max_crossings is None:
        max_crossings = int(os.environ.get("WELDLINK_MAX_CROSSINGS", "6"))
    max_states = args.max_states
    if max_states is None:
        max_states = int(os.environ.get("WELDLINK_MAX_STATES", "1000"))
    return Budget(max_crossings=max_crossings, max_states=max_states)


def _cmd_validate(args):
    fmt = _detect_format(args.path, args.format)
    if fmt == "gauss":
        obj = parse_gauss_text(_read(args.path))
        report = validate_gauss_code(obj)
    else:
        obj = parse_ribbon_text(_read(args.path))
        report = validate_solid_ribbon(obj)
    if args.json:
        print(json.dumps({"ok": report.ok, "violations": list(report.violations)}))
    elif report.ok:
        print("ok")
    else:
        for v in report.violations:
            print("violation: %s" % v)
    return EXIT_OK if report.ok else EXIT_DOMAIN


def _cmd_conn(args):
    data = _load_ribbon(args.path)
    code = conn_map(data)
    print(code_to_json(code) if args.json else emit_gauss_text(code))
    return EXIT_OK


def _cmd_tube(args):
    code = _load_gauss(args.path, args.format or None)
    data = tube_map(code)
    print(ribbon_to_json(data) if args.json else emit_ribbon_text(data))
    return EXIT_OK


def _cmd_canon(args):
    code = _load_gauss(args.path)
    rep, key = canonical_form(code)
    if args.json:
        print(json.dumps({"representative": emit_gauss_text(rep), "key": repr(key)}))
    else:
        print("representative: %s" % emit_gauss_text(rep))
        print("key: %r" % (key,))
    return EXIT_OK


def _cmd_moves(args):
    code = _load_gauss(args.path)
    kinds = KINDS
    if args.kinds:
        kinds = tuple(k.strip() for k in args.kinds.split(","))
        unknown = set(kinds) - set(KINDS)
        if unknown:
            raise UsageError("unknown move kinds: %s" % ", ".join(sorted(unknown)))
    instances = applicable_moves(code, kinds)
    if args.apply is not None:
        if not (0 <= args.apply < len(instances)):
            raise DomainError(
                "move index %d out of range (%d applicable)" % (args.apply, len(instances))
            )
        try:
            result = apply_move(code, instances[args.apply])
        except StaleInstanceError as exc:
            raise DomainError(str(exc)) from exc
        print(code_to_json(result) if args.json else emit_gauss_text(result))
        return EXIT_OK
    if args.json:
        print(json.dumps([inst.describe() for inst in instances]))
    else:
        for i, inst in enumerate(instances):
            print("%3d  %s" % (i, inst.describe()))
    return EXIT_OK


def _cmd_equiv(args):
    a = _load_gauss(args.a)
    b = _load_gauss(args.b)
    verdict = equivalent_within(a, b, _budget(args))
    if args.json:
        print(
            json.dumps(
                {
                    "status": verdict.status,
                    "path": [
                        [inst.describe() for inst in step] for step in verdict.path
                    ],
                    "separating_invariant": verdict.separating_invariant,
                }
            )
        )
    elif verdict.status == "equivalent":
        steps = "; ".join(
            " + ".join(inst.describe() for inst in step) for step in verdict.path
        ) or "(empty)"
        print("equivalent, path: %s" % steps)
    elif verdict.status == "distinct":
        print(
            "distinct, separating invariant %s: %r vs %r"
            % (verdict.separating_invariant, verdict.values[0], verdict.values[1])
        )
    else:
        print("unknown (budget exhausted)")
    return EXIT_OK


def _cmd_invariants(args):
    code = _load_gauss(args.path)
    obj = fingerprint_obj(code)
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print("linking (off-diagonal): %s" % obj["linking_off_diagonal"])
        print("linking diagonal (not move-invariant): %s" % obj["linking_diagonal_noninvariant"])
        for p in (2, 3, 5, 7):
            print("fox colorings mod %d: %d" % (p, obj["fox_colorings"][str(p)]))
        print("alexander: %s" % obj["alexander"])
    return EXIT_OK


def _cmd_census(args):
    try:
        classes = census(args.max_crossings_census, args.components, _budget(args))
    except CensusCapError as exc:
        raise DomainError(str(exc)) from exc
    if args.report_dir:
        paths = report_mod.write_census_report(classes, args.report_dir)
        for p in paths:
            print("wrote %s" % p)
    if args.json:
        print(json.dumps(report_mod.census_obj(classes), sort_keys=True))
    else:
        print(report_mod.format_census_table(classes))
    return EXIT_OK


def _cmd_render(args):
    code = _load_gauss(args.path)
    svg = emit_svg(realize_planar(code))
    if args.output and args.output != "-":
        with open(args.output, "wb") as fh:
            fh.write(svg)
    else:
        sys.stdout.buffer.write(svg)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="weldlink",
        description="Welded link diagrams, solid ribbon torus links, and their moves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("validate", _cmd_validate, help="validate a .gauss or .ribbon file")
    p.add_argument("path")
    p.add_argument("--format", choices=("gauss", "ribbon"))

    p = add("conn", _cmd_conn, help="ribbon data -> Gauss code")
    p.add_argument("path")
    p.add_argument("--format", choices=("ribbon",))

    p = add("tube", _cmd_tube, help="Gauss code -> ribbon data")
    p.add_argument("path")
    p.add_argument("--format", choices=("gauss",))

    p = add("canon", _cmd_canon, help="canonical form and key")
    p.add_argument("path")

    p = add("moves", _cmd_moves, help="list applicable moves / apply one by index")
    p.add_argument("path")
    p.add_argument("--kinds", help="comma-separated move kinds")
    p.add_argument("--apply", type=int, help="apply the instance with this index")

    p = add("equiv", _cmd_equiv, help="bounded equivalence search between two codes")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-crossings", type=int)
    p.add_argument("--max-states", type=int)

    p = add("invariants", _cmd_invariants, help="invariant fingerprint of a code")
    p.add_argument("path")

    p = add("census", _cmd_census, help="desk-scale census of equivalence classes")
    p.add_argument("--max-crossings", dest="max_crossings_census", type=int, required=True)
    p.add_argument("--components", type=int, required=True)
    p.add_argument("--report-dir", help="write census.csv and figures here")
    p.set_defaults(max_crossings=None, max_states=None)
    p.add_argument("--budget-crossings", dest="max_crossings", type=int)
    p.add_argument("--budget-states", dest="max_states", type=int)

    p = add("render", _cmd_render, help="Gauss code -> SVG")
    p.add_argument("path")
    p.add_argument("-o", "--output")

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
