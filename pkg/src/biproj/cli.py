"""Command-line front end.

Subcommands: validate, hilbert, delta, classify, resolution, fuzz.  All
consume configuration files (see formats), print JSON or aligned text, and
exit with a stable code: 0 ok, 1 bad input, 2 not ACM, 3 removal-hypothesis
violation (collinear pair or non-interior point), 4 verification mismatch.
Errors also emit one machine-readable JSON object on stderr.  The default
coefficient field can be overridden with --field or BIPROJ_FIELD.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import formats
from .errors import (
    BiprojError,
    CollinearRemoval,
    NotACM,
    NotInterior,
    VerificationMismatch,
)
from .fields import QQ, field_by_name
from .grid import PointKind, classify_points, corners_and_vertices, is_acm, validate
from .hilbert import delta, hilbert_acm, puncture_hilbert
from .oracle import betti_oracle, hilbert_oracle, verify_separator
from .resolution import (
    acm_resolution,
    betti_diff,
    betti_from_delta,
    removal_plan,
    remove_points,
    separator_for,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_NOT_ACM = 2
EXIT_HYPOTHESIS = 3
EXIT_MISMATCH = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the exit-code contract wants 1."""

    def error(self, message):
        _err("UsageError", message)
        raise SystemExit(EXIT_BAD_INPUT)


def _err(name, message):
    print(json.dumps({"error": name, "message": str(message)}), file=sys.stderr)


def _emit(args, obj, text):
    print(json.dumps(obj, indent=2) if args.format == "json" else text)


def _resolve_field(args):
    name = getattr(args, "field", None) or os.environ.get("BIPROJ_FIELD")
    return field_by_name(name) if name else None


def _load(args):
    return formats.load_configuration(args.config)


def cmd_validate(args):
    grid = _load(args)
    rep = validate(grid)
    nr, nc = grid.shape
    obj = {
        "valid": rep.ok,
        "rows": nr,
        "cols": nc,
        "npoints": grid.npoints,
        "violations": list(rep.violations),
    }
    lines = ["valid: %s" % ("yes" if rep.ok else "no"),
             "rows: %d  cols: %d  points: %d" % (nr, nc, grid.npoints)]
    lines += ["violation: %s" % v for v in rep.violations]
    _emit(args, obj, "\n".join(lines))
    if not rep.ok:
        _err("InvalidGrid", "; ".join(rep.violations))
        return EXIT_BAD_INPUT
    return EXIT_OK


def _hilbert_matrix(args, grid):
    if args.oracle:
        window = tuple(args.window) if args.window else None
        return hilbert_oracle(grid, _resolve_field(args), window=window)
    try:
        return hilbert_acm(grid)
    except NotACM:
        raise NotACM("scheme is not ACM; use --oracle for the rank-based matrix")


def _window_entries(M, window):
    wi, wj = window
    return np.array([[M.m(i, j) for j in range(wj + 1)] for i in range(wi + 1)])


def cmd_hilbert(args):
    grid = _load(args)
    M = _hilbert_matrix(args, grid)
    window = tuple(args.window) if args.window else M.window
    entries = _window_entries(M, window)
    _emit(args, formats.matrix_to_json(entries, "hilbert"),
          formats.render_matrix(entries))
    return EXIT_OK


def cmd_delta(args):
    grid = _load(args)
    D = delta(_hilbert_matrix(args, grid))
    if args.window:
        wi, wj = args.window
    else:
        support = np.nonzero(D.entries)
        wi = int(support[0].max()) if support[0].size else 0
        wj = int(support[1].max()) if support[1].size else 0
    entries = np.array([[D.c(i, j) for j in range(wj + 1)] for i in range(wi + 1)])
    _emit(args, formats.matrix_to_json(entries, "delta"),
          formats.render_matrix(entries))
    return EXIT_OK


def cmd_classify(args):
    grid = _load(args)
    if not is_acm(grid):
        _emit(args, {"acm": False}, "ACM: no")
        _err("NotACM", "no line permutation yields a staircase; "
             "point classes are only defined for ACM configurations")
        return EXIT_NOT_ACM
    corners, vertices = corners_and_vertices(grid)
    classes = classify_points(grid)
    obj = {
        "acm": True,
        "corners": [list(c) for c in corners],
        "vertices": [list(v) for v in vertices],
        "points": [
            {
                "position": list(pc.position),
                "kind": "interior" if pc.kind is PointKind.INTERIOR else "boundary",
                "row_count": pc.row_count,
                "col_count": pc.col_count,
                "separating_degree": list(pc.separating_degree),
            }
            for pc in classes
        ],
    }
    lines = ["ACM: yes",
             "corners: " + " ".join("(%d,%d)" % c for c in corners),
             "vertices: " + " ".join("(%d,%d)" % v for v in vertices)]
    for pc in classes:
        lines.append("P(%d,%d)  %s  separating degree (%d,%d)" % (
            pc.position + ("interior" if pc.kind is PointKind.INTERIOR else "boundary",)
            + pc.separating_degree))
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def _parse_removals(args):
    pts = []
    for chunk in args.remove or []:
        try:
            i, j = chunk.split(",")
            pts.append((int(i), int(j)))
        except ValueError:
            raise BiprojError("bad --remove entry %r (expected i,j)" % chunk)
    if args.plan:
        with open(args.plan) as fh:
            obj = json.load(fh)
        for entry in obj["points"]:
            pts.append((int(entry[0]), int(entry[1])))
    return pts


def _separator_objects(grid, plan):
    out, texts, cur = [], [], grid
    for point in plan.points:
        sep = separator_for(cur, point)
        out.append({
            "point": list(sep.point),
            "degree": list(sep.degree),
            "lines": ["%s_%d" % line for line in sep.lines],
        })
        texts.append("separator P(%d,%d): degree (%d,%d), lines %s" % (
            sep.point + sep.degree + (" ".join("%s_%d" % l for l in sep.lines),)))
        cur = cur.without(point)
    return out, texts


def cmd_resolution(args):
    grid = _load(args)
    field = _resolve_field(args)
    pts = _parse_removals(args)
    certified = None
    plan = None
    if pts:
        plan = removal_plan(grid, pts)
        grid_final = grid
        for p in plan.points:
            grid_final = grid_final.without(p)
        if args.method == "combinatorial":
            res = remove_points(grid, plan)
            table, source = res.betti, "removal"
            certified = [
                {
                    "point": list(point),
                    "degree": list(rep.degree),
                    "cond2_violations": [list(v) for v in rep.cond2_violations],
                    "cond3_violations": [list(v) for v in rep.cond3_violations],
                    "ok": rep.ok,
                }
                for point, rep in zip(plan.points, res.conditions)
            ]
        elif args.method == "delta":
            M = hilbert_acm(grid)
            for (r, s) in plan.degrees:
                M = puncture_hilbert(M, r, s)
            table, source = betti_from_delta(delta(M)), "delta"
        else:
            table, source = betti_oracle(grid_final, field), "oracle"
    else:
        grid_final = grid
        if args.method == "combinatorial":
            table, source = acm_resolution(grid), "acm"
        elif args.method == "delta":
            M = hilbert_acm(grid) if is_acm(grid) else hilbert_oracle(grid, field)
            table, source = betti_from_delta(delta(M)), "delta"
        else:
            table, source = betti_oracle(grid, field), "oracle"

    obj = formats.betti_to_json(table, source, certified)
    lines = [formats.render_betti(table)]

    if args.separators and plan is not None:
        sep_objs, sep_texts = _separator_objects(grid, plan)
        obj["separators"] = sep_objs
        lines += sep_texts

    mismatch = None
    if args.verify:
        reference = betti_oracle(grid_final, field)
        if reference.counters() != table.counters() and (field is None or field.kind == "prime"):
            reference = betti_oracle(grid_final, QQ)  # rule out unlucky prime
        mismatch = betti_diff(table, reference)
        obj["verification"] = {
            "match": not mismatch,
            "diff": [
                {"level": lvl, "degree": list(d), "got": a, "oracle": b}
                for lvl, d, a, b in mismatch
            ],
        }
        lines.append("verification: %s" % ("MATCH" if not mismatch else "MISMATCH"))
        for lvl, d, a, b in mismatch:
            lines.append("  beta%d (%d,%d): got %d, oracle %d" % ((lvl,) + d + (a, b)))

    _emit(args, obj, "\n".join(lines))
    if mismatch:
        raise VerificationMismatch(
            "betti table differs from oracle at " +
            ", ".join("beta%d (%d,%d)" % ((lvl,) + d) for lvl, d, _, _ in mismatch))
    return EXIT_OK


def random_staircase(rng, max_rows=6, max_cols=6):
    """Uniform-ish random staircase grid with 1..max_rows nonempty rows."""
    from .grid import staircase

    nr = int(rng.integers(1, max_rows + 1))
    lengths = sorted(
        (int(rng.integers(1, max_cols + 1)) for _ in range(nr)), reverse=True
    )
    return staircase(tuple(lengths))


def random_plan(grid, rng, max_points=4):
    """A random valid removal set: interior points, pairwise distinct lines."""
    interior = [pc.position for pc in classify_points(grid)
                if pc.kind is PointKind.INTERIOR]
    order = list(rng.permutation(len(interior)))
    chosen, rows, cols = [], set(), set()
    for idx in order:
        if len(chosen) == max_points:
            break
        i, j = interior[idx]
        if i in rows or j in cols:
            continue
        chosen.append((i, j))
        rows.add(i)
        cols.add(j)
    return chosen


def _fuzz_one(grid, rng, hmax, field):
    oracle_table = betti_oracle(grid, field)
    acm_table = acm_resolution(grid)
    if oracle_table.counters() != acm_table.counters():
        return "acm resolution differs from oracle on %r" % (grid.row_counts(),)
    mo = hilbert_oracle(grid, field)
    ma = hilbert_acm(grid)
    wi, wj = min(mo.window[0], ma.window[0]), min(mo.window[1], ma.window[1])
    if not (mo.entries[: wi + 1, : wj + 1] == ma.entries[: wi + 1, : wj + 1]).all():
        return "hilbert mismatch on %r" % (grid.row_counts(),)
    pts = random_plan(grid, rng, max_points=hmax)
    if not pts:
        return None
    plan = removal_plan(grid, pts)
    res = remove_points(grid, plan)
    from_delta = betti_from_delta(delta(res.hilbert))
    from_oracle = betti_oracle(res.grid_z, field)
    if not (res.betti.counters() == from_delta.counters() == from_oracle.counters()):
        return "removal mismatch on %r minus %r" % (grid.row_counts(), pts)
    cur = grid
    for sep in res.separators:
        if not verify_separator(sep, cur.without(sep.point), sep.point, field):
            return "separator %r fails verification" % (sep,)
        cur = cur.without(sep.point)
    return None


def cmd_fuzz(args):
    rng = np.random.default_rng(args.seed)
    field = _resolve_field(args)
    failures = []
    for case in range(args.cases):
        grid = random_staircase(rng, args.max_rows, args.max_cols)
        problem = _fuzz_one(grid, rng, args.max_removals, field)
        if problem:
            failures.append("case %d: %s" % (case, problem))
    obj = {"cases": args.cases, "seed": args.seed, "failures": failures}
    text = "cases: %d  failures: %d" % (args.cases, len(failures))
    _emit(args, obj, "\n".join([text] + failures))
    if failures:
        raise VerificationMismatch("; ".join(failures))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="biproj", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--field", help="rationals | prime[:p] (or BIPROJ_FIELD)")
    common.add_argument("--seed", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, config=True):
        p = sub.add_parser(name, parents=[common])
        if config:
            p.add_argument("config", help="ConfigurationFile path")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate)
    for name, func in (("hilbert", cmd_hilbert), ("delta", cmd_delta)):
        p = add(name, func)
        p.add_argument("--window", type=int, nargs=2, metavar=("I", "J"))
        p.add_argument("--oracle", action="store_true",
                       help="rank-based computation (works on non-ACM schemes)")
    add("classify", cmd_classify)
    p = add("resolution", cmd_resolution)
    # extend, so both "--remove 0,3 0,4" and a repeated flag accumulate
    p.add_argument("--remove", action="extend", nargs="+", metavar="i,j",
                   default=[])
    p.add_argument("--plan", help="JSON file with a points array")
    p.add_argument("--method", choices=("combinatorial", "delta", "oracle"),
                   default="combinatorial")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--separators", action="store_true")
    p = add("fuzz", cmd_fuzz, config=False)
    p.add_argument("--cases", type=int, default=25)
    p.add_argument("--max-rows", type=int, default=5)
    p.add_argument("--max-cols", type=int, default=5)
    p.add_argument("--max-removals", type=int, default=3)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code or EXIT_OK
    try:
        _resolve_field(args)  # reject a bad field name even if the command never uses it
        return args.func(args)
    except (CollinearRemoval, NotInterior) as e:
        _err(type(e).__name__, e)
        return EXIT_HYPOTHESIS
    except NotACM as e:
        _err(type(e).__name__, e)
        return EXIT_NOT_ACM
    except VerificationMismatch as e:
        _err(type(e).__name__, e)
        return EXIT_MISMATCH
    except (BiprojError, OSError, ValueError, KeyError) as e:
        _err(type(e).__name__, e)
        return EXIT_BAD_INPUT


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
