"""Command-line front end.

Inputs are a group (preset name or JSON file) and, for functor-level
commands, a Mackey functor (preset token or JSON file).  Subcommands
compute towers, slices, cell lists, generator sets, geometric
fixed-point data, axiom reports, and SVG charts.

Exit codes: 0 success, 1 domain error (a named precondition failed),
2 parse error (bad flags, unknown preset, malformed file).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from .abelian import factor_string
from .chart import render_tower_svg
from .errors import DomainError, ParseError
from .groups import (
    NAMED_GENERATORS,
    family_not_containing,
    named_group,
    quotient_group,
    subgroup_lattice,
)
from .mackey import MACKEY_PRESETS, check_mackey_axioms, mackey_preset
from .serialize import (
    canonical_json,
    group_to_json,
    parse_group_obj,
    parse_mackey_obj,
    slices_view_json,
    tower_to_json,
)
from .slices import (
    em_tower_minus,
    em_tower_plus,
    irregular_tower_from_regular,
    negative_generators,
    pullback_degree,
    slice_cells,
    tau_one_generators,
)

_CONSTANT_RE = re.compile(r"constant-Z[1-9][0-9]*$")


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns exit codes."""

    def error(self, message):
        raise ParseError(message)


@dataclass
class RunConfig:
    command: str
    group_spec: str | None
    mackey_spec: str | None
    fmt: str
    out: str | None
    options: dict


def _build_parser():
    parser = _Parser(prog="slicekit", description=__doc__.splitlines()[0])
    parser.add_argument("--group", help="group preset (%s) or JSON file"
                        % ", ".join(sorted(NAMED_GENERATORS)))
    parser.add_argument("--mackey",
                        help="Mackey preset (%s, constant-Z<n>) or JSON file"
                        % ", ".join(MACKEY_PRESETS))
    sub = parser.add_subparsers(dest="command", metavar="command")

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write output to a file")

    def tower_flags(p):
        p.add_argument("--shift", type=int, choices=(1, -1), default=1,
                       help="suspension direction (+1 or -1)")
        p.add_argument("--irregular", action="store_true",
                       help="irregular tower of the unsuspended functor")

    p = sub.add_parser("tower", help="full slice tower with stages")
    tower_flags(p)
    common(p)
    p = sub.add_parser("slices", help="slice invariant factors only")
    tower_flags(p)
    common(p)
    p = sub.add_parser("cells", help="slice cells of one dimension")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--regular", action="store_true")
    common(p)
    p = sub.add_parser("generators", help="slice-sphere generator sets")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p = sub.add_parser("phi", help="geometric fixed-point transport data")
    p.add_argument("--normal", required=True,
                   help="normal subgroup: e, G, a subgroup id, or a JSON "
                        "list of generator permutations")
    p.add_argument("--degree", type=int, default=None)
    common(p)
    p = sub.add_parser("check-axioms", help="verify the Mackey functor axioms")
    common(p)
    p = sub.add_parser("chart", help="render the tower as an SVG file")
    tower_flags(p)
    p.add_argument("--out", required=True, help="output SVG path")
    return parser


# ---------------------------------------------------------------------------
# input resolution

def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc))
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("%s: invalid JSON (%s)" % (path, exc))


def _resolve_group(spec):
    if spec is None:
        raise ParseError("this command needs --group")
    if spec in NAMED_GENERATORS:
        return named_group(spec)
    if os.path.exists(spec):
        return parse_group_obj(_load_json(spec))
    raise ParseError("unknown group preset or missing file %r" % spec)


def _is_mackey_token(spec):
    return spec in MACKEY_PRESETS or _CONSTANT_RE.match(spec) is not None


def parse_inputs(config):
    """Resolve (group, functor) from the config.

    File-supplied functors are axiom-checked here and rejected with the
    failing identity, except under check-axioms which wants the report.
    """
    group = None
    if config.group_spec is not None:
        group = _resolve_group(config.group_spec)
    functor = None
    if config.mackey_spec is not None:
        spec = config.mackey_spec
        if _is_mackey_token(spec):
            if group is None:
                raise ParseError("--mackey preset %r needs --group" % spec)
            functor = mackey_preset(group, spec)
        elif os.path.exists(spec):
            functor, from_preset = parse_mackey_obj(_load_json(spec), group)
            group = functor.group
            if not from_preset and config.command != "check-axioms":
                report = check_mackey_axioms(functor)
                if not report.passed:
                    raise DomainError(
                        "functor fails the Mackey axioms: %s" % report.failures[0])
        else:
            raise ParseError("unknown Mackey preset or missing file %r" % spec)
    return group, functor


def _need_functor(functor):
    if functor is None:
        raise ParseError("this command needs --mackey")
    return functor


def _parse_normal(G, spec):
    lat = subgroup_lattice(G)
    if spec in ("e", "1", "trivial"):
        return G.trivial_subgroup()
    if spec in ("G", "whole"):
        return G.whole_subgroup()
    if spec in lat.by_id:
        return lat.by_id[spec]
    if spec.strip().startswith("["):
        try:
            gens_obj = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise ParseError("--normal: invalid JSON (%s)" % exc)
        if not isinstance(gens_obj, list):
            raise ParseError("--normal: expected a list of permutations")
        gens = []
        for g in gens_obj:
            if not (isinstance(g, list)
                    and sorted(g) == list(range(G.degree))):
                raise ParseError("--normal: %r is not a permutation of degree %d"
                                 % (g, G.degree))
            gens.append(tuple(g))
        return G.generated_subgroup(gens)
    raise ParseError("--normal: no subgroup named %r" % spec)


# ---------------------------------------------------------------------------
# shared text helpers

def _reps_desc(lat):
    return sorted(lat.class_representatives(),
                  key=lambda sid: (-lat.subgroup(sid).order, sid))


def _invariant_line(lat, inv_by_id):
    parts = []
    for sid in _reps_desc(lat):
        inv = inv_by_id[sid]
        if inv != (0, ()):
            parts.append("%s: %s" % (lat.label(sid), factor_string(inv)))
    return " | ".join(parts) if parts else "(zero)"


def _build_tower(functor, shift, irregular):
    if irregular:
        if shift != 1:
            raise ParseError("--irregular applies to the +1 tower only")
        return irregular_tower_from_regular(em_tower_plus(functor))
    if shift == 1:
        return em_tower_plus(functor)
    return em_tower_minus(functor)


def _group_header(G):
    return "group: degree %d, order %d" % (G.degree, G.order)


def _cell_json(lat, c):
    return {
        "subgroup": c.subgroup_id,
        "label": lat.label(c.subgroup_id),
        "order": c.subgroup_order,
        "n": c.n,
        "regular": c.regular,
        "dimension": c.dimension,
    }


def _cell_text(lat, c):
    kind = "regular" if c.regular else "irregular"
    return "cell H=%s n=%d %s dim=%d" % (
        lat.label(c.subgroup_id), c.n, kind, c.dimension)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_tower(args, group, functor):
    T = _build_tower(_need_functor(functor), args.shift, args.irregular)
    if args.format == "json":
        return canonical_json(tower_to_json(T))
    lat = T.base.lattice
    lines = [_group_header(T.base.group),
             "tower: shift %+d, %s" % (T.shift, T.variant)]
    for k in sorted(T.stages):
        lines.append("stage %d: %s" % (
            k, _invariant_line(lat, T.stages[k].level_invariants())))
    for k in sorted(T.slices):
        S = T.slices[k]
        inv = {sid: S.levels[sid].invariant_factors() for sid in S.levels}
        lines.append("slice %d: %s" % (k, _invariant_line(lat, inv)))
    return "\n".join(lines) + "\n"


def _cmd_slices(args, group, functor):
    T = _build_tower(_need_functor(functor), args.shift, args.irregular)
    if args.format == "json":
        return canonical_json(slices_view_json(T))
    lat = T.base.lattice
    lines = [_group_header(T.base.group),
             "slices: shift %+d, %s" % (T.shift, T.variant)]
    for k in sorted(T.slices):
        S = T.slices[k]
        inv = {sid: S.levels[sid].invariant_factors() for sid in S.levels}
        lines.append("slice %d: %s" % (k, _invariant_line(lat, inv)))
    return "\n".join(lines) + "\n"


def _cmd_cells(args, group, functor):
    if group is None:
        raise ParseError("this command needs --group")
    lat = subgroup_lattice(group)
    cells = slice_cells(group, args.dim, regular_only=args.regular)
    if args.format == "json":
        payload = {
            "group": group_to_json(group),
            "dimension": args.dim,
            "regular_only": args.regular,
            "cells": [_cell_json(lat, c) for c in cells],
        }
        return canonical_json(payload)
    lines = [_group_header(group),
             "cells of dimension %d%s:" % (
                 args.dim, " (regular only)" if args.regular else "")]
    lines.extend("  " + _cell_text(lat, c) for c in cells)
    if not cells:
        lines.append("  (none)")
    return "\n".join(lines) + "\n"


def _cmd_generators(args, group, functor):
    if group is None:
        raise ParseError("this command needs --group")
    lat = subgroup_lattice(group)
    gs = negative_generators(group, args.n)
    tau = tau_one_generators(group)
    if args.format == "json":
        payload = {
            "group": group_to_json(group),
            "n": args.n,
            "min_nonnegative_degree": gs.min_nonnegative_degree,
            "negative": [_cell_json(lat, c) for c in gs.negative],
            "nonnegative_sample": [_cell_json(lat, c) for c in gs.nonnegative_sample],
            "tau_one_min_degree": tau.min_nonnegative_degree,
        }
        return canonical_json(payload)
    lines = [_group_header(group),
             "generators with slice degree >= %d:" % (-args.n)]
    for c in gs.negative:
        lines.append("  " + _cell_text(lat, c))
    if not gs.negative:
        lines.append("  (no negative-degree generators)")
    lines.append("nonnegative sample (degree >= %d):" % gs.min_nonnegative_degree)
    for c in gs.nonnegative_sample:
        lines.append("  " + _cell_text(lat, c))
    lines.append("slice->=1 generators start at degree %d" % tau.min_nonnegative_degree)
    return "\n".join(lines) + "\n"


def _cmd_phi(args, group, functor):
    if group is None:
        raise ParseError("this command needs --group")
    lat = subgroup_lattice(group)
    N = _parse_normal(group, args.normal)
    if not N.is_normal():
        raise DomainError("phi: subgroup %s is not normal" % lat.label(N.id))
    outside, inside = family_not_containing(group, N)
    out_ids = sorted(outside, key=lambda sid: (lat.subgroup(sid).order, sid))
    in_ids = sorted(inside, key=lambda sid: (lat.subgroup(sid).order, sid))
    qdata = quotient_group(group, N)
    payload = {
        "group": group_to_json(group),
        "normal": {"id": N.id, "label": lat.label(N.id), "order": N.order},
        "quotient": group_to_json(qdata.group),
        "family_not_containing": list(out_ids),
        "family_containing": list(in_ids),
    }
    lines = [_group_header(group),
             "normal subgroup %s (order %d)" % (lat.label(N.id), N.order),
             "quotient group: degree %d, order %d" % (
                 qdata.group.degree, qdata.group.order),
             "family away from N: %s" % (
                 ", ".join(lat.label(s) for s in out_ids) or "(empty)"),
             "family containing N: %s" % ", ".join(lat.label(s) for s in in_ids)]
    if args.degree is not None:
        if N.is_trivial():
            raise DomainError("phi: degree transport needs a nontrivial N")
        pulled = pullback_degree(args.degree, N)
        payload["degree"] = args.degree
        payload["pullback_degree"] = pulled
        lines.append("degree %d pulls back to %d" % (args.degree, pulled))
    if args.format == "json":
        return canonical_json(payload)
    return "\n".join(lines) + "\n"


def _cmd_check_axioms(args, group, functor):
    report = check_mackey_axioms(_need_functor(functor))
    if args.format == "json":
        payload = {
            "passed": report.passed,
            "failures": [{"identity": f.identity, "witness": f.witness}
                         for f in report.failures],
        }
        text = canonical_json(payload)
    else:
        text = str(report) + "\n"
    if not report.passed:
        # Emit the report, then fail the invocation.
        raise _ReportedFailure(text)
    return text


class _ReportedFailure(DomainError):
    """Axiom report that should print before the nonzero exit."""

    def __init__(self, text):
        super().__init__("the functor fails the Mackey axioms")
        self.text = text


def _cmd_chart(args, group, functor):
    T = _build_tower(_need_functor(functor), args.shift, args.irregular)
    svg = render_tower_svg(T)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return "wrote %s\n" % args.out


_COMMANDS = {
    "tower": _cmd_tower,
    "slices": _cmd_slices,
    "cells": _cmd_cells,
    "generators": _cmd_generators,
    "phi": _cmd_phi,
    "check-axioms": _cmd_check_axioms,
    "chart": _cmd_chart,
}


# ---------------------------------------------------------------------------
# driver

def run(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise ParseError("a command is required (tower, slices, cells, "
                             "generators, phi, check-axioms, chart)")
        config = RunConfig(
            command=args.command,
            group_spec=args.group,
            mackey_spec=args.mackey,
            fmt=getattr(args, "format", "svg"),
            out=getattr(args, "out", None),
            options=dict(vars(args)),
        )
        group, functor = parse_inputs(config)
        text = _COMMANDS[args.command](args, group, functor)
        if args.command != "chart" and config.out is not None:
            with open(config.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except ParseError as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return 2
    except _ReportedFailure as exc:
        sys.stdout.write(exc.text)
        sys.stderr.write("domain error: %s\n" % exc)
        return 1
    except DomainError as exc:
        sys.stderr.write("domain error: %s\n" % exc)
        return 1
    except OSError as exc:
        sys.stderr.write("domain error: cannot write output (%s)\n" % exc)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
