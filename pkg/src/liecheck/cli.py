"""Command-line front end.

    liecheck verify-all [--model NAME] [--config PATH] [--format json|markdown] [--out PATH]
    liecheck verify-all --list-models
    liecheck dim E7 sc w7
    liecheck branch E7:sc kac:0,1,0,0,0,0,0,0 w7
    liecheck torsion E7 sc 2
    liecheck cancel "GU4xGU2: E,E | E,E"

Exit codes: 0 when every claim passes, 1 on a verification failure, 2 on a
usage or I/O error.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .branching import branch, branch_rows, levi_map, pseudo_levi_map
from .endoscopy import cancellation_sweep, parse_stable, verify_endoscopy
from .models import (builtin_models, load_models, verify_elliptic_lifts, verify_model,
                     verify_weyl_constants, point_from_spec)
from .repchar import dim_weyl, irrep_character
from .report import merge
from .rootdata import build_datum, fundamental_weights
from .torsion import KacCoordinates, enumerate_torsion, kac_to_point, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------------
# argument helpers

def _datum(words: list[str]):
    """'E7', 'E7 sc', 'E7:sc' or any descriptor string."""
    text = words[0] if len(words) == 1 else f"{words[0]}:{words[1]}"
    try:
        return build_datum(text)
    except ValueError as e:
        raise UsageError(f"cannot build {text!r}: {e}") from e


_TERM = re.compile(r"^(\d*)(?:w|ω)(\d*)$")


def parse_weight(d, text: str) -> tuple:
    """Highest weight from 'w7', 'ω', '2w1+w3', Dynkin labels '0,1,0' or 'amb:1,1,0'."""
    text = text.replace(" ", "")
    try:
        if text.startswith("amb:"):
            return d.weight_from_ambient([Fraction(v) for v in text[4:].split(",")])
        r = d.semisimple_rank
        if "," in text or text.isdigit():
            labels = [int(v) for v in text.split(",")]
        else:
            labels = [0] * r
            for term in text.split("+"):
                m = _TERM.match(term)
                if not m:
                    raise UsageError(f"cannot read weight term {term!r}")
                idx = int(m.group(2)) if m.group(2) else 1
                if not m.group(2) and r != 1:
                    raise UsageError("write w<i> when the rank is above 1")
                if not 1 <= idx <= r:
                    raise UsageError(f"no fundamental weight w{idx} in rank {r}")
                labels[idx - 1] += int(m.group(1) or 1)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if len(labels) != r:
        raise UsageError(f"expected {r} Dynkin labels, got {len(labels)}")
    if any(v < 0 for v in labels):
        raise UsageError("Dynkin labels must be nonnegative")
    fw = fundamental_weights(d)
    w = [Fraction(0)] * d.rank
    for k, v in enumerate(labels):
        w = [a + v * b for a, b in zip(w, fw[k])]
    if any(x.denominator != 1 for x in w):
        raise UsageError("weight is not a character of this group; use amb:... coordinates")
    return tuple(int(x) for x in w)


def _subgroup_map(d, text: str):
    kind, _, body = text.partition(":")
    try:
        if kind == "levi":
            subset = [int(v) - 1 for v in body.split(",") if v]
            if any(not 0 <= i < d.semisimple_rank for i in subset):
                raise UsageError("Levi nodes are numbered from 1")
            return levi_map(d, subset)
        if kind == "kac":
            vals = tuple(tuple(int(v) for v in part.split(",")) for part in body.split(";"))
            return pseudo_levi_map(d, kac_to_point(d, KacCoordinates(vals)))
        if kind == "element":
            return pseudo_levi_map(d, point_from_spec(d, {"element": body}))
        if kind == "std":
            vals = {}
            for part in body.split(";"):
                k, _, vs = part.partition("=")
                vals[k] = vs.split(",")
            return pseudo_levi_map(d, point_from_spec(d, {"std": vals}))
    except (ValueError, KeyError) as e:
        raise UsageError(f"cannot read subgroup {text!r}: {e}") from e
    raise UsageError("subgroup is levi:<nodes>, kac:<tuple>, element:<expr> or std:<k=vals;...>")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# commands

def cmd_verify_all(args) -> int:
    models = builtin_models()
    if args.config:
        try:
            models = models + load_models(args.config)
        except OSError as e:
            raise UsageError(f"cannot read {args.config}: {e}") from e
        except (ValueError, KeyError) as e:
            raise UsageError(f"bad model file {args.config}: {e}") from e
    if args.list_models:
        _emit("".join(f"{m.name}\t{m.descriptor}\t{m.total_dim}\n" for m in models), args.out)
        return EXIT_OK
    if args.model:
        chosen = [m for m in models if m.name == args.model]
        if not chosen:
            raise UsageError(f"unknown model {args.model!r}; see --list-models")
        report = merge(f"liecheck {args.model}", (verify_model(m) for m in chosen))
    else:
        parts = [verify_model(m) for m in models]
        parts += [verify_elliptic_lifts(), verify_weyl_constants(), verify_endoscopy()]
        report = merge("liecheck verify-all", parts)
    text = report.to_json() if args.format == "json" else report.to_markdown()
    _emit(text, args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_dim(args) -> int:
    d = _datum(args.group)
    w = parse_weight(d, args.weight)
    _emit(f"{dim_weyl(d, w)}\n", None)
    return EXIT_OK


def cmd_branch(args) -> int:
    d = _datum(args.ambient)
    m = _subgroup_map(d, args.sub)
    w = parse_weight(d, args.rep)
    rows = branch_rows(branch(irrep_character(d, w), m), m.source)
    body = [[",".join(map(str, r.labels)) or "-", ",".join(map(str, r.central)) or "-",
             r.multiplicity, r.dim] for r in rows]
    _emit(f"# {d.type_label} -> {m.source.type_label}, dim {dim_weyl(d, w)}\n"
          + _table(["labels", "central", "mult", "dim"], body), None)
    return EXIT_OK


def cmd_torsion(args) -> int:
    words = args.group + [args.order]
    if len(words) < 2:
        raise UsageError("torsion needs a group and an order")
    try:
        order = int(words[-1])
    except ValueError as e:
        raise UsageError(f"order must be an integer, got {words[-1]!r}") from e
    if order < 1:
        raise UsageError("order must be positive")
    d = _datum(words[:-1])
    rows = []
    for p in enumerate_torsion(d, order, args.kind):
        s = summarize(d, p)
        rows.append([s.label, s.order, s.kac_order, "yes" if s.elliptic else "no", s.kac])
    _emit(_table(["centralizer", "order", "kac order", "elliptic", "kac"], rows), None)
    return EXIT_OK


def cmd_cancel(args) -> int:
    try:
        shapes = [parse_stable(s) for s in args.shapes] if args.shapes else None
        rows = cancellation_sweep(shapes, identity=args.identity)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.eta:
        rows = [r for r in rows if r.eta_minus_one == args.eta]
    body = [[r.shape, r.eta_minus_one, r.match, r.h_sum, r.inner_sum, r.total] for r in rows]
    _emit(_table(["shape", "eta(-1)", "match", "left", "right", "difference"], body), None)
    return EXIT_OK if all(r.total == 0 for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liecheck", description="Check the dual-side structure of spherical models.")
    p.add_argument("--version", action="version", version=f"liecheck {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-all", help="run every check and print a report")
    v.add_argument("--model", help="only this model")
    v.add_argument("--format", choices=("json", "markdown"), default="markdown")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--list-models", action="store_true", help="list model names and exit")
    v.add_argument("--config", help="JSON file with extra models")
    v.set_defaults(func=cmd_verify_all)

    d = sub.add_parser("dim", help="dimension of an irreducible representation")
    d.add_argument("group", nargs="+", help="type and isogeny, e.g. 'E7 sc' or a descriptor")
    d.add_argument("weight", help="w7, 2w1+w3, Dynkin labels 0,1,0 or amb:<ambient coordinates>")
    d.set_defaults(func=cmd_dim)

    b = sub.add_parser("branch", help="restrict an irreducible to a Levi or a centralizer")
    b.add_argument("ambient", nargs="+", help="group descriptor")
    b.add_argument("sub", help="levi:<nodes>, kac:<tuple>, element:<expr> or std:<k=vals;...>")
    b.add_argument("rep", help="highest weight")
    b.set_defaults(func=cmd_branch)

    t = sub.add_parser("torsion", help="classes of torsion elements with their centralizers")
    t.add_argument("group", nargs="+", help="type and isogeny")
    t.add_argument("order", help="Kac order (or group order with --kind group)")
    t.add_argument("--kind", choices=("kac", "group"), default="kac")
    t.set_defaults(func=cmd_torsion)

    c = sub.add_parser("cancel", help="transfer-sign cancellation table for GU4xGU2 classes")
    c.add_argument("shapes", nargs="*", help="e.g. 'GU4xGU2: E,E | Q2'; default: every elliptic shape")
    c.add_argument("--eta", type=int, choices=(1, -1))
    c.add_argument("--identity", choices=("first", "second"), default="first")
    c.set_defaults(func=cmd_cancel)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"liecheck: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except OSError as e:
        print(f"liecheck: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
