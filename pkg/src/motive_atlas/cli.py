"""Command line front end.

    motive-atlas poincare G2 --theta 1
    motive-atlas poincare A3 --omit 1,3
    motive-atlas enumerate --max-dim 5 [--products]
    motive-atlas coincidences --max-dim 5 [--all]
    motive-atlas classify X.json '{"kind": "quadric", ...}'
    motive-atlas selfcheck [--skip-coxeter]

Exit status: 0 on success (any verdict), 1 when selfcheck fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import atlas, coxeter
from .checks import run_selfcheck
from .jsonio import SchemaError, descriptor_from_json, verdict_to_json
from .motive import FlagDescriptor, generating_polynomial
from .rootsys import InvalidTypeError, SimpleType
from .twisted import classify_pair

MAX_ENUM_DIM = 12


class UsageError(Exception):
    pass


def fmt_seq(seq) -> str:
    return "(" + ",".join(map(str, seq)) + ")"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump_table(header, rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _parse_indices(text: str, t: SimpleType) -> frozenset:
    text = text.strip()
    if text.upper() in ("B", ""):
        return frozenset()
    try:
        idx = frozenset(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"cannot parse simple-root indices {text!r}") from None
    bad = sorted(i for i in idx if not 1 <= i <= t.rank)
    if bad:
        raise UsageError(f"indices {bad} out of range 1..{t.rank} for {t}")
    return idx


def _descriptor_json(x: FlagDescriptor) -> list[dict]:
    return [{"type": str(t), "theta": sorted(th)} for t, th in zip(x.factors, x.theta)]


# -- subcommands -------------------------------------------------------------

def cmd_poincare(args) -> str:
    try:
        t = SimpleType.parse(args.type)
    except InvalidTypeError as e:
        raise UsageError(str(e)) from None
    if args.borel:
        theta = frozenset()
    elif args.omit is not None:
        theta = frozenset(range(1, t.rank + 1)) - _parse_indices(args.omit, t)
    elif args.theta is not None:
        theta = _parse_indices(args.theta, t)
    else:
        raise UsageError("give one of --theta, --omit or --borel")
    x = FlagDescriptor.simple(t, theta)
    seq = generating_polynomial(x)
    dim = len(seq) - 1
    name = atlas.canonicalize(x).canonical_name
    if args.format == "json":
        return _dump_json({"type": str(t), "theta": sorted(theta), "canonical_name": name,
                           "dimension": dim, "rank_sequence": list(seq)})
    if args.format == "csv":
        return _dump_csv(["type", "theta", "canonical_name", "dimension", "rank_sequence"],
                         [[str(t), " ".join(map(str, sorted(theta))), name, dim, " ".join(map(str, seq))]])
    return f"{fmt_seq(seq)}, dim {dim}\n"


def _check_max_dim(d: int):
    if not 1 <= d <= MAX_ENUM_DIM:
        raise UsageError(f"--max-dim must lie in 1..{MAX_ENUM_DIM}, got {d}")


def cmd_enumerate(args) -> str:
    _check_max_dim(args.max_dim)
    flags = atlas.enumerate_flags(args.max_dim, args.products)
    if args.format == "json":
        return _dump_json({
            "max_dim": args.max_dim,
            "products": args.products,
            "varieties": [
                {"name": c.canonical_name, "descriptor": _descriptor_json(c.descriptor),
                 "dimension": c.dimension, "rank_sequence": list(c.rank_sequence)}
                for c in flags
            ],
        })
    rows = [[c.canonical_name, atlas.type_theta_label(c.descriptor), c.dimension,
             fmt_seq(c.rank_sequence) if args.format == "table" else " ".join(map(str, c.rank_sequence))]
            for c in flags]
    header = ["name", "type/theta", "dim", "rank_sequence"]
    return _dump_csv(header, rows) if args.format == "csv" else _dump_table(header, rows)


def cmd_coincidences(args) -> str:
    _check_max_dim(args.max_dim)
    report = atlas.coincidence_classes(args.max_dim, args.products)
    classes = report.classes if args.all else report.coincidences
    if args.format == "json":
        return _dump_json({
            "max_dim": report.max_dim,
            "products": args.products,
            "classes": [
                {"dimension": c.dimension, "rank_sequence": list(c.rank_sequence),
                 "members": [m.canonical_name for m in c.members]}
                for c in classes
            ],
        })
    if args.format == "csv":
        return _dump_csv(["dimension", "rank_sequence", "members"],
                         [[c.dimension, " ".join(map(str, c.rank_sequence)), "; ".join(m.canonical_name for m in c.members)]
                          for c in classes])
    if not classes:
        return f"no coincidences up to dimension {args.max_dim}\n"
    return _dump_table(["dim", "rank_sequence", "members"],
                       [[c.dimension, fmt_seq(c.rank_sequence), ", ".join(m.canonical_name for m in c.members)]
                        for c in classes])


def _load_descriptor(arg: str):
    text = arg
    if not arg.lstrip().startswith("{"):
        try:
            text = Path(arg).read_text()
        except OSError as e:
            raise UsageError(f"cannot read descriptor file {arg!r}: {e.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"invalid JSON in {arg!r}: {e}") from None
    try:
        return descriptor_from_json(obj)
    except SchemaError as e:
        raise UsageError(f"invalid descriptor {arg!r}: {e}") from None


def cmd_classify(args) -> str:
    x, y = _load_descriptor(args.x), _load_descriptor(args.y)
    v = classify_pair(x, y)
    if args.format == "json":
        return _dump_json(verdict_to_json(v))
    if args.format == "csv":
        return _dump_csv(["conclusion", "rule", "citation", "facts"],
                         [[v.conclusion.value, e.rule, e.citation, "; ".join(e.facts)] for e in v.trace])
    lines = [v.conclusion.value + (f" ({v.reason})" if v.reason else "")]
    for e in v.trace:
        lines.append(f"  {e.rule:<4} {e.citation}")
        lines += [f"         - {f}" for f in e.facts]
    return "\n".join(lines) + "\n"


def cmd_selfcheck(args) -> tuple[str, int]:
    saved = os.environ.get(coxeter.CAP_ENV)
    if args.max_weyl_cap is not None:
        os.environ[coxeter.CAP_ENV] = str(args.max_weyl_cap)
    try:
        results = run_selfcheck(skip_coxeter=args.skip_coxeter)
    finally:
        if saved is None:
            os.environ.pop(coxeter.CAP_ENV, None)
        else:
            os.environ[coxeter.CAP_ENV] = saved
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        out = _dump_json({"passed": not failed,
                          "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]})
    elif args.format == "csv":
        out = _dump_csv(["name", "ok", "detail"], [[r.name, r.ok, r.detail] for r in results])
    else:
        out = "".join(f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail}\n" for r in results)
        if failed:
            out += f"selfcheck FAILED; first failure: {failed[0].name}: {failed[0].detail}\n"
        else:
            out += f"selfcheck passed ({len(results)} checks)\n"
    return out, 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")

    p = argparse.ArgumentParser(prog="motive-atlas", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("poincare", parents=[common], help="rank sequence of a split flag variety")
    sp.add_argument("type", help="simple type, e.g. A3 or G2")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--theta", help="simple roots in the Levi, e.g. 1,3 ('B' for the Borel)")
    g.add_argument("--omit", help="simple roots removed from the Levi, as in SB_{1,3}")
    g.add_argument("--borel", action="store_true", help="theta empty: the full flag variety G/B")
    sp.set_defaults(func=cmd_poincare)

    for name, func, hlp in [("enumerate", cmd_enumerate, "all split flag varieties up to a dimension"),
                            ("coincidences", cmd_coincidences, "varieties sharing a rank sequence")]:
        sp = sub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("--max-dim", type=int, required=True)
        sp.add_argument("--products", action="store_true", help="include products of simple factors")
        if name == "coincidences":
            sp.add_argument("--all", action="store_true", help="also show singleton classes")
        sp.set_defaults(func=func)

    sp = sub.add_parser("classify", parents=[common], help="decide motivic isomorphism of two twisted varieties")
    sp.add_argument("x", help="descriptor JSON file, or inline JSON")
    sp.add_argument("y", help="descriptor JSON file, or inline JSON")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("selfcheck", parents=[common], help="run the built-in verification suite")
    sp.add_argument("--skip-coxeter", action="store_true", help="skip the Weyl group enumeration oracles")
    sp.add_argument("--max-weyl-cap", type=int, default=None,
                    help=f"largest |W| to enumerate (env {coxeter.CAP_ENV})")
    sp.set_defaults(func=cmd_selfcheck)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as e:
        print(f"motive-atlas {args.command}: error: {e}", file=sys.stderr)
        return 2
    out, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
