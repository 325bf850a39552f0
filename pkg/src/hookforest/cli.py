"""Command line front end.  Every command prints one JSON document.

Exit codes: 0 success, 1 a verified identity failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .algebra import closed_hookp, closed_hookp2
from .bijections import CodeError, CodeSequence, decode, encode, psi
from .colored import ColoredLabelledForest, Partition, count_colored, prop_cf_count, thm_cfs_count
from .forest import (
    DegreeSequence,
    ForestParseError,
    InvalidTypeError,
    count_forests,
    enumerate_forests,
)
from .hookpoly import brute_hookp, brute_hookp2
from .verify import ALL_CHECKS, VerifySweepConfig, run_sweep


class UsageError(Exception):
    pass


def dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_json(arg: str):
    """Parse ``arg`` as JSON text, or as the path of a JSON file."""
    text = arg
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {arg!r}: {exc}") from None


def degree_type(text: str) -> DegreeSequence:
    try:
        return DegreeSequence.parse(text)
    except InvalidTypeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(arg: str) -> Partition:
    return Partition.from_json(_load_json(arg))


def _type_json(r: DegreeSequence) -> list:
    return [str(c) for c in r.counts]


# -- commands ----------------------------------------------------------------

def cmd_enumerate(args) -> dict:
    forests = enumerate_forests(args.type)
    return {"r": _type_json(args.type), "count": str(len(forests)),
            "forests": [json.loads(dump(f)) for f in forests]}


def cmd_count(args) -> dict:
    return {"count": str(count_forests(args.type))}


def cmd_hookpoly(args) -> dict:
    r = args.type
    brute_fn, closed_fn = (brute_hookp, closed_hookp) if args.form == "1" else (brute_hookp2, closed_hookp2)
    out: dict = {"r": _type_json(r)}
    brute = closed = None
    if args.mode in ("brute", "both"):
        brute = brute_fn(r)
        out["brute"] = brute.to_json()
    if args.mode in ("closed", "both"):
        closed = closed_fn(r)
        out["closed"] = closed.to_json()
    if args.mode == "both":
        out["equal"] = brute == closed
    out["count"] = str(count_forests(r))
    return out


def cmd_colored_count(args) -> dict:
    r = args.type
    part = _partition(args.partition) if args.partition else None
    count = count_colored(r, args.k, part, args.first_tree_min)
    formula = thm_cfs_count(r, args.k) if part is not None else prop_cf_count(r, args.k)
    if args.first_tree_min:
        # with no internal vertex there is no label 1 to place
        formula = formula // r.ell if r.n else 0
    out = {"r": _type_json(r), "k": str(args.k), "count": str(count), "formula": str(formula),
           "equal": count == formula}
    if part is not None:
        out["partition"] = part.to_json()
    return out


def _colored_input(args) -> ColoredLabelledForest:
    obj = _load_json(args.input)
    k = args.k
    if isinstance(obj, dict):
        k = obj.get("k", k)
        obj = obj.get("trees")
    if k is None:
        raise UsageError("the number of special colors is needed (-k)")
    return ColoredLabelledForest.from_json(obj, int(k))


def cmd_psi(args) -> dict:
    forest = _colored_input(args)
    s1, s2 = _partition(args.from_), _partition(args.to)
    out, case = psi(forest, s1, s2)
    return {"case": case.value, "k": forest.k, "trees": out.to_json()}


def cmd_encode(args) -> dict:
    forest = _colored_input(args)
    s = _partition(args.partition)
    return encode(forest, s).to_json()


def cmd_decode(args) -> dict:
    obj = _load_json(args.input)
    codes = CodeSequence.from_json(obj)
    s = _partition(args.partition)
    forest = decode(s, codes.k, args.trees, codes)
    return {"k": forest.k, "trees": forest.to_json()}


def cmd_verify(args) -> dict:
    checks = tuple(c for c in args.checks.split(",") if c) if args.checks else ALL_CHECKS
    try:
        k_values = tuple(int(k) for k in args.k_values.split(",") if k != "")
    except ValueError:
        raise UsageError(f"bad --k-values {args.k_values!r}") from None
    cfg = VerifySweepConfig(
        max_total_vertices=args.max_total_vertices,
        max_degree=args.max_degree,
        k_values=k_values,
        checks=checks,
        max_n=args.max_n,
        max_code_n=args.max_code_n,
    )
    return run_sweep(cfg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hookforest", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def typed(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--type", required=True, type=degree_type, help="degree type r0,r1,r2,...")
        return sp

    typed("enumerate", "list every plane forest of a type").set_defaults(func=cmd_enumerate)
    typed("count", "number of plane forests of a type").set_defaults(func=cmd_count)

    sp = typed("hookpoly", "hook length polynomial of a type")
    sp.add_argument("--form", choices=("1", "2"), default="1")
    sp.add_argument("--mode", choices=("brute", "closed", "both"), default="both")
    sp.set_defaults(func=cmd_hookpoly)

    sp = typed("colored-count", "count proper k-colored labelled forests")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--partition", help="degree classes as JSON text or file, e.g. {\"1\":[1],\"2\":[2]}")
    sp.add_argument("--first-tree-min", action="store_true", help="keep forests with label 1 in the first tree")
    sp.set_defaults(func=cmd_colored_count)

    sp = sub.add_parser("psi", help="move a colored forest to an adjacent partition")
    sp.add_argument("--input", required=True)
    sp.add_argument("--from", dest="from_", required=True)
    sp.add_argument("--to", required=True)
    sp.add_argument("-k", type=int)
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("encode", help="code sequence of a colored forest")
    sp.add_argument("--input", required=True)
    sp.add_argument("--partition", required=True)
    sp.add_argument("-k", type=int)
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="colored forest named by a code sequence")
    sp.add_argument("--input", required=True)
    sp.add_argument("--partition", required=True)
    sp.add_argument("--trees", type=int, required=True, help="number of trees")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("verify", help="run identity sweeps; exit 1 on any failure")
    sp.add_argument("--max-total-vertices", type=int, default=7)
    sp.add_argument("--max-degree", type=int, default=4)
    sp.add_argument("--k-values", default="0,1,2")
    sp.add_argument("--checks", help="comma separated subset of " + ",".join(ALL_CHECKS))
    sp.add_argument("--max-n", type=int, default=5, help="largest n for postnikov and lascoux")
    sp.add_argument("--max-code-n", type=int, default=4, help="largest n for the code bijection")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (UsageError, InvalidTypeError, ForestParseError, CodeError, ValueError, KeyError) as exc:
        print(f"hookforest {args.command}: {exc}", file=sys.stderr)
        return 2
    print(dump(out))
    if args.command == "verify" and not out["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
