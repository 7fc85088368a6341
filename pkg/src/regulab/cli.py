"""Command-line interface: enumerate, verify, sylow, centralizer, weak-keys,
ddt, dixon.

Exit codes: 0 success / all verifications passed, 1 verification failure,
2 usage error, 3 desk-scale guard tripped.  All JSON documents carry
{"schema_version": 1} and are byte-identical across repeated runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import checks
from .altdiff import SBox, ddt as compute_ddt
from .centralizer import centralizer_descriptor, centralizer_group
from .gf2core import BitMatrix, BitVector, Flag, Subspace, all_flags
from .permgroup import BUDGET_ENV_VAR, ScaleError
from .regular import (
    RegularGroup,
    build_with_support,
    canonical_w,
    dixon_conjugator,
    enumerate_second_maximal,
    translation_group,
    weak_keys,
)
from .sylow import canonical_sylow, count_sylows, sylow_from_flag, t_sigma

SCHEMA_VERSION = 1

N_STRUCTURAL = range(3, 9)  # structural commands
N_BRUTE = (3,)  # commands that scan the full symmetric group


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        _emit_text(doc)


def _emit_text(doc: dict, prefix: str = "") -> None:
    for key, value in doc.items():
        if key == "schema_version":
            continue
        if isinstance(value, dict):
            print(f"{prefix}{key}:")
            _emit_text(value, prefix + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                print(f"{prefix}{key}[{i}]:")
                _emit_text(item, prefix + "  ")
        else:
            print(f"{prefix}{key}: {value}")


def _doc(command: str, n: int | None = None, **body) -> dict:
    doc: dict = {"schema_version": SCHEMA_VERSION, "command": command}
    if n is not None:
        doc["n"] = n
    doc.update(body)
    return doc


def _load_group(path: str) -> RegularGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return RegularGroup.from_json(json.load(fh))


def _group_from_args(args: argparse.Namespace) -> RegularGroup:
    if getattr(args, "group", None):
        return _load_group(args.group)
    if getattr(args, "b", None) is None:
        raise SystemExit2("either --group or --b is required")
    b = BitVector.from_string(args.b)
    n = b.n
    support = (Subspace.from_string(args.support, n) if getattr(args, "support", None)
               else canonical_w(n))
    return build_with_support(n, support, b)


class SystemExit2(Exception):
    """Usage error detected past argparse; mapped to exit code 2."""


def cmd_enumerate(args: argparse.Namespace) -> int:
    groups = enumerate_second_maximal(args.n)
    if args.format == "csv":
        print("index,W,b")
        for i, g in enumerate(groups):
            print(f"{i},{g.support.to_string()},{g.b}")
        return 0
    if args.format == "text":
        for i, g in enumerate(groups):
            print(f"[{i}] W={g.support.to_string()} b={g.b}")
        print(f"total: {len(groups)}")
        return 0
    doc = _doc("enumerate", args.n, count=len(groups),
               groups=[g.to_json() for g in groups])
    print(json.dumps(doc, indent=2))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if not args.all and not args.theorem:
        raise SystemExit2("choose --all or --theorem ID")
    if args.all:
        ids = [tid for tid, (supported, _) in sorted(checks.CHECKS.items())
               if args.n in supported]
    else:
        ids = [args.theorem]
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(lambda tid: checks.run_check(tid, args.n), ids))
    else:
        reports = [checks.run_check(tid, args.n) for tid in ids]
    doc = _doc("verify", args.n,
               reports=[r.to_json() for r in reports],
               all_verified=all(r.ok for r in reports))
    if args.format == "text":
        for r in reports:
            print(f"{r.status:8s} {r.theorem_id} (n={r.n}, {r.runtime_s}s)")
        print("all verified" if doc["all_verified"] else "FAILURES PRESENT")
    else:
        print(json.dumps(doc, indent=2))
    return 0 if doc["all_verified"] else 1


def cmd_sylow(args: argparse.Namespace) -> int:
    n = args.n
    if args.count:
        _emit(_doc("sylow", n, count=count_sylows(n)), args.format)
        return 0
    if args.list_flags:
        flags = [f.to_string() for f in all_flags(n)]
        _emit(_doc("sylow", n, count=len(flags), flags=flags), args.format)
        return 0
    if args.t_sigma:
        s = sylow_from_flag(Flag.from_string(args.flag, n)) if args.flag else canonical_sylow(n)
        group = t_sigma(s)
        doc = _doc("sylow", n, flag=s.flag.to_string(), order=s.order,
                   t_sigma=group.to_json())
        _emit(doc, args.format)
        return 0
    raise SystemExit2("choose one of --count, --list-flags, --t-sigma")


def cmd_centralizer(args: argparse.Namespace) -> int:
    sub = Subspace.from_string(args.subspace, args.n)
    desc = centralizer_descriptor(sub, args.n)
    group = centralizer_group(sub, args.n, args.budget)
    from .affine import perm_to_affinity

    is_affine = all(perm_to_affinity(p) is not None for p in group)
    doc = _doc("centralizer", args.n, subspace=sub.to_string(),
               order=group.order, predicted_order=desc.predicted_order,
               generators=[list(p.images) for p in group.generators],
               is_affine_subgroup=is_affine)
    _emit(doc, args.format)
    return 0


def cmd_weak_keys(args: argparse.Namespace) -> int:
    group = _group_from_args(args)
    wk = weak_keys(group)
    doc = _doc("weak-keys", group.n,
               W=group.support.to_string(),
               b=str(group.b) if group.b is not None else None,
               weak_keys=wk.space.to_string(),
               dim=wk.dim,
               matches_intersection=wk.space == group.support)
    _emit(doc, args.format)
    return 0


def cmd_ddt(args: argparse.Namespace) -> int:
    with open(args.sbox, "r", encoding="utf-8") as fh:
        values = [int(line) for line in fh.read().split()]
    sbox = SBox.from_list(values)
    if args.op == "circ":
        if not args.group and args.b is None:
            raise SystemExit2("--op circ needs --group or --b")
        group = _group_from_args(args)
        if group.n != sbox.n:
            raise SystemExit2("S-box and group dimensions differ")
        table = compute_ddt(sbox, group.circ_op())
    else:
        table = compute_ddt(sbox)
    for row in table:
        print(",".join(str(c) for c in row))
    return 0


def cmd_dixon(args: argparse.Namespace) -> int:
    k = _group_from_args(args)
    n = k.n
    h = translation_group(n)
    zeta = BitMatrix.from_string(args.zeta) if args.zeta else BitMatrix.identity(n)
    g = dixon_conjugator(h, k, zeta)
    verified = all(h.tau(v).conj(g).images in k.elements for v in range(1 << n))
    doc = _doc("dixon", n, images=list(g.images), cycles=g.cycle_string(),
               conjugates_T_onto_group=verified)
    _emit(doc, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regulab",
        description="Regular elementary abelian subgroups of Sym(F_2^n), their "
                    "alternative operations and weak keys, and the Sylow "
                    "2-subgroup structure of AGL(n, 2).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1,
                        help="cap on internal fan-out (default 1)")
    common.add_argument("--budget", type=int, default=None,
                        help=f"closure element budget (default {BUDGET_ENV_VAR} or 10000)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, brute: bool = False) -> None:
        ns = N_BRUTE if brute else N_STRUCTURAL
        p.add_argument("--n", type=int, required=True, choices=list(ns),
                       help="dimension of the vector space")
        p.add_argument("--format", choices=["json", "csv", "text"], default="json")

    p = sub.add_parser("enumerate", parents=[common], help="all second-maximal-intersection regular subgroups")
    p.add_argument("--n", type=int, required=True, choices=[3, 4, 5])
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run named theorem checks")
    p.add_argument("--n", type=int, required=True, choices=[3, 4, 5, 6])
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--all", action="store_true", help="every check supporting this n")
    p.add_argument("--theorem", help="a single theorem id")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sylow", parents=[common], help="Sylow 2-subgroups of AGL(V) via maximal flags")
    add_common(p)
    p.add_argument("--count", action="store_true", help="number of Sylow 2-subgroups")
    p.add_argument("--list-flags", action="store_true", help="all maximal flags")
    p.add_argument("--t-sigma", action="store_true",
                   help="the unique normal second-maximal subgroup")
    p.add_argument("--flag", help="flag string, e.g. '001<010,001' (default: canonical)")
    p.set_defaults(fn=cmd_sylow)

    p = sub.add_parser("centralizer", parents=[common], help="wreath centralizer of a subgroup of T")
    add_common(p)
    p.add_argument("--subspace", required=True, help="support of the subgroup, e.g. '001'")
    p.set_defaults(fn=cmd_centralizer)

    p = sub.add_parser("weak-keys", parents=[common], help="weak-key subspace of an alternative operation")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--b", help="defect vector, e.g. '0011' (dimension is its length)")
    p.add_argument("--support", help="intersection support (default <e_3..e_n>)")
    p.add_argument("--group", help="path to a group JSON record")
    p.set_defaults(fn=cmd_weak_keys)

    p = sub.add_parser("ddt", parents=[common], help="difference distribution table of an S-box")
    p.add_argument("--sbox", required=True, help="file of newline-separated integers")
    p.add_argument("--op", choices=["xor", "circ"], default="xor")
    p.add_argument("--group", help="path to a group JSON record (for --op circ)")
    p.add_argument("--b", help="defect vector shorthand instead of --group")
    p.add_argument("--support", help="intersection support shorthand")
    p.set_defaults(fn=cmd_ddt)

    p = sub.add_parser("dixon", parents=[common], help="conjugating permutation from T onto a regular subgroup")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--b", help="defect vector of the target group")
    p.add_argument("--support", help="intersection support of the target group")
    p.add_argument("--group", help="path to a group JSON record")
    p.add_argument("--zeta", help="label map rows joined by '/', default identity")
    p.set_defaults(fn=cmd_dixon)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is not None:
        os.environ[BUDGET_ENV_VAR] = str(args.budget)
    try:
        return args.fn(args)
    except ScaleError as exc:
        print(f"desk-scale exceeded: {exc}", file=sys.stderr)
        return 3
    except SystemExit2 as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
