"""Command line front door: classify, verify, explore.

Exit codes: 0 all requested work succeeded with no failing verdict, 1 at
least one checker returned fail, 2 usage, schema, or cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import core, exprs, extend, harness, ideals
from .errors import CapExceeded, RingLabError

CLASSIFY_CAP = 256


def _load_instance(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise RingLabError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise RingLabError(f"{path} is not valid JSON: {e}") from None
    name = path.rsplit("/", 1)[-1]
    name = name[:-5] if name.endswith(".json") else name
    return harness.Instance.from_dict(doc, name=name)


# ------------------------------------------------------------------- classify

def cmd_classify(args):
    inst = _load_instance(args.file)
    if inst.kind != "finite":
        raise RingLabError("classify needs a finite construction")
    ctx = inst.context()
    if ctx.T.order > CLASSIFY_CAP:
        raise CapExceeded(
            f"classification cap is order {CLASSIFY_CAP}, "
            f"got {ctx.T.order}")
    ambient = ctx.ambient_report
    doc = {"schema": harness.SCHEMA, "instance": inst.name,
           "ambient": ambient.to_dict(), "fixed": None}
    if ctx.G.order > 1:
        fixed = ctx.fixed_report
        doc["fixed"] = fixed.to_dict()
        print(f"{ambient.kind} → fixed: {fixed.kind}")
    else:
        print(ambient.kind)
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 0


# --------------------------------------------------------------------- verify

def cmd_verify(args):
    if args.all:
        instances = harness.catalog()
    elif args.files:
        instances = [_load_instance(p) for p in args.files]
    else:
        raise RingLabError("verify needs instance files or --all")
    verdicts = []
    for inst in instances:
        verdicts.extend(harness.verify_all(inst, seed=args.seed))
    print(harness.summary_table(verdicts))
    counts = {s: 0 for s in harness.STATUSES}
    for v in verdicts:
        counts[v.status] += 1
    print(f"{len(verdicts)} verdicts: "
          + ", ".join(f"{n} {s}" for s, n in counts.items()))
    if args.report:
        payload = harness.report_json(verdicts, seed=args.seed)
        with open(args.report, "w") as fh:
            fh.write(payload)
        print(f"report written to {args.report}")
    return 1 if counts["fail"] else 0


# -------------------------------------------------------------------- explore

def _explore_handle(T, args):
    if args.subring is not None and args.base is not None:
        raise RingLabError("give either --subring or --base, not both")
    if args.base is not None:
        B = exprs.build_ring(args.base)
        q = B.order
        members = [i for i in range(T.order) if T.pow(i, q) == i]
        return core.SubringHandle(T, members)
    if args.subring is None:
        return core.subring_closure(T, [])
    spec = args.subring
    if spec == "full":
        return core.as_handle(T)
    if spec.startswith("gens="):
        gens = exprs.split_top(spec[len("gens="):], sep=";")
        return exprs.build_subring(T, {"gens": gens})
    return exprs.build_subring(T, spec)


def _members_line(T, members, cap=12):
    labels = [T.labels[int(i)] for i in members[:cap]]
    tail = ", ..." if len(members) > cap else ""
    return "{" + ", ".join(labels) + tail + "}"


def _principal_form(T, I):
    for e in I.members:
        if int(e) == T.zero and I.size > 1:
            continue
        if ideals.ideal_generated(T, [int(e)]).same(I):
            return f"({T.labels[int(e)]})"
    return _members_line(T, I.members)


def cmd_explore(args):
    T = exprs.build_ring(args.ring)
    print(f"ring {args.ring}: order {T.order}, characteristic {T.char()}")
    if args.spec:
        print("prime spectrum:")
        rows = [(_principal_form(T, P), ideals.is_maximal(P))
                for P in ideals.spec(T)]
        for form, is_max in sorted(rows):
            print(f"  {form}" + ("  maximal" if is_max else ""))
    needs_handle = args.list_intermediate or args.conductor or args.critical
    if not needs_handle:
        return 0
    R = _explore_handle(T, args)
    print(f"subring: order {R.members.size}, "
          f"members {_members_line(T, R.members)}")
    if args.list_intermediate:
        chain = extend.intermediate_rings(R, cap=args.max_order)
        print("intermediate rings:")
        for S in chain:
            suffix = "  (base)" if S.same_members(R) else (
                "  (full ring)" if S.is_full() else "")
            print(f"  order {S.order}: "
                  f"{_members_line(T, S.members)}{suffix}")
        print("orders: " + " < ".join(str(S.order) for S in chain))
    if args.conductor:
        C = ideals.conductor(R)
        print(f"conductor: {_members_line(T, C.members)}")
    if args.critical:
        if R.is_full():
            print("critical ideal: undefined, the subring is the whole ring")
        else:
            crit = extend.critical_ideal(R)
            if crit is None:
                print("critical ideal: none")
            else:
                print(f"critical ideal: {_members_line(T, crit.members)}")
    return 0


# ----------------------------------------------------------------------- main

def build_parser():
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="finite ring extensions under group action: classify, "
                    "verify, explore")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify",
                       help="classify an extension and its fixed extension")
    p.add_argument("file", help="instance JSON file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify", help="run checkers and report verdicts")
    p.add_argument("files", nargs="*", help="instance JSON files")
    p.add_argument("--all", action="store_true",
                   help="run the shipped catalog")
    p.add_argument("--seed", type=int, default=0,
                   help="probe seed (default 0)")
    p.add_argument("--report", metavar="PATH",
                   help="write the JSON report here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("explore", help="print spectrum and lattice data")
    p.add_argument("--ring", required=True, help="construction expression")
    p.add_argument("--subring",
                   help='"diag", "base", "full", or "gens=l1;l2;..."')
    p.add_argument("--base", metavar="EXPR",
                   help="subfield given by a construction of its order")
    p.add_argument("--max-order", type=int, default=extend.INTERMEDIATE_CAP,
                   help="intermediate enumeration cap")
    p.add_argument("--list-intermediate", action="store_true")
    p.add_argument("--spec", action="store_true")
    p.add_argument("--conductor", action="store_true")
    p.add_argument("--critical", action="store_true")
    p.set_defaults(fn=cmd_explore)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except RingLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
