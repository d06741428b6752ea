"""Command-line verification campaigns.

Every subcommand runs an exact check across the other modules and prints a
machine-readable report; exit status 0 means every comparison matched,
1 means a mismatch or finding, 2 means a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bijections as bj
from .partitions import (ParameterError, CountFamily, count, all_partitions,
                         c_predicate, andrews_system_check, c2k, b2k, c3, b3)
from . import series as qs
from .monomials import (ideal_generators, standard_monomial_series,
                        hp_via_exact_sequence, prime_ideal, gordon_ideal)
from . import recursion as rec
from . import arcideal as arc

SCHEMA = "gordonlab-report/1"


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("GORDONLAB_WORKERS", "1")))
    except ValueError:
        return 1


def _report(command, status, tables=None, mismatches=None, extra=None):
    rep = {"schema": SCHEMA, "command": command, "status": status,
           "tables": tables or {}, "mismatches": mismatches or []}
    if extra:
        rep.update(extra)
    return rep


def _emit(rep, fmt, started):
    rep["wall_time"] = round(time.time() - started, 3)
    if fmt == "json":
        print(json.dumps(rep, indent=2, sort_keys=True))
    elif fmt == "csv":
        for label, rows in rep["tables"].items():
            for row in rows:
                print(",".join(str(x) for x in [label] + list(row)))
        print(f"status,{rep['status']}")
    else:
        print(f"[{rep['status']}] {rep['command']}")
        for label, rows in rep["tables"].items():
            print(f"  {label}:")
            for row in rows[:20]:
                print(f"    {row}")
            if len(rows) > 20:
                print(f"    ... ({len(rows)} rows)")
        for mm in rep["mismatches"][:20]:
            print(f"  MISMATCH: {mm}")
    return 0 if rep["status"] == "pass" else 1


def _status(mismatches, finding=False):
    if not mismatches:
        return "pass"
    return "finding" if finding else "fail"


# ---------------------------------------------------------------------------
# Subcommand implementations


def cmd_count(args):
    fam = args.family
    if fam in ("A", "B", "C"):
        family = CountFamily(fam, r=args.r, i=args.i, form=args.form)
        value = count(family, args.n)
    elif fam == "c2k":
        value = c2k(args.k, args.i, args.m, args.n)
    elif fam == "b2k":
        value = b2k(args.k, args.i, args.m, args.n)
    elif fam == "c3":
        value = c3(args.i, args.m, args.n)
    elif fam == "b3":
        value = b3(args.i, args.m, args.n)
    else:
        raise ParameterError(f"unknown family {fam!r}")
    return _report("count", "pass", tables={"value": [[value]]})


def cmd_series(args):
    N = args.order
    kind = args.kind
    if kind == "product":
        s = qs.product_side(args.r, args.i, N)
    elif kind == "ag":
        s = qs.andrews_gordon_sum(args.r, args.i, N)
    elif kind == "conjecture":
        s = qs.conjecture_sum(args.r, N)
    elif kind == "chain3":
        s = qs.chain_sum_r3(N)
    elif kind == "double3":
        s = qs.double_sum_r3(N)
    elif kind == "hclosed":
        s = qs.h_closed_form(args.r, args.c, args.m, N)
    elif kind == "partitions":
        s = qs.full_product(N)
    else:
        raise ParameterError(f"unknown series kind {kind!r}")
    return _report("series", "pass",
                   tables={"coeffs": [[str(c) for c in s.coeffs]]})


def _gordon_one(task):
    r, i, max_n = task
    ps = qs.product_side(r, i, max_n)
    ag = qs.andrews_gordon_sum(r, i, max_n)
    famA, famB = CountFamily("A", r=r, i=i), CountFamily("B", r=r, i=i)
    bad = []
    for n in range(max_n + 1):
        a, b = count(famA, n), count(famB, n)
        if not (a == b == ps[n] == ag[n]):
            bad.append({"r": r, "i": i, "n": n, "A": a, "B": b,
                        "product": ps[n], "sum": ag[n]})
    return bad


def cmd_verify_gordon(args):
    tasks = [(args.r, i, args.max_n)
             for i in ([args.i] if args.i else range(1, args.r + 1))]
    nproc = min(_workers(), len(tasks))
    if nproc > 1:
        from multiprocessing import Pool
        with Pool(nproc) as pool:
            results = pool.map(_gordon_one, tasks)
    else:
        results = [_gordon_one(t) for t in tasks]
    mism = [m for chunk in results for m in chunk]
    checked = [["i", "n_range"]] + [[t[1], f"0..{t[2]}"] for t in tasks]
    return _report("verify-gordon", _status(mism),
                   tables={"checked": checked}, mismatches=mism)


def cmd_verify_rrk(args):
    mism = []
    for i in (1, 2):
        for m in range(args.max_m + 1):
            for n in range(args.max_n + 1):
                c, b = c2k(args.k, i, m, n), b2k(args.k, i, m, n)
                if c != b:
                    mism.append({"i": i, "m": m, "n": n, "c": c, "b": b})
    sys_rep = andrews_system_check("rr_k", args.max_m, args.max_n, k=args.k)
    if sys_rep["status"] != "pass":
        mism.append({"system": sys_rep})
    return _report("verify-rrk", _status(mism),
                   tables={"bounds": [["k", args.k], ["max_m", args.max_m],
                                      ["max_n", args.max_n]]},
                   mismatches=mism)


def cmd_verify_gordon3(args):
    mism = []
    for i in (1, 2, 3):
        famB = CountFamily("B", r=3, i=i)
        famC = CountFamily("C", r=3, i=i)
        for n in range(args.max_n + 1):
            cb, cc = count(famB, n), count(famC, n)
            if cb != cc:
                mism.append({"i": i, "n": n, "B": cb, "C": cc})
    sys_rep = andrews_system_check("gordon3", args.max_m, args.max_n)
    if sys_rep["status"] != "pass":
        mism.append({"system": sys_rep})
    rt = _roundtrip_bijections(args.round_trip_n)
    if rt:
        mism.extend(rt)
    return _report("verify-gordon3", _status(mism),
                   tables={"bounds": [["max_n", args.max_n],
                                      ["max_m", args.max_m],
                                      ["round_trip_n", args.round_trip_n]]},
                   mismatches=mism)


def _roundtrip_bijections(max_n):
    """Exhaustive domain/codomain round trips for all named maps."""
    bad = []
    ks = (1, 2, 3)
    for n in range(max_n + 1):
        for p in all_partitions(n):
            for k in ks:
                if bj.rr_second_eq_domain(p, k):
                    q = bj.rr_second_eq_forward(p, k)
                    if bj.rr_second_eq_inverse(q, k) != p:
                        bad.append({"map": "rr_second_eq", "k": k, "parts": p})
                if bj.rr_shift_domain(p, k):
                    q = bj.rr_shift_forward(p, k)
                    if bj.rr_shift_inverse(q, k) != p:
                        bad.append({"map": "rr_shift", "k": k, "parts": p})
            for name in ("g3_second_eq", "g3_third_eq", "g3_fourth_eq"):
                dom = getattr(bj, name + "_domain")
                if dom(p):
                    fwd = getattr(bj, name + "_forward")
                    inv = getattr(bj, name + "_inverse")
                    if inv(fwd(p)) != p:
                        bad.append({"map": name, "parts": p})
    return bad


def cmd_verify_bijections(args):
    mism = _roundtrip_bijections(args.max_n)
    return _report("verify-bijections", _status(mism),
                   tables={"bounds": [["max_n", args.max_n]]},
                   mismatches=mism)


def cmd_verify_conjecture(args):
    mism = []
    for i in range(1, args.r + 1):
        famB = CountFamily("B", r=args.r, i=i)
        famC = CountFamily("C", r=args.r, i=i)
        for n in range(args.max_n + 1):
            cb, cc = count(famB, n), count(famC, n)
            if cb != cc:
                mism.append({"i": i, "n": n, "B": cb, "C": cc})
    return _report("verify-conjecture", _status(mism, finding=True),
                   tables={"bounds": [["r", args.r], ["max_n", args.max_n]]},
                   mismatches=mism)


def cmd_verify_recursion(args):
    rep = rec.convergence_check(args.r, args.i, args.d_max, args.order)
    mism = rep["mismatches"]
    return _report("verify-recursion", _status(mism),
                   tables={"params": [["r", args.r], ["i", args.i],
                                      ["d_max", args.d_max],
                                      ["order", args.order]]},
                   mismatches=mism)


def cmd_verify_lz(args):
    rep = rec.empirical_hypothesis_check(args.r, args.d_max, args.order)
    mism = list(rep["failures"])
    # table equality across the two recursions
    for i in range(1, args.r + 1):
        hp_tab = rec.hp_coefficient_table(args.r, i, args.d_max, args.order)
        lz_tab = rec.lz_coefficient_table(args.r, args.r + 1 - i,
                                          args.d_max, args.order)
        for j in range(1, args.r + 1):
            for d in range(2, args.d_max + 1):
                if hp_tab[(j, d)] != lz_tab[(j, d)]:
                    mism.append({"check": "table_equality", "i": i,
                                 "j": j, "d": d})
    return _report("verify-lz", _status(mism),
                   tables={"params": [["r", args.r], ["d_max", args.d_max],
                                      ["order", args.order]]},
                   mismatches=mism)


def cmd_hilbert(args):
    params = {k: v for k, v in
              (("r", args.r), ("i", args.i), ("l", args.l),
               ("k", args.k), ("c", args.c), ("m", args.m))
              if v is not None}
    ideal = ideal_generators(args.family, params, args.order)
    std = standard_monomial_series(ideal, args.order)
    mism = []
    if args.both_methods:
        alt = hp_via_exact_sequence(ideal, args.order)
        if alt != std:
            mism.append({"check": "two_methods",
                         "std": list(std.coeffs), "exact_seq": list(alt.coeffs)})
    return _report("hilbert", _status(mism),
                   tables={"coeffs": [[str(c) for c in std.coeffs]],
                           "generators": [list(g.parts)
                                          for g in ideal.generators]},
                   mismatches=mism)


def cmd_leading_ideal(args):
    gens = arc.leading_ideal_minimal_generators(args.r, args.max_weight,
                                                args.order_tag)
    rep = {"r": args.r, "order": args.order_tag,
           "max_weight": args.max_weight,
           "generators": [list(g.parts) for g in gens]}
    mism = []
    if args.candidate:
        if args.candidate == "prime":
            cand = prime_ideal(args.r, args.r, args.max_weight)
        elif args.candidate == "gap":
            cand = gordon_ideal(args.r, args.r, args.max_weight)
        else:
            raise ParameterError(f"unknown candidate {args.candidate!r}")
        diff = arc.compare_with_candidate(args.r, args.max_weight,
                                          args.order_tag, cand)
        rep["candidate_diff"] = {"missing": diff["candidate_only"],
                                 "extra": diff["computed_only"]}
        if diff["candidate_only"] or diff["computed_only"]:
            mism.append(rep["candidate_diff"])
    return _report("leading-ideal", _status(mism, finding=True),
                   tables={"generators": rep["generators"]},
                   mismatches=mism, extra={"detail": rep})


# ---------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gordonlab",
        description="Exact verification of partition identities and the "
                    "associated Hilbert series machinery.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"),
                        default="json")
    subparsers = top.add_subparsers(dest="cmd", required=True)

    class _Sub:
        def add_parser(self, name, **kw):
            return subparsers.add_parser(name, parents=[common], **kw)

    sub = _Sub()

    p = sub.add_parser("count", help="evaluate one counting family")
    p.add_argument("--family", required=True,
                   choices=("A", "B", "C", "c2k", "b2k", "c3", "b3"))
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", choices=("conjecture", "remark"),
                   default="conjecture")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("series", help="print one series' coefficients")
    p.add_argument("--kind", required=True,
                   choices=("product", "ag", "conjecture", "chain3",
                            "double3", "hclosed", "partitions"))
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--order", type=int, default=20)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("verify-gordon",
                       help="counts vs product vs multi-sum")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(fn=cmd_verify_gordon)

    p = sub.add_parser("verify-rrk", help="level-k shifted families")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max-m", type=int, default=10)
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(fn=cmd_verify_rrk)

    p = sub.add_parser("verify-gordon3",
                       help="r=3 counts, equation system, bijections")
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--max-m", type=int, default=10)
    p.add_argument("--round-trip-n", type=int, default=14)
    p.set_defaults(fn=cmd_verify_gordon3)

    p = sub.add_parser("verify-conjecture",
                       help="new-part counts vs gap counts, r >= 4")
    p.add_argument("--r", type=int, default=4)
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(fn=cmd_verify_conjecture)

    p = sub.add_parser("verify-recursion", help="coefficient-table pipeline")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--d-max", type=int, default=18)
    p.add_argument("--order", type=int, default=16)
    p.set_defaults(fn=cmd_verify_recursion)

    p = sub.add_parser("verify-lz", help="ladder divisibility + tables")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--order", type=int, default=16)
    p.set_defaults(fn=cmd_verify_lz)

    p = sub.add_parser("hilbert", help="Hilbert series of an ideal family")
    p.add_argument("--family", required=True,
                   choices=("gap", "prime", "tail", "block", "zero"))
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--both-methods", action="store_true")
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("leading-ideal", help="graded elimination campaign")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--max-weight", type=int, default=10)
    p.add_argument("--order-tag", choices=("wlex", "wrevlex"),
                   default="wrevlex")
    p.add_argument("--candidate", choices=("prime", "gap"), default=None)
    p.set_defaults(fn=cmd_leading_ideal)

    p = sub.add_parser("verify-bijections", help="round-trip all named maps")
    p.add_argument("--max-n", type=int, default=16)
    p.set_defaults(fn=cmd_verify_bijections)

    return top


def main(argv=None) -> int:
    started = time.time()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        rep = args.fn(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _emit(rep, args.format, started)


if __name__ == "__main__":
    sys.exit(main())
