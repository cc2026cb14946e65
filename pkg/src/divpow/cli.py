"""Command-line front end.

Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error,
3 internal engine error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from . import identity as ident
from .cech import syzygy_to_cocycle
from .errors import DivpowError, EngineError
from .expr import render_operator, render_poly
from .jobspec import DETERMINANTAL_JOB, load_job

DEFAULT_MAX_K = 16

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ENGINE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _report(command: str, parameters: Dict, verified: bool, cleared_is_zero,
            term_counts, **extra) -> Dict:
    doc = {
        "command": command,
        "parameters": parameters,
        "verified": bool(verified),
        "cleared_is_zero": cleared_is_zero,
        "term_counts": term_counts,
    }
    doc.update(extra)
    return doc


def _check_k(k: int, max_k: int) -> None:
    if k < 0:
        raise UsageError(f"--k must be nonnegative, got {k}")
    if k > max_k:
        raise UsageError(f"--k {k} exceeds the bound {max_k} (raise it with --max-k)")


def cmd_verify(args) -> Dict:
    _check_k(args.k, args.max_k)
    rep = ident.verify_identity(args.k)
    return _report("verify", {"k": args.k}, rep.verified, rep.cleared.is_zero(),
                   list(rep.term_counts), cleared=render_poly(rep.cleared))


def cmd_derive(args) -> Dict:
    _check_k(args.k, args.max_k)
    rep = ident.derive_via_operator(args.k)
    return _report("derive", {"k": args.k}, rep.verified, rep.total_is_zero,
                   [len(s) for s in rep.derived], matches=list(rep.matches),
                   operator=render_operator(ident.operator_D(args.k)))


def cmd_modp(args) -> Dict:
    rep = ident.mod_p_specialize(args.p, args.e, max_pe=args.max_pe)
    return _report("modp", {"p": args.p, "e": args.e}, rep.mod_p["passed"], rep.cleared.is_zero(),
                   list(rep.term_counts), details=rep.mod_p)


def cmd_lucas(args) -> Dict:
    q = args.p ** args.e if args.e >= 1 else 0
    if q > args.max_pe:
        raise UsageError(f"p^e = {q} exceeds the bound {args.max_pe} (raise it with --max-pe)")
    ok = ident.lucas_vanishing_check(args.p, args.e)
    k = args.p ** args.e - 1
    return _report("lucas", {"p": args.p, "e": args.e}, ok, None,
                   [len(ident.index_pairs(k)) - 1], k=k)


def cmd_generate(args) -> Dict:
    try:
        with open(args.job, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read job file: {exc}") from None
    job = load_job(text, source=args.job)
    results = []
    for name, syz in job.syzygies:
        cochain, rep = ident.generate_identity(syz, job.operator)
        entry = {
            "name": name,
            "cocycle": rep.verified,
            "cleared": render_poly(rep.cleared),
            "term_counts": list(rep.term_counts),
        }
        if "p" in job.params and "e" in job.params:
            entry["frobenius"] = ident.frobenius_power_relation(
                syz, job.params["p"], job.params["e"], max_pe=args.max_pe)
        if args.show:
            entry["input"] = str(syzygy_to_cocycle(syz))
            entry["components"] = {
                "{" + ",".join(str(i + 1) for i in S) + "}": str(s) for S, s in cochain.items()}
        results.append(entry)
    verified = all(r["cocycle"] and r.get("frobenius", True) for r in results)
    return _report("generate", {"job": args.job, "operator": render_operator(job.operator),
                                **job.params},
                   verified, all(r["cocycle"] for r in results),
                   [sum(r["term_counts"]) for r in results], syzygies=results)


# selftest jobs are module-level so they pickle for the process pool

def _st_verify(k):
    return ident.verify_identity(k).verified and ident.random_point_check(k)


def _st_derive(k):
    return ident.derive_via_operator(k, strict=False).verified


def _st_modp(p, e):
    return ident.lucas_vanishing_check(p, e) and ident.mod_p_specialize(p, e).mod_p["passed"]


def _st_commuting():
    return ident.commuting_check()


def _st_generate():
    job = load_job(DETERMINANTAL_JOB)
    return all(ident.generate_identity(s, job.operator)[1].verified for _, s in job.syzygies)


SELFTEST: List = (
    [(f"verify k={k}", _st_verify, (k,)) for k in range(9)]
    + [(f"derive k={k}", _st_derive, (k,)) for k in range(6)]
    + [(f"modp p={p} e={e}", _st_modp, (p, e)) for p, e in [(2, 1), (2, 2), (3, 1), (5, 1), (7, 1)]]
    + [("commuting", _st_commuting, ()), ("generate determinantal job", _st_generate, ())]
)


def cmd_selftest(args) -> Dict:
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(fn, *a) for _, fn, a in SELFTEST]
            outcomes = [f.result() for f in futures]
    else:
        outcomes = [fn(*a) for _, fn, a in SELFTEST]
    checks = [{"name": name, "passed": bool(ok)} for (name, _, _), ok in zip(SELFTEST, outcomes)]
    return _report("selftest", {"jobs": args.jobs}, all(outcomes), None, [], checks=checks)


def _format_text(doc: Dict) -> str:
    lines = [f"{doc['command']} {' '.join(f'{k}={v}' for k, v in doc['parameters'].items())}"]
    status = "VERIFIED" if doc["verified"] else "FAILED"
    if doc["command"] == "verify":
        lines.append(f"term counts: {doc['term_counts']}")
        lines.append(f"cleared polynomial: {doc['cleared']}")
    elif doc["command"] == "derive":
        lines.append(f"operator: {doc['operator']}")
        lines.append(f"summands match closed form: {doc['matches']}")
        lines.append(f"sum of derived terms is zero: {doc['cleared_is_zero']}")
    elif doc["command"] == "modp":
        for key, val in doc["details"].items():
            lines.append(f"{key}: {val}")
    elif doc["command"] == "lucas":
        lines.append(f"k = {doc['k']}; coefficients checked: {doc['term_counts'][0]}")
    elif doc["command"] == "generate":
        for r in doc["syzygies"]:
            extra = f", frobenius={r['frobenius']}" if "frobenius" in r else ""
            lines.append(f"{r['name']}: cocycle={r['cocycle']}{extra}, terms={r['term_counts']}, "
                         f"cleared coboundary: {r['cleared']}")
            for key in ("input", "components"):
                if key in r:
                    lines.append(f"  {key}: {r[key]}")
    elif doc["command"] == "selftest":
        for c in doc["checks"]:
            lines.append(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}")
    lines.append(status)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divpow",
        description="Divided-power operators and the determinantal minors identity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.set_defaults(func=func)
        return p

    p = add("verify", cmd_verify, "clear denominators in the identity at k and test for zero")
    p.add_argument("--k", type=int, required=True, help="operator order")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K, help="refuse k above this")

    p = add("derive", cmd_derive, "rederive the identity by applying D to the base relation")
    p.add_argument("--k", type=int, required=True, help="operator order")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K, help="refuse k above this")

    for name, func, help in (("modp", cmd_modp, "mod-p reduction at k = p^e - 1"),
                             ("lucas", cmd_lucas, "binomial vanishing mod p at k = p^e - 1")):
        p = add(name, func, help)
        p.add_argument("--p", type=int, required=True, help="prime")
        p.add_argument("--e", type=int, required=True, help="exponent, k = p^e - 1")
        p.add_argument("--max-pe", type=int, default=ident.DEFAULT_MAX_PE,
                       help="refuse p^e above this")

    p = add("generate", cmd_generate, "generate identities from a YAML job file")
    p.add_argument("--job", required=True, help="path to a YAML job file")
    p.add_argument("--show", action="store_true", help="print the generated cochains")
    p.add_argument("--max-pe", type=int, default=ident.DEFAULT_MAX_PE, help="refuse p^e above this")

    p = add("selftest", cmd_selftest, "run the built-in verification sweep")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    start = time.perf_counter()
    try:
        doc = args.func(args)
    except EngineError as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except (UsageError, DivpowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if args.json:
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write(_format_text(doc) + "\n")
    return EXIT_OK if doc["verified"] else EXIT_FAIL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
