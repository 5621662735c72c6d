"""Command line entry point: build algebras, compute dimensions, run the checks."""

from __future__ import annotations

import argparse
import json
import sys

from . import verifier
from .spfactory import (Signature, Variant, build_embedding, build_so_decomposition,
                        build_sp, build_su)
from .weights import DominantWeight, enumerate_small_reps, weyl_dim


def _write(payload: dict, path):
    text = json.dumps(payload, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_signatures(text: str) -> list:
    return [Signature.parse(chunk) for chunk in text.split(";") if chunk.strip()]


def cmd_build_algebra(args) -> int:
    sig = Signature.parse(args.signature)
    if args.type == "sp":
        L, parts = build_sp(sig), None
    elif args.type == "su":
        S = build_su(sig)
        L, parts = S.algebra, S.parts
    else:
        D = build_so_decomposition(sig)
        L, parts = D.algebra, D.parts
    payload = L.to_json()
    if parts is not None:
        payload["parts"] = {lab: S.to_json() for lab, S in parts.parts.items()}
    _write(payload, args.out)
    if args.out:
        print(f"{L.name}: dim {L.dim} -> {args.out}")
    return 0


def cmd_embed(args) -> int:
    E = build_embedding(Signature.parse(args.signature), Variant(args.variant))
    payload = {
        "signature": str(E.sig),
        "variant": E.variant.value,
        "h_signature": str(E.h_signature),
        "algebra": E.target.to_json(),
        "parts": {"g": E.g_index, "k": E.k_index, "V": E.V_index},
    }
    _write(payload, args.out)
    if args.out:
        print(f"{E.target.name} = g + k + V with dims {E.parts.dims()} -> {args.out}")
    return 0


def cmd_dim(args) -> int:
    lam = DominantWeight.parse(args.weight, n=args.n)
    print(weyl_dim(lam))
    return 0


def cmd_enumerate(args) -> int:
    bound = args.bound if args.bound == "auto" else int(args.bound)
    for lam in enumerate_small_reps(args.n, bound):
        print(f"{str(lam):<10} {','.join(map(str, lam.coeffs)):<16} {weyl_dim(lam)}")
    return 0


def cmd_verify(args) -> int:
    sigs = _parse_signatures(args.signatures) if args.signatures else \
        [Signature(*s) for s in verifier.DEFAULT_SIGNATURES]
    if args.extended:
        sigs += [Signature(*s) for s in verifier.EXTENDED_SIGNATURES if Signature(*s) not in sigs]
    checks = "all" if args.checks == "all" else [c.strip() for c in args.checks.split(",") if c.strip()]
    variants = [v.strip() for v in args.variants.split(",")]
    ranks = [int(t) for t in args.ranks.split(",")]
    cfg = verifier.RunConfig(signatures=sigs, variants=variants, rank_range=ranks, checks=checks,
                             seed=args.seed, output_path=args.report, timings=args.timings)

    def progress(res):
        if not args.quiet:
            print(f"[{res.status.value:>7}] {res.check_id}", file=sys.stderr)

    results = verifier.run_checks(cfg, progress=progress)
    text = verifier.report_json(cfg, results)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    summary = verifier.build_report(cfg, results)["summary"]
    print(f"pass={summary['pass']} fail={summary['fail']} skipped={summary['skipped']}", file=sys.stderr)
    return 0 if verifier.all_passed(results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quatlie", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build-algebra", help="emit sp(k,l), su(2k,2l) or so(4k,4l) as JSON")
    b.add_argument("--type", choices=["sp", "su", "so"], required=True)
    b.add_argument("--signature", required=True, metavar="k,l")
    b.add_argument("--out")
    b.set_defaults(func=cmd_build_algebra)

    e = sub.add_parser("embed", help="emit h = g + k + V for one inclusion")
    e.add_argument("--signature", required=True, metavar="k,l")
    e.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    e.add_argument("--out")
    e.set_defaults(func=cmd_embed)

    d = sub.add_parser("dim", help="dimension of an irreducible sp(2n,C)-module")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--weight", required=True, metavar="m1,...,mn")
    d.set_defaults(func=cmd_dim)

    n = sub.add_parser("enumerate", help="dominant weights with dimension at most a bound")
    n.add_argument("--n", type=int, required=True)
    n.add_argument("--bound", default="auto", help="'auto' for n(2n+1), or an integer")
    n.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run registered checks and write a JSON report")
    v.add_argument("--checks", default="all", help="comma-separated check ids, or 'all'")
    v.add_argument("--signatures", help='semicolon-separated, e.g. "1,1;2,1"')
    v.add_argument("--extended", action="store_true", help="also run signature (2,2)")
    v.add_argument("--variants", default="add_to_l,add_to_k")
    v.add_argument("--ranks", default=",".join(map(str, verifier.DEFAULT_RANKS)))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report", metavar="out.json")
    v.add_argument("--timings", action="store_true", help="include elapsed_ms (report no longer reproducible)")
    v.add_argument("--list", action="store_true", help="list check ids and exit")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "list", False):
        for cid, desc in verifier.registry():
            print(f"{cid:<20} {desc}")
        return 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
