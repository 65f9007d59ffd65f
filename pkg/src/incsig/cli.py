"""Command-line front end.

Exit codes: 0 success/accept, 1 cryptographic reject, 2 I/O error,
64 usage error (bad flags, malformed script, out-of-range index).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import analysis, bench, legacy, scheme
from .backends import Ed25519Backend
from .chainhash import RandomChain, hash_full
from .document import (
    BlockDocument,
    SchemeParams,
    pad,
    parse_edit_script,
    unpad,
)
from .errors import (
    EmptyResult,
    IncsigError,
    IndexOutOfRange,
    InvalidParams,
    MalformedScript,
    MalformedSignature,
)
from .randomizer import RandomizeFn

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_IO = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract wants 64.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_param_flags(parser):
    parser.add_argument("--b", type=int, default=256, help="block size in bits")
    parser.add_argument("--k", type=int, default=128, help="random sub-block size in bits")
    parser.add_argument("--d", type=int, default=2, help="chaining arity")


def _params_from(args) -> SchemeParams:
    try:
        return SchemeParams(b=args.b, k=args.k, d=args.d)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)


def _write(path: str, data: bytes) -> None:
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)


def cmd_keygen(args) -> int:
    backend = Ed25519Backend()
    sk, pk = backend.keygen()
    _write(args.key, sk)
    _write(args.pub, pk)
    print(f"wrote {args.key} and {args.pub}")
    return EXIT_OK


def cmd_sign(args) -> int:
    params = _params_from(args)
    raw = _read(args.infile)
    sk = _read(args.key)
    doc = pad(raw, params)
    rf = RandomizeFn.for_params(params)
    sig = scheme.sign(sk, doc, Ed25519Backend(), rf)
    _write(args.sig, scheme.encode_signature(sig))
    print(f"signed {doc.num_blocks} blocks -> {args.sig}")
    return EXIT_OK


def _load_signature(path: str):
    data = _read(path)
    try:
        return scheme.decode_signature(data)
    except MalformedSignature as exc:
        print(f"REJECT (malformed signature: {exc})")
        raise SystemExit(EXIT_REJECT)


def cmd_verify(args) -> int:
    raw = _read(args.infile)
    pk = _read(args.pub)
    sig = _load_signature(args.sig)
    doc = pad(raw, sig.params)
    rf = RandomizeFn.for_params(sig.params)
    if scheme.verify(pk, doc, sig, Ed25519Backend(), rf):
        print("ACCEPT")
        return EXIT_OK
    print("REJECT")
    return EXIT_REJECT


def cmd_update(args) -> int:
    raw = _read(args.infile)
    sk = _read(args.key)
    script_text = _read(args.script).decode()
    sig = _load_signature(args.sig)
    backend = Ed25519Backend()
    rf = RandomizeFn.for_params(sig.params)
    doc = pad(raw, sig.params)
    if not scheme.verify(backend.derive_public(sk), doc, sig, backend, rf):
        print("REJECT (signature does not match input file)")
        return EXIT_REJECT
    try:
        ops = parse_edit_script(script_text, sig.params)
        for op in ops:
            doc, sig = scheme.update(sk, doc, sig, op, backend, rf)
    except (MalformedScript, IndexOutOfRange, EmptyResult) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(args.out, unpad(doc))
    _write(args.out_sig, scheme.encode_signature(sig))
    print(f"applied {len(ops)} ops -> {args.out}, {args.out_sig}")
    return EXIT_OK


def cmd_demo_collisions(args) -> int:
    rf160 = legacy.default_rf160()
    params = SchemeParams(b=16, k=8, d=2)
    rf = RandomizeFn.for_params(params)
    import random as _random

    rng = _random.Random(2024)
    for pair in legacy.collision_corpus():
        print(f"== {pair.label} ({pair.combiner} combiner) ==")
        fmt = lambda blocks: "|".join(blk.hex() for blk in blocks)
        print(f"  left : {fmt(pair.left)}")
        print(f"  right: {fmt(pair.right)}")
        if pair.combiner == "modular":
            dl = legacy.pcihf_hash(pair.left, rf160)
            dr = legacy.pcihf_hash(pair.right, rf160)
        else:
            dl = legacy.pcihf_xor_hash(pair.left, rf160)
            dr = legacy.pcihf_xor_hash(pair.right, rf160)
        status = "COLLISION" if dl == dr else "distinct"
        print(f"  legacy digests: {dl:040x} / {dr:040x} -> {status}")

        mus = []
        for blocks in (pair.left, pair.right):
            doc = BlockDocument(blocks, len(blocks) * params.b, params)
            subs = tuple(rng.sample(range(1 << params.k), len(blocks) + params.d - 1))
            mus.append(hash_full(RandomChain(subs, params), doc, rf))
        status = "distinct" if mus[0] != mus[1] else "COLLISION"
        print(
            f"  chained-hash digests: {mus[0].to_bytes()[:8].hex()}... / "
            f"{mus[1].to_bytes()[:8].hex()}... -> {status}"
        )
    return EXIT_OK


def cmd_advise(args) -> int:
    budget = analysis.AttackBudget(
        q_s=args.qs,
        q_i=args.qi,
        n_max=args.nmax,
        eps_hash=Fraction(args.eps_hash),
        eps_sig=Fraction(args.eps_sig),
    )
    b, d = args.b, args.d
    pair = analysis.bound_pair_chained(budget, b)
    star = analysis.bound_d_chained(budget, b, d)
    print(f"attack budget: q_s={budget.q_s} q_i={budget.q_i} n_max={budget.n_max}")
    print(f"assumed advantages: hash={budget.eps_hash} signature={budget.eps_sig}")
    print(f"pair-chained bound (b={b}):        {_fmt_bound(pair)}")
    print(f"d-wise chained bound (b={b}, d={d}): {_fmt_bound(star)}")
    print(f"hash queries (pair-chained): {analysis.hash_queries_pair_chained(budget)}")
    print(f"hash queries (d-wise):       {analysis.hash_queries_d_chained(budget, d)}")
    return EXIT_OK


def _fmt_bound(x: Fraction) -> str:
    if x == 0:
        return "0"
    approx = f"~2^{(x.numerator.bit_length() - x.denominator.bit_length()):+d}"
    return f"{x.numerator}/{x.denominator} ({approx})"


def cmd_bench(args) -> int:
    params = _params_from(args)
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench.speedup_report(params, sizes, op_kind=args.op)
    print(bench.format_report(rows))
    print()
    print(bench.format_csv(rows))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="incsig", description="Incremental document signatures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--key", required=True, help="secret key output path")
    p.add_argument("--pub", required=True, help="public key output path")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sign", help="sign a file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--sig", required=True, help="signature output path")
    _add_param_flags(p)
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", help="verify a file against a signature")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--sig", required=True)
    p.add_argument("--pub", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("update", help="apply an edit script with incremental re-signing")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--sig", required=True)
    p.add_argument("--script", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--out", required=True, help="edited file output path")
    p.add_argument("--out-sig", dest="out_sig", required=True, help="updated signature path")
    p.set_defaults(func=cmd_update)

    p = sub.add_parser("demo-collisions", help="show the legacy collision patterns")
    p.set_defaults(func=cmd_demo_collisions)

    p = sub.add_parser("advise", help="evaluate the security bounds")
    p.add_argument("--qs", type=int, required=True)
    p.add_argument("--qi", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--b", type=int, default=256)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--eps-hash", default="0")
    p.add_argument("--eps-sig", default="0")
    p.set_defaults(func=cmd_advise)

    p = sub.add_parser("bench", help="counters and wall-time speedup table")
    p.add_argument("--sizes", default="100,1000,10000", help="comma-separated block counts")
    p.add_argument("--op", default="replace", choices=["insert", "replace", "delete"])
    _add_param_flags(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        # I/O and reject paths signal their exit code via SystemExit.
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except IncsigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
