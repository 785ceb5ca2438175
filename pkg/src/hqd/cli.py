"""Command line: build, verify, export-dot, oracle.

Exit codes: 0 success, 1 a check failed (or no decomposition exists),
2 bad input (flags, preconditions, unreadable certificate).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .certificates import PartitionedDecomposition
from .drivers import DecompositionRequest, decompose
from .errors import CertificateParseError, InvalidArgument, UnsupportedInstance
from .io import LABEL_MODES, dumps, read_certificate, to_dot, to_text
from .verify import VerificationReport, brute_force_decompose, verify_partitionable

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_WRITERS = {"json": dumps, "dot": to_dot, "text": to_text}


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _print_report(rep: VerificationReport, stream=None) -> None:
    stream = stream or sys.stdout
    if rep.ok:
        print("ok", file=stream)
        return
    print(f"FAILED: {len(rep.failures)} problem(s) in {', '.join(sorted(rep.categories))}", file=stream)
    for f in rep.failures:
        print(f"  [{f.check}] {f.item}", file=stream)


def cmd_build(args) -> int:
    try:
        req = DecompositionRequest(args.n, args.i)
    except InvalidArgument as exc:
        print(f"hqd build: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        d = decompose(req).canonical()
    except UnsupportedInstance as exc:
        print(f"hqd build: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rep = verify_partitionable(d)
    if not rep.ok:
        print("hqd build: self-check failed", file=sys.stderr)
        _print_report(rep, sys.stderr)
        return EXIT_FAIL
    _emit(_WRITERS[args.format](d, args.labels), args.out)
    return EXIT_OK


def check_certificate(d: PartitionedDecomposition, expect_n=None, expect_length=None) -> VerificationReport:
    rep = verify_partitionable(d)
    if expect_n is not None and d.host_n != expect_n:
        rep.add("expectation", f"n is {d.host_n}, expected {expect_n}")
    if expect_length is not None and d.cycle_length != expect_length:
        rep.add("expectation", f"cycle length is {d.cycle_length}, expected {expect_length}")
    return rep


def cmd_verify(args) -> int:
    try:
        d = read_certificate(args.path)
    except CertificateParseError as exc:
        print(f"hqd verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = check_certificate(d, args.expect_n, args.expect_length)
    print(f"{args.path}: n={d.host_n} cycle_length={d.cycle_length} cycles={len(d.cycles)} sets={d.num_sets}")
    _print_report(rep)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_export_dot(args) -> int:
    try:
        d = read_certificate(args.path_in)
    except CertificateParseError as exc:
        print(f"hqd export-dot: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(to_dot(d, args.labels), args.path_out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        d = brute_force_decompose(args.n, args.i)
    except (InvalidArgument, UnsupportedInstance) as exc:
        print(f"hqd oracle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if d is None:
        print(f"no partitionable decomposition of Q_{args.n} into {1 << args.i}-cycles")
        return EXIT_FAIL
    _emit(_WRITERS[args.format](d.canonical(), args.labels), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hqd", description="Decompose hypercubes into power-of-two cycles.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct and self-check a certificate")
    b.add_argument("--n", type=int, required=True, help="hypercube dimension (even)")
    b.add_argument("--i", type=int, required=True, help="cycle length exponent, 2 <= i <= n")
    b.add_argument("--out", help="output file (default stdout)")
    b.add_argument("--format", choices=sorted(_WRITERS), default="json")
    b.add_argument("--labels", choices=LABEL_MODES, default="int")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check a certificate file")
    v.add_argument("path")
    v.add_argument("--expect-n", type=int)
    v.add_argument("--expect-length", type=int)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("export-dot", help="render a certificate as Graphviz DOT")
    x.add_argument("path_in")
    x.add_argument("path_out")
    x.add_argument("--labels", choices=LABEL_MODES, default="int")
    x.set_defaults(func=cmd_export_dot)

    o = sub.add_parser("oracle", help="exhaustive search on tiny hypercubes")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--i", type=int, required=True)
    o.add_argument("--out")
    o.add_argument("--format", choices=sorted(_WRITERS), default="json")
    o.add_argument("--labels", choices=LABEL_MODES, default="int")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
