"""Command-line front end.

    topfacering validate   --model builtin:bigon
    topfacering hilbert    --model builtin:triangle --max-degree 8
    topfacering multiply   --model M --lhs a.json --rhs b.json [--decompose]
    topfacering decompose  --model M --element a.json
    topfacering member     --model M --element a.json [--oracle]
    topfacering charclass  --model M --kind sw|pontrjagin
    topfacering eta        --model M --u 1,0
    topfacering compare-sr --model M --max-degree 20

Exit status: 0 on success or agreement, 1 on validation failure, a failed
computation or oracle disagreement, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import charclass, facering, oracle
from .corners import validate_complex
from .errors import FaceRingError, NotInFaceRing, ValidationError
from .models import load_element, resolve_model


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topfacering", description="Topological face ring computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--model", required=True, help="builtin:<name> or path to a model JSON file")
        sp.add_argument("--field", type=int, default=None, help="characteristic override for builtin models")
        return sp

    add("validate", "check the model against every axiom")
    sp = add("hilbert", "graded dimensions of k[Q]")
    sp.add_argument("--max-degree", type=int, required=True)
    sp = add("multiply", "product of two elements")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--decompose", action="store_true")
    sp = add("decompose", "split an element of k[Q] into face elements")
    sp.add_argument("--element", required=True)
    sp = add("member", "membership test")
    sp.add_argument("--element", required=True)
    sp.add_argument("--oracle", action="store_true", help="also run the linear-algebra oracle")
    sp = add("charclass", "total equivariant characteristic class")
    sp.add_argument("--kind", choices=("sw", "pontrjagin"), required=True)
    sp = add("eta", "image of a degree-2 class of H*(BT)")
    sp.add_argument("--u", required=True, help="comma-separated coefficients")
    sp = add("compare-sr", "compare with the Stanley-Reisner count")
    sp.add_argument("--max-degree", type=int, required=True)
    return p


def _print_decomposition(dec: facering.FaceDecomposition, out) -> None:
    print(dec.format(), file=out)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        model = resolve_model(args.model, args.field)
    except ValidationError as e:
        print(e.report.format(), file=out)
        return 1
    except (FaceRingError, ValueError, OSError) as e:
        print(f"error: {e}", file=err)
        return 1
    C = model.complex

    try:
        if args.command == "validate":
            report = validate_complex(C)
            print(report.format(), file=out)
            return 0 if report.ok else 1

        if args.command == "hilbert":
            print(" ".join(map(str, facering.hilbert(C, args.max_degree))), file=out)
            return 0

        if args.command == "compare-sr":
            fast = facering.hilbert(C, args.max_degree)
            sr = oracle.sr_hilbert(C, args.max_degree)
            if fast == sr:
                print("AGREE", file=out)
                return 0
            print("DISAGREE", file=out)
            print("hilbert " + " ".join(map(str, fast)), file=out)
            print("sr " + " ".join(map(str, sr)), file=out)
            return 1

        if args.command == "multiply":
            a = load_element(C, args.lhs)
            b = load_element(C, args.rhs)
            prod = facering.multiply(C, a, b)
            print(facering.format_element(prod), file=out)
            if args.decompose:
                _print_decomposition(facering.decompose(C, prod), out)
            return 0

        if args.command == "decompose":
            a = load_element(C, args.element)
            _print_decomposition(facering.decompose(C, a), out)
            return 0

        if args.command == "member":
            a = load_element(C, args.element)
            fast = facering.is_member(C, a)
            verdict = "MEMBER" if fast else "NOT MEMBER"
            if not args.oracle:
                print(verdict, file=out)
                return 0
            slow = oracle.naive_membership(C, a).member
            if slow == fast:
                print(f"{verdict} (agrees with oracle)", file=out)
                return 0
            print(f"{verdict} (DISAGREES with oracle)", file=out)
            return 1

        if args.command == "charclass":
            if model.chars is None:
                print("error: model has no char_data", file=err)
                return 1
            if args.kind == "sw":
                total = charclass.sw_total(C, model.chars)
            else:
                total = charclass.pontrjagin_total(C, model.chars)
            _print_decomposition(facering.decompose(C, total), out)
            return 0

        if args.command == "eta":
            if model.torus is None:
                print("error: model has no torus_data", file=err)
                return 1
            u = [C.field(x) for x in args.u.split(",") if x.strip()]
            _print_decomposition(facering.decompose(C, facering.eta(C, model.torus, u)), out)
            return 0
    except NotInFaceRing as e:
        print(f"NOT IN FACE RING: {e}", file=out)
        return 1
    except (FaceRingError, ValueError, OSError) as e:
        print(f"error: {e}", file=err)
        return 1
    return 2  # pragma: no cover


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
