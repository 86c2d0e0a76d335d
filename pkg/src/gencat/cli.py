"""Command line front end.

Each subcommand reads inline JSON or term text from its arguments; an
argument of the form ``@path`` is read from that file instead.  Exit code
0 reports success (or EQUAL), 1 reports NOT-EQUAL from ``eq``, and 2
reports any parse, type, or boundary failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .arrows import GenArrow, compose, render_arrow
from .brauer import (
    BrauerAlgebraConfig, BrauerDiagram, BrauerElement, algebra_mul,
    beta_matrix, matrix_to_dict,
)
from .logic import generality, infer_fragment, proof_equal
from .parsing import parse_term
from .relations import fp_arrow
from .syntax import Fragment

__all__ = ["main"]

_FRAGMENT_CHOICES = [fragment.value for fragment in Fragment]


def _payload(argument: str) -> str:
    if argument.startswith("@"):
        return Path(argument[1:]).read_text()
    return argument


def _load_json(argument: str) -> dict:
    return json.loads(_payload(argument))


def _emit(data: dict) -> None:
    print(json.dumps(data))


def _fragment(args: argparse.Namespace) -> Fragment | None:
    return Fragment(args.fragment) if args.fragment else None


def _cmd_compose(args: argparse.Namespace) -> int:
    second = GenArrow.from_dict(_load_json(args.second))
    first = GenArrow.from_dict(_load_json(args.first))
    result = compose(second, first)
    _emit({"arrow": result.arrow.to_dict(), "circles": result.circles})
    return 0


def _cmd_eq(args: argparse.Namespace) -> int:
    left = parse_term(_payload(args.left))
    right = parse_term(_payload(args.right))
    fragment = _fragment(args) or infer_fragment(left, right)
    equal = proof_equal(left, right, fragment)
    print("EQUAL" if equal else "NOT-EQUAL")
    _emit(
        {
            "left": generality(left, fragment).to_dict(),
            "right": generality(right, fragment).to_dict(),
        }
    )
    return 0 if equal else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    term = parse_term(_payload(args.term))
    _emit(generality(term, _fragment(args)).to_dict())
    return 0


def _cmd_rep(args: argparse.Namespace) -> int:
    arrow = GenArrow.from_dict(_load_json(args.arrow))
    _emit(fp_arrow(args.p, arrow).to_dict())
    return 0


def _cmd_brauer_mul(args: argparse.Namespace) -> int:
    left, left_c = BrauerElement.from_dict(_load_json(args.left))
    right, right_c = BrauerElement.from_dict(_load_json(args.right))
    if args.c is not None:
        c = Fraction(args.c)
    elif left_c == right_c:
        c = left_c
    else:
        raise ValueError(
            f"operands carry different loop parameters ({left_c} vs {right_c}); "
            "pass --c to choose one"
        )
    if left.n != right.n:
        raise ValueError("operands live on different strand counts")
    config = BrauerAlgebraConfig(left.n, c)
    _emit(algebra_mul(left, right, config).to_dict(c))
    return 0


def _cmd_beta(args: argparse.Namespace) -> int:
    diagram = BrauerDiagram(GenArrow.from_dict(_load_json(args.diagram)))
    _emit(matrix_to_dict(beta_matrix(args.p, diagram)))
    return 0


def _cmd_draw(args: argparse.Namespace) -> int:
    arrow = GenArrow.from_dict(_load_json(args.arrow))
    print(render_arrow(arrow))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gencat",
        description="Partition arrows, proof identity, and diagram algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compose_parser = sub.add_parser(
        "compose", help="compose two arrows; the second argument is applied first"
    )
    compose_parser.add_argument("second", help="arrow JSON applied second")
    compose_parser.add_argument("first", help="arrow JSON applied first")
    compose_parser.set_defaults(handler=_cmd_compose)

    eq_parser = sub.add_parser("eq", help="decide whether two terms denote one arrow")
    eq_parser.add_argument("left")
    eq_parser.add_argument("right")
    eq_parser.add_argument(
        "--fragment",
        choices=_FRAGMENT_CHOICES,
        default=None,
        help="fragment setting; inferred when omitted",
    )
    eq_parser.set_defaults(handler=_cmd_eq)

    gen_parser = sub.add_parser("gen", help="print the generality arrow of a term")
    gen_parser.add_argument("term")
    gen_parser.add_argument("--fragment", choices=_FRAGMENT_CHOICES, default=None)
    gen_parser.set_defaults(handler=_cmd_gen)

    rep_parser = sub.add_parser(
        "rep", help="represent an arrow as a relation between function indices"
    )
    rep_parser.add_argument("arrow")
    rep_parser.add_argument("--p", type=int, default=2, help="digit base (default 2)")
    rep_parser.set_defaults(handler=_cmd_rep)

    brauer_parser = sub.add_parser(
        "brauer-mul", help="multiply two diagram-algebra elements"
    )
    brauer_parser.add_argument("left")
    brauer_parser.add_argument("right")
    brauer_parser.add_argument(
        "--c",
        default=None,
        help="loop parameter as num/den; defaults to the operands' shared value",
    )
    brauer_parser.set_defaults(handler=_cmd_brauer_mul)

    beta_parser = sub.add_parser("beta", help="print the 0-1 matrix of a diagram")
    beta_parser.add_argument("diagram", help="arrow JSON with all blocks of size two")
    beta_parser.add_argument("--p", type=int, default=2, help="digit base (default 2)")
    beta_parser.set_defaults(handler=_cmd_beta)

    draw_parser = sub.add_parser("draw", help="sketch an arrow as plain text")
    draw_parser.add_argument("arrow")
    draw_parser.set_defaults(handler=_cmd_draw)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as failure:
        print(f"error: {failure}", file=sys.stderr)
        return 2
