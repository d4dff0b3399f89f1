"""Command-line front end.

Every command prints ``key: value`` lines (or one JSON object with the same
keys under ``--format json``). Exit status: 0 on success, including
negative answers such as ``hom: no``; 1 on domain errors; 2 on usage and
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import core, hom_exists
from .elements import in_core, parse_element, parse_product_element
from .errors import ParseError, SolidError
from .foundations import ExpFun, PrimeSet
from .oracle import (
    build_hom,
    count_cyclic_homs,
    coproduct_crosscheck,
    find_r,
    find_r_all,
    integer_image,
    tensor_grid_core,
)
from .ringexpr import (
    CyclicPE,
    IndexedProd,
    IntegersZ,
    LocalizedZ,
    Product,
    RationalsQ,
    RingExpr,
    parse,
)
from .soliddata import SolidData, colimit_bound, coproduct, iso, limit_sup, parse_solid


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _solid_arg(text: str) -> SolidData:
    """A ``solid(...)`` line, or a ring expression standing for its core."""
    if text.lstrip().startswith("solid("):
        return parse_solid(text)
    return core(parse(text)).data


def _cmd_core(args) -> list[tuple[str, str]]:
    return core(parse(args.expr)).lines()


def _cmd_hom(args):
    source = _solid_arg(args.source)
    target = core(parse(args.target))
    return [("hom", _yes(hom_exists(source, target)))]


def _cmd_coprod(args):
    return [("coprod", coproduct([_solid_arg(t) for t in args.rings]).line())]


def _cmd_limit_core(args):
    return [("limit-core", limit_sup([core(parse(t)).data for t in args.exprs]).line())]


def _cmd_colimit_bound(args):
    bound = colimit_bound([core(parse(t)).data for t in args.exprs], inputs_solid=args.solid_inputs)
    out = [
        ("e-bound", bound.e_bound.text()),
        ("q-bound", str(bound.q_bound)),
        ("exact", _yes(bound.exact)),
    ]
    if bound.exact:
        out.append(("core", bound.as_solid().line()))
    return out


def _cmd_iso(args):
    return [("iso", _yes(iso(parse_solid(args.a), parse_solid(args.b))))]


def _cmd_elem(args):
    ring = parse_solid(args.ring)
    x = parse_element(args.x, ring)
    if args.op == "neg":
        if args.y is not None:
            raise UsageError("neg takes one element")
        return [("elem", (-x).text())]
    if args.y is None:
        raise UsageError(f"{args.op} takes two elements")
    y = parse_element(args.y, ring)
    if args.op == "eq":
        return [("eq", _yes(x == y))]
    result = x + y if args.op == "add" else x * y
    return [("elem", result.text())]


def _ambient(r: RingExpr) -> tuple[PrimeSet, ExpFun]:
    if isinstance(r, Product) and isinstance(r.right, IndexedProd) and isinstance(r.right.factor, CyclicPE):
        left = r.left
        if isinstance(left, IntegersZ):
            j = PrimeSet.of(())
        elif isinstance(left, RationalsQ):
            j = PrimeSet.all_but()
        elif isinstance(left, LocalizedZ):
            j = left.inverted
        else:
            left = None
        if left is not None:
            prod = r.right
            return j, prod.factor.exp.restrict(prod.index, off=0)
    raise SolidError("member needs an expression of the form Z[J^-1] x Prod(p in S) Z/p^e")


def _cmd_member(args):
    j, e = _ambient(parse(args.expr))
    return [("member", _yes(in_core(j, e, parse_product_element(args.element))))]


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _int_args(values: Sequence[str], count: int, shape: str) -> list[int]:
    if len(values) != count:
        raise UsageError(f"expected {shape}")
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f"expected {shape}, got {' '.join(values)!r}") from None


def _cmd_oracle(args):
    a = args.args
    if args.check == "finite-core":
        if len(a) != 1:
            raise UsageError("finite-core takes one argument n1,n2,...")
        moduli = _ints(a[0])
        grid = tensor_grid_core(moduli)
        return [
            ("core-size", str(grid.size)),
            ("oracle-agree", _yes(grid.agree)),
            ("integer-image", _yes(grid.elements == integer_image(moduli))),
        ]
    if args.check == "find-r":
        n, p, k = _int_args(a, 3, "find-r n p a")
        w = find_r(n, p, k)
        if w is None:
            return [("witness", "none")]
        bad = build_hom(w).violations(range(min(n, 12)), range(min(p ** k, 4)))
        return [
            ("witness", w.text()),
            ("unique", _yes(len(find_r_all(n, p, k)) == 1)),
            ("hom-check", "pass" if not bad else "fail"),
        ]
    if args.check == "hom-count":
        m, n = _int_args(a, 2, "hom-count m n")
        return [("hom-count", str(count_cyclic_homs(m, n)))]
    if args.check == "coprod-check":
        if len(a) != 2:
            raise UsageError("coprod-check takes two solid lines")
        agree, by_rule, by_tensor = coproduct_crosscheck(_solid_arg(a[0]), _solid_arg(a[1]))
        return [
            ("coprod-check", "agree" if agree else "disagree"),
            ("rule", by_rule.line()),
            ("tensor", by_tensor.line()),
        ]
    raise UsageError(f"unknown oracle check {args.check!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="solidcore", description="Cores and classification of solid rings.")
    parser.add_argument("--format", choices=("lines", "json"), default="lines")
    # also accepted after the subcommand
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("lines", "json"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("core", parents=[common], help="core and characteristic of a ring expression")
    p.add_argument("expr")
    p.set_defaults(run=_cmd_core)

    p = sub.add_parser("hom", parents=[common], help="does a morphism from a solid ring to a ring exist")
    p.add_argument("source", help="solid(...) line, or a ring expression standing for its core")
    p.add_argument("target")
    p.set_defaults(run=_cmd_hom)

    p = sub.add_parser("coprod", parents=[common], help="coproduct of solid rings")
    p.add_argument("rings", nargs="+")
    p.set_defaults(run=_cmd_coprod)

    p = sub.add_parser("limit-core", parents=[common], help="core of the product of the given rings")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(run=_cmd_limit_core)

    p = sub.add_parser("colimit-bound", parents=[common], help="bounds on the core of the coproduct of the given rings")
    p.add_argument("--solid-inputs", action="store_true", help="assert every input ring is solid")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(run=_cmd_colimit_bound)

    p = sub.add_parser("iso", parents=[common], help="are two solid rings isomorphic")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(run=_cmd_iso)

    p = sub.add_parser("elem", parents=[common], help="arithmetic in a solid ring with q=0")
    p.add_argument("op", choices=("add", "mul", "neg", "eq"))
    p.add_argument("--ring", required=True)
    p.add_argument("x")
    p.add_argument("y", nargs="?")
    p.set_defaults(run=_cmd_elem)

    p = sub.add_parser("member", parents=[common], help="core membership in Z[J^-1] x Prod Z/p^e")
    p.add_argument("expr")
    p.add_argument("element")
    p.set_defaults(run=_cmd_member)

    p = sub.add_parser("oracle", parents=[common], help="brute-force checks on finite rings")
    p.add_argument("check", choices=("finite-core", "find-r", "hom-count", "coprod-check"))
    p.add_argument("args", nargs="*")
    p.set_defaults(run=_cmd_oracle)
    return parser


def _emit(pairs: list[tuple[str, str]], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(dict(pairs), sort_keys=False) + "\n")
    else:
        for key, value in pairs:
            out.write(f"{key}: {value}\n")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        pairs = args.run(args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except ParseError as exc:
        err.write(f"parse error {exc}\n{exc.caret()}\n")
        return 2
    except SolidError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        # out-of-range values (e.g. a non-prime passed to an oracle)
        err.write(f"error: {exc}\n")
        return 1
    _emit(pairs, args.format, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
