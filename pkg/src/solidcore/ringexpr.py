"""AST, recursive-descent parser and printer for ring expressions.

Grammar::

    expr      := term { "x" term }
    term      := "Z" | "Q" | "Zhat" | "Field(0)"
               | "Z/" nat [ "Z" ]
               | "Z[" inv "]"
               | "Z_(" prime ")"
               | "Z_" prime
               | "Poly(" expr ")"
               | "Prod(p in " primeset ")" ( "Z/p^" expspec | "Z_p" )
               | "(" expr ")"
    inv       := "1/" prime { "," "1/" prime }  |  primeset "^-1"
    expspec   := nat | expfun-text
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParseError
from .foundations import (
    INF,
    ExpFun,
    PrimeSet,
    format_extnat,
    read_expfun,
    read_extnat,
    read_primeset,
    require_prime,
)
from .scan import Scanner


@dataclass(frozen=True)
class IntegersZ:
    pass


@dataclass(frozen=True)
class RationalsQ:
    pass


@dataclass(frozen=True)
class ProfiniteZ:
    pass


@dataclass(frozen=True)
class Field0:
    """Any field of characteristic zero."""


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cyclic modulus must be >= 1")


@dataclass(frozen=True)
class LocalizedZ:
    inverted: PrimeSet


@dataclass(frozen=True)
class LocalAt:
    """Z localized at the prime ideal (p)."""

    p: int

    def __post_init__(self):
        require_prime(self.p)


@dataclass(frozen=True)
class Padic:
    p: int

    def __post_init__(self):
        require_prime(self.p)


@dataclass(frozen=True)
class CyclicPE:
    """Factor ``Z/p^{e(p)}`` of an indexed product."""

    exp: ExpFun


@dataclass(frozen=True)
class PadicP:
    """Factor ``Z_p`` of an indexed product."""


@dataclass(frozen=True)
class IndexedProd:
    index: PrimeSet
    factor: Union[CyclicPE, PadicP]

    def __post_init__(self):
        if isinstance(self.factor, CyclicPE) and not finite_on(self.factor.exp, self.index):
            raise ValueError("infinite exponent inside Prod factor")


@dataclass(frozen=True)
class Product:
    left: RingExpr
    right: RingExpr


@dataclass(frozen=True)
class Poly:
    base: RingExpr


RingExpr = Union[
    IntegersZ, RationalsQ, ProfiniteZ, Field0, Cyclic, LocalizedZ, LocalAt,
    Padic, IndexedProd, Product, Poly,
]


def finite_on(e: ExpFun, index: PrimeSet) -> bool:
    """True when ``e`` takes no infinite value on ``index``."""
    return (e.where(lambda v: v == INF) & index).is_empty


def normalize(r: RingExpr) -> RingExpr:
    if isinstance(r, LocalizedZ):
        if r.inverted.is_empty:
            return IntegersZ()
        if r.inverted.is_all:
            return RationalsQ()
        return r
    if isinstance(r, Product):
        return Product(normalize(r.left), normalize(r.right))
    if isinstance(r, Poly):
        return Poly(normalize(r.base))
    return r


# -- printer ------------------------------------------------------------------

def print_expr(r: RingExpr) -> str:
    if isinstance(r, Product):
        right = print_expr(r.right)
        if isinstance(r.right, Product):
            right = f"({right})"
        return f"{print_expr(r.left)} x {right}"
    return _print_term(r)


def _print_term(r: RingExpr) -> str:
    if isinstance(r, IntegersZ):
        return "Z"
    if isinstance(r, RationalsQ):
        return "Q"
    if isinstance(r, ProfiniteZ):
        return "Zhat"
    if isinstance(r, Field0):
        return "Field(0)"
    if isinstance(r, Cyclic):
        return f"Z/{r.n}"
    if isinstance(r, LocalizedZ):
        if r.inverted.is_empty:
            return "Z"
        if r.inverted.is_all:
            return "Q"
        return f"Z[{r.inverted.text()}^-1]"
    if isinstance(r, LocalAt):
        return f"Z_({r.p})"
    if isinstance(r, Padic):
        return f"Z_{r.p}"
    if isinstance(r, Poly):
        return f"Poly({print_expr(r.base)})"
    if isinstance(r, IndexedProd):
        head = f"Prod(p in {r.index.text()})"
        if isinstance(r.factor, PadicP):
            return f"{head} Z_p"
        e = r.factor.exp
        spec = format_extnat(e.default) if not e.exceptions else e.text()
        return f"{head} Z/p^{spec}"
    raise TypeError(f"not a ring expression: {r!r}")


# -- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.sc = Scanner(text)

    def expr(self) -> RingExpr:
        left = self.term()
        while self.sc.accept("x"):
            left = Product(left, self.term())
        return left

    def term(self) -> RingExpr:
        sc = self.sc
        if sc.accept("Zhat"):
            return ProfiniteZ()
        if sc.accept("Z"):
            if sc.accept("/"):
                sc.skip_ws()
                at = sc.pos
                n = sc.read_nat()
                if n < 1:
                    raise sc.error("modulus must be >= 1", at)
                sc.accept("Z")
                return Cyclic(n)
            if sc.accept("["):
                inv = self.inv()
                sc.expect("]")
                return LocalizedZ(inv)
            if sc.accept("_"):
                if sc.accept("("):
                    p = sc.read_prime()
                    sc.expect(")")
                    return LocalAt(p)
                return Padic(sc.read_prime())
            return IntegersZ()
        if sc.accept("Q"):
            return RationalsQ()
        if sc.accept("Field(0)"):
            return Field0()
        if sc.accept("Poly("):
            base = self.expr()
            sc.expect(")")
            return Poly(base)
        if sc.accept("Prod("):
            return self.indexed_prod()
        if sc.accept("("):
            inner = self.expr()
            sc.expect(")")
            return inner
        raise sc.error("expected a ring term")

    def inv(self) -> PrimeSet:
        sc = self.sc
        if sc.peek("1/"):
            primes: list[int] = []
            while True:
                sc.expect("1/")
                primes.append(sc.read_prime())
                if not sc.accept(","):
                    return PrimeSet.of(primes)
        s = read_primeset(sc)
        sc.expect("^-1")
        return s

    def indexed_prod(self) -> IndexedProd:
        sc = self.sc
        sc.expect("p")
        sc.expect("in")
        index = read_primeset(sc)
        sc.expect(")")
        if sc.accept("Z_p"):
            return IndexedProd(index, PadicP())
        sc.expect("Z/p^")
        sc.skip_ws()
        start = sc.pos
        exp = read_expfun(sc) if sc.peek("e(") else ExpFun(read_extnat(sc))
        if not finite_on(exp, index):
            raise sc.error("infinite exponent inside Prod factor", start)
        return IndexedProd(index, CyclicPE(exp))


def parse(text: str) -> RingExpr:
    p = _Parser(text)
    r = p.expr()
    p.sc.finish()
    return r


__all__ = [
    "RingExpr", "IntegersZ", "RationalsQ", "ProfiniteZ", "Field0", "Cyclic",
    "LocalizedZ", "LocalAt", "Padic", "IndexedProd", "CyclicPE", "PadicP",
    "Product", "Poly", "parse", "print_expr", "normalize", "ParseError",
]
