"""Core and characteristic of ring expressions, and morphism existence.

The core of a ring is its largest solid subring. It is computed here by
structural recursion, one rule per constructor; each rule's name is
recorded in the derivation so output can be audited.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .foundations import INF, ExpFun, ExtNat, lcm0, require_prime
from .ringexpr import (
    Cyclic,
    CyclicPE,
    Field0,
    IndexedProd,
    IntegersZ,
    LocalAt,
    LocalizedZ,
    Padic,
    Poly,
    Product,
    ProfiniteZ,
    RationalsQ,
    RingExpr,
)
from .soliddata import SolidData, limit_sup


@dataclass(frozen=True)
class CoreResult:
    data: SolidData
    characteristic: int          # of the input ring; 0 means characteristic zero
    derivation: tuple[str, ...]

    def lines(self) -> list[tuple[str, str]]:
        return [
            ("core", self.data.line()),
            ("char", str(self.characteristic)),
            ("derivation", ",".join(self.derivation)),
        ]


def _local(p: int) -> SolidData:
    return SolidData(ExpFun(0, {p: INF}), 0)


def core(r: RingExpr) -> CoreResult:
    if isinstance(r, IntegersZ):
        # p*x^2 = x has only the root 0 in Z, so no Z[1/p] x Z/p^a maps in
        return CoreResult(SolidData(ExpFun(INF), 0), 0, ("prime_ring",))
    if isinstance(r, RationalsQ):
        return CoreResult(SolidData(ExpFun(0), 0), 0, ("rationals",))
    if isinstance(r, Field0):
        return CoreResult(SolidData(ExpFun(0), 0), 0, ("char_zero_field",))
    if isinstance(r, Cyclic):
        return CoreResult(SolidData.cyclic(r.n), r.n, ("nonzero_char_cyclic",))
    if isinstance(r, LocalizedZ):
        return CoreResult(SolidData.localization(r.inverted), 0, ("localization",))
    if isinstance(r, LocalAt):
        return CoreResult(_local(r.p), 0, ("local_at_prime",))
    if isinstance(r, Padic):
        return CoreResult(_local(r.p), 0, ("padic_tower_sup",))
    if isinstance(r, ProfiniteZ):
        return CoreResult(SolidData(ExpFun(INF), 0), 0, ("profinite_sup",))
    if isinstance(r, Product):
        a, b = core(r.left), core(r.right)
        return CoreResult(
            limit_sup([a.data, b.data]),
            lcm0(a.characteristic, b.characteristic),
            a.derivation + b.derivation + ("limit_sup",),
        )
    if isinstance(r, IndexedProd):
        return _indexed_core(r)
    if isinstance(r, Poly):
        base = core(r.base)
        return CoreResult(base.data, base.characteristic, base.derivation + ("polynomial",))
    raise TypeError(f"not a ring expression: {r!r}")


def _indexed_core(r: IndexedProd) -> CoreResult:
    index = r.index
    if isinstance(r.factor, CyclicPE):
        # factor p contributes e(p) at p and 0 elsewhere; the sup is e on the index
        e = r.factor.exp.restrict(index, off=0)
        positive = e.where(lambda v: v > 0)
        if positive.is_finite:
            # bounded torsion: a finite product of cyclic rings after all
            char = math.prod(p ** e(p) for p in positive.exceptions)
            return CoreResult(SolidData(e, 1), char, ("indexed_limit_sup",))
        return CoreResult(SolidData(e, 0), 0, ("indexed_limit_sup",))
    e = ExpFun(INF).restrict(index, off=0)
    if index.is_empty:
        return CoreResult(SolidData(e, 1), 1, ("indexed_limit_sup",))
    return CoreResult(SolidData(e, 0), 0, ("indexed_limit_sup",))


def hom_exists(s: SolidData, target: CoreResult) -> bool:
    """Whether the solid ring ``s`` admits a morphism to the ring whose core is ``target``."""
    if not s.e.dominates(target.data.e):
        return False
    return s.q == 0 or target.characteristic != 0


def min_exponent(p: int, target: CoreResult) -> ExtNat:
    require_prime(p)
    return target.data.e(p)
