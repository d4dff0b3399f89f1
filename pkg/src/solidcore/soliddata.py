"""Classification data ``(e, q)`` of solid rings and the operations on it.

A solid ring is determined up to isomorphism by an exponent function ``e``
(for each prime, the least ``a`` admitting a map ``Z[1/p] x Z/p^a -> R``)
and a bit ``q`` that is 1 exactly for the finite cyclic rings.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidSolidData, TorsionIsWholeRing
from .foundations import (
    INF,
    ExpFun,
    PrimeSet,
    expfun_min,
    expfun_sup,
    factorize,
    read_expfun,
)
from .scan import Scanner


class SolidType(enum.Enum):
    ZERO_RING = "zero"
    CYCLIC = "cyclic"            # (1)
    SUBRING_OF_Q = "subring_q"   # (2)
    PRODUCT = "product"          # (3)
    COLIMIT = "colimit"          # (4)


@dataclass(frozen=True)
class SolidData:
    e: ExpFun
    q: int

    def __post_init__(self):
        if self.q not in (0, 1) or isinstance(self.q, bool):
            raise InvalidSolidData(f"binary parameter must be 0 or 1, got {self.q!r}")
        if self.q == 1:
            if not self.e.is_finite_valued():
                raise InvalidSolidData("q=1 forbids infinite exponents")
            if self.e.default != 0:
                raise InvalidSolidData("q=1 forbids infinitely many positive exponents")

    @classmethod
    def cyclic(cls, n: int) -> SolidData:
        if n < 1:
            raise InvalidSolidData("cyclic modulus must be >= 1")
        return cls(ExpFun(0, factorize(n)), 1)

    @classmethod
    def localization(cls, inverted: PrimeSet) -> SolidData:
        """``Z[J^-1]``: exponent 0 on ``J``, infinite off it."""
        return cls(ExpFun(INF).restrict(inverted.complement(), off=0), 0)

    @classmethod
    def basic(cls, p: int, a: int) -> SolidData:
        """The infinite basic ring ``Z[1/p] x Z/p^a``."""
        return cls(ExpFun(INF, {p: a}), 0)

    def characteristic(self) -> int:
        if self.q == 0:
            return 0
        return math.prod(p ** v for p, v in self.e.exceptions)

    def kind(self) -> SolidType:
        if self.q == 1:
            return SolidType.CYCLIC if self.e.exceptions else SolidType.ZERO_RING
        if 0 < self.e.default < INF:
            return SolidType.COLIMIT
        if any(0 < v < INF for _, v in self.e.exceptions):
            return SolidType.PRODUCT
        return SolidType.SUBRING_OF_Q

    @property
    def inverted(self) -> PrimeSet:
        """Primes with finite exponent, i.e. the primes inverted in the ring."""
        return self.e.where(lambda v: v < INF)

    def torsion_invariants(self) -> TorsionInvariants:
        if self.q == 1:
            raise TorsionIsWholeRing("a cyclic ring is all torsion; no torsion-free quotient")
        torsion = self.e.restrict(self.e.where(lambda v: 0 < v < INF), off=0)
        return TorsionInvariants(torsion, self.inverted)

    def ring_text(self) -> str:
        kind = self.kind()
        if kind in (SolidType.ZERO_RING, SolidType.CYCLIC):
            return f"Z/{self.characteristic()}"
        j = self.inverted
        if kind is SolidType.SUBRING_OF_Q:
            return localization_text(j)
        if kind is SolidType.PRODUCT:
            n = math.prod(p ** v for p, v in self.e.exceptions if 0 < v < INF)
            return f"{localization_text(j)} x Z/{n}"
        return f"Solid(J={j.text()}; e={self.e.text()})"

    def line(self) -> str:
        return f"solid(q={self.q}; {self.e.text()})  ring={self.ring_text()}"

    def __str__(self) -> str:
        return self.line()


@dataclass(frozen=True)
class TorsionInvariants:
    """Exponents of the torsion subring and the primes inverted in the quotient."""

    torsion: ExpFun
    quotient_j: PrimeSet


@dataclass(frozen=True)
class ColimitBound:
    e_bound: ExpFun
    q_bound: int
    exact: bool

    def as_solid(self) -> SolidData:
        if not self.exact:
            raise ValueError("bound is not known to be the core")
        return SolidData(self.e_bound, self.q_bound)


ZERO_RING = SolidData(ExpFun(0), 1)


def localization_text(j: PrimeSet) -> str:
    if j.is_empty:
        return "Z"
    if j.is_all:
        return "Q"
    return f"Z[{j.text()}^-1]"


def make_solid(e: ExpFun, q: int) -> SolidData:
    return SolidData(e, q)


def characteristic(s: SolidData) -> int:
    return s.characteristic()


def classify(s: SolidData) -> SolidType:
    return s.kind()


def torsion_invariants(s: SolidData) -> TorsionInvariants:
    return s.torsion_invariants()


def iso(a: SolidData, b: SolidData) -> bool:
    return a.e == b.e and a.q == b.q


def print_solid(s: SolidData) -> str:
    return s.ring_text()


def _nonempty(family: Iterable[SolidData]) -> list[SolidData]:
    family = list(family)
    if not family:
        raise ValueError("empty family")
    return family


def coproduct(family: Iterable[SolidData]) -> SolidData:
    """Tensor product over Z of solid rings: pointwise min of ``e``, max of ``q``."""
    family = _nonempty(family)
    e = family[0].e
    for s in family[1:]:
        e = expfun_min(e, s.e)
    return SolidData(e, max(s.q for s in family))


def limit_sup(family: Iterable[SolidData]) -> SolidData:
    """Core data of a limit (e.g. a product) from the cores of its factors."""
    family = _nonempty(family)
    e = expfun_sup(s.e for s in family)
    finite = e.is_finite_valued() and e.default == 0
    q = 1 if finite and all(s.q == 1 for s in family) else 0
    return SolidData(e, q)


def colimit_bound(family: Sequence[SolidData], inputs_solid: bool = False) -> ColimitBound:
    """Upper bound on the core exponents of a colimit and lower bound on its ``q``.

    Only when every input is itself solid is the bound known to be attained
    (then the colimit is the coproduct); otherwise ``exact`` is False.
    """
    family = _nonempty(family)
    c = coproduct(family)
    return ColimitBound(c.e, c.q, inputs_solid or len(family) == 1)


# -- text form ----------------------------------------------------------------

def read_solid(sc: Scanner) -> SolidData:
    sc.expect("solid(")
    sc.expect("q")
    sc.expect("=")
    start = sc.pos
    q = sc.read_nat()
    if q not in (0, 1):
        raise sc.error("q must be 0 or 1", start)
    sc.expect(";")
    e = read_expfun(sc)
    sc.expect(")")
    s = SolidData(e, q)
    if sc.accept("ring="):
        sc.skip_ws()
        start = sc.pos
        shown = sc.text[start:].strip()
        if shown != s.ring_text():
            raise sc.error(f"ring={shown} does not match the data ({s.ring_text()})", start)
        sc.pos = len(sc.text)
    return s


def parse_solid(text: str) -> SolidData:
    sc = Scanner(text)
    s = read_solid(sc)
    sc.finish()
    return s
