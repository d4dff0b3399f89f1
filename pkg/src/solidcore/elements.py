"""Elements of solid rings with ``q = 0``, and core membership in infinite products.

A ring with data ``(e, 0)`` is the union of the tower
``Z[J_n^-1] x prod_{p in K_n} Z/p^e(p)``, so an element is a rational number
together with finitely many residues that deviate from it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .errors import RingMismatch, SolidError
from .foundations import INF, ExpFun, PrimeSet, factorize
from .scan import Scanner
from .soliddata import SolidData


def residue(x: Fraction, modulus: int) -> int:
    """Image of ``x`` in ``Z/modulus``; the denominator must be a unit there."""
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def _den_primes(x: Fraction) -> list[int]:
    return list(factorize(x.denominator))


@dataclass(frozen=True)
class SolidElement:
    ring: SolidData
    rat: Fraction
    deviations: tuple[tuple[int, int], ...] = ()

    @property
    def residues(self) -> dict[int, int]:
        return dict(self.deviations)

    def at(self, p: int) -> int:
        """Component in ``Z/p^e(p)`` for a prime with ``0 < e(p) < inf``."""
        table = self.residues
        if p in table:
            return table[p]
        return residue(self.rat, p ** self.ring.e(p))

    def _touched(self, other: SolidElement) -> set[int]:
        keys = set(self.residues) | set(other.residues)
        keys.update(_den_primes(self.rat))
        keys.update(_den_primes(other.rat))
        e = self.ring.e
        return {p for p in keys if 0 < e(p) < INF}

    def _check(self, other: SolidElement) -> None:
        if not isinstance(other, SolidElement):
            raise TypeError(f"cannot combine with {other!r}")
        if self.ring != other.ring:
            raise RingMismatch("elements live in different rings")

    def __add__(self, other: SolidElement) -> SolidElement:
        self._check(other)
        devs = {p: self.at(p) + other.at(p) for p in self._touched(other)}
        return make_element(self.ring, self.rat + other.rat, devs)

    def __mul__(self, other: SolidElement) -> SolidElement:
        self._check(other)
        devs = {p: self.at(p) * other.at(p) for p in self._touched(other)}
        return make_element(self.ring, self.rat * other.rat, devs)

    def __neg__(self) -> SolidElement:
        return make_element(self.ring, -self.rat, {p: -r for p, r in self.deviations})

    def __sub__(self, other: SolidElement) -> SolidElement:
        return self + (-other)

    def text(self) -> str:
        body = ", ".join(f"{p}={r}" for p, r in self.deviations)
        return f"({self.rat}; {body})" if body else f"({self.rat})"

    __str__ = text


def make_element(ring: SolidData, rat, deviations: Mapping[int, int] | None = None) -> SolidElement:
    """Build an element in normal form.

    Residues are reduced into ``[0, p^e(p))``; a residue equal to the image
    of the rational part is dropped, except at primes dividing the
    denominator, where it is mandatory.
    """
    if ring.q != 0:
        raise SolidError("elements are modelled only for rings with q = 0")
    rat = Fraction(rat)
    e = ring.e
    dens = _den_primes(rat)
    for p in dens:
        if e(p) == INF:
            raise SolidError(f"denominator prime {p} is not inverted in this ring")
    devs = dict(deviations or {})
    out: dict[int, int] = {}
    for p, r in devs.items():
        if not 0 < e(p) < INF:
            raise SolidError(f"no residue component at {p}: e({p}) = {e(p)}")
        mod = p ** e(p)
        r %= mod
        if p in dens or r != residue(rat, mod):
            out[p] = r
    for p in dens:
        if 0 < e(p) < INF and p not in out:
            raise SolidError(f"residue at {p} is mandatory: {p} divides the denominator")
    return SolidElement(ring, rat, tuple(sorted(out.items())))


def elem_add(x: SolidElement, y: SolidElement) -> SolidElement:
    return x + y


def elem_mul(x: SolidElement, y: SolidElement) -> SolidElement:
    return x * y


def elem_neg(x: SolidElement) -> SolidElement:
    return -x


def elem_eq(x: SolidElement, y: SolidElement) -> bool:
    x._check(y)
    return x == y


# -- product elements and core membership -----------------------------------

class Tail(enum.Enum):
    FOLLOW = "follow"
    CONSTANT = "const"


@dataclass(frozen=True)
class ProductElementSpec:
    """Element of ``Z[J^-1] x prod_{p in K} Z/p^e(p)`` with a finitely described tail.

    Components at primes not listed in ``exceptions`` either follow the
    rational part or are the constant integer ``constant``.
    """

    rat: Fraction
    exceptions: tuple[tuple[int, int], ...] = ()
    tail: Tail = Tail.FOLLOW
    constant: Optional[int] = None


def in_core(j: PrimeSet, e: ExpFun, spec: ProductElementSpec) -> bool:
    """Whether ``spec`` lies in the core of ``Z[J^-1] x prod_{e(p)>0} Z/p^e(p)``.

    The core consists of the elements whose components agree with the
    rational part at all but finitely many primes, and agree with it at
    every prime whose residue ring is not reached by the rational factor
    (primes of the product that are not inverted in ``Z[J^-1]``).
    """
    if not e.is_finite_valued():
        raise SolidError("product exponents must be finite")
    k = e.where(lambda v: v > 0)
    rat = spec.rat
    dens = _den_primes(rat)
    for p in dens:
        if p not in j:
            raise SolidError(f"denominator prime {p} is not inverted in Z[J^-1]")
    exc = dict(spec.exceptions)
    for p, r in exc.items():
        if p not in k:
            raise SolidError(f"{p} is not a factor of the product")
        exc[p] = r % p ** e(p)
    if spec.tail is Tail.FOLLOW:
        for p in dens:
            if p in k and p not in exc:
                raise SolidError(f"component at {p} must be given: {p} divides the denominator")
    elif spec.constant is None:
        raise SolidError("constant tail needs a value")

    def component(p: int) -> int:
        if p in exc:
            return exc[p]
        if spec.tail is Tail.FOLLOW:
            return residue(rat, p ** e(p))
        return spec.constant % p ** e(p)

    def agrees(p: int) -> bool:
        # primes of the denominator lie in J, so they never reach this check
        return component(p) == residue(rat, p ** e(p))

    unreachable = k - j
    if k.is_finite:
        return all(agrees(p) for p in unreachable.exceptions)
    if spec.tail is Tail.CONSTANT and rat != spec.constant:
        # the constant and the rational part differ modulo all but finitely many p
        return False
    return all(agrees(p) for p in exc if p in unreachable)


# -- literals -----------------------------------------------------------------

def _read_rational(sc: Scanner) -> Fraction:
    num = sc.read_int()
    if sc.accept("/"):
        start = sc.pos
        den = sc.read_nat()
        if den == 0:
            raise sc.error("zero denominator", start)
        return Fraction(num, den)
    return Fraction(num)


def _read_residues(sc: Scanner) -> dict[int, int]:
    out: dict[int, int] = {}
    while True:
        sc.skip_ws()
        start = sc.pos
        p = sc.read_prime()
        if p in out:
            raise sc.error(f"duplicate residue for {p}", start)
        sc.expect("=")
        out[p] = sc.read_int()
        if not sc.accept(","):
            return out


def parse_element(text: str, ring: SolidData) -> SolidElement:
    """Parse ``(<rat>; <p>=<residue>, ...)``."""
    sc = Scanner(text)
    sc.expect("(")
    rat = _read_rational(sc)
    devs: dict[int, int] = {}
    if sc.accept(";") and not sc.peek(")"):
        devs = _read_residues(sc)
    sc.expect(")")
    sc.finish()
    return make_element(ring, rat, devs)


def parse_product_element(text: str) -> ProductElementSpec:
    """Parse ``(<rat>[; <p>=<r>, ...][; tail=follow|const:<int>])``."""
    sc = Scanner(text)
    sc.expect("(")
    rat = _read_rational(sc)
    exc: dict[int, int] = {}
    tail, constant = Tail.FOLLOW, None
    while sc.accept(";"):
        if sc.accept("tail"):
            sc.expect("=")
            if sc.accept("follow"):
                tail = Tail.FOLLOW
            elif sc.accept("const"):
                sc.expect(":")
                tail, constant = Tail.CONSTANT, sc.read_int()
            else:
                raise sc.error("tail must be 'follow' or 'const:<int>'")
            break
        exc.update(_read_residues(sc))
    sc.expect(")")
    sc.finish()
    return ProductElementSpec(rat, tuple(sorted(exc.items())), tail, constant)
