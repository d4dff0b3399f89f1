"""Brute-force checks on finite rings.

Everything here enumerates: absolute elements of finite products of cyclic
rings, the idempotent-like witness that a map ``Z[1/p] x Z/p^a -> Z/n``
needs, and maps between cyclic rings. These are the independent
references the symbolic rules are tested against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import EnumerationTooLarge, SolidError
from .foundations import INF, PrimeSet, factorize, require_prime
from .soliddata import SolidData, coproduct

ENUMERATION_LIMIT = 10**6

Tuple = tuple[int, ...]


@dataclass(frozen=True)
class GridCore:
    moduli: tuple[int, ...]
    elements: frozenset[Tuple]
    oracle_elements: frozenset[Tuple]

    @property
    def agree(self) -> bool:
        return self.elements == self.oracle_elements

    @property
    def size(self) -> int:
        return len(self.elements)


def _guard(moduli: Sequence[int]) -> None:
    if not moduli or any(n < 1 for n in moduli):
        raise SolidError("moduli must be a nonempty list of positive integers")
    if math.prod(moduli) > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(
            f"{math.prod(moduli)} tuples exceeds the enumeration limit {ENUMERATION_LIMIT}"
        )


def _grid_solve(moduli: Sequence[int]) -> frozenset[Tuple]:
    # extend partial tuples one coordinate at a time, keeping only those
    # consistent mod gcd(n_i, n_j) with every earlier coordinate
    partial: list[Tuple] = [()]
    for j, nj in enumerate(moduli):
        gs = [math.gcd(ni, nj) for ni in moduli[:j]]
        partial = [
            t + (x,)
            for t in partial
            for x in range(nj)
            if all((t[i] - x) % g == 0 for i, g in enumerate(gs))
        ]
    return frozenset(partial)


def _absolute_by_definition(moduli: Sequence[int]) -> frozenset[Tuple]:
    # R (x) R = prod_{i,j} Z/gcd(n_i, n_j), with x(x)1 -> (x_i) and 1(x)x -> (x_j)
    grid = [(i, j, math.gcd(ni, nj)) for i, ni in enumerate(moduli) for j, nj in enumerate(moduli)]
    out = []
    for x in itertools.product(*(range(n) for n in moduli)):
        left = [x[i] % g for i, _, g in grid]
        right = [x[j] % g for _, j, g in grid]
        if left == right:
            out.append(x)
    return frozenset(out)


def tensor_grid_core(moduli: Sequence[int]) -> GridCore:
    """Absolute elements of ``prod Z/n_i``, computed two independent ways."""
    moduli = tuple(moduli)
    _guard(moduli)
    return GridCore(moduli, _grid_solve(moduli), _absolute_by_definition(moduli))


def integer_image(moduli: Sequence[int]) -> frozenset[Tuple]:
    """Image of ``Z`` in ``prod Z/n_i``."""
    m = math.lcm(*moduli)
    return frozenset(tuple(k % n for n in moduli) for k in range(m))


# -- witnesses for Z[1/p] x Z/p^a -> Z/n ------------------------------------

@dataclass(frozen=True)
class HomWitness:
    p: int
    a: int
    target_modulus: int
    r: int

    def __post_init__(self):
        n, p, r = self.target_modulus, self.p, self.r
        if (p * r * r - r) % n or (p ** (self.a + 1) * r - p ** self.a) % n:
            raise SolidError(f"{r} is not a witness for ({p}, {self.a}) in Z/{n}")

    def text(self) -> str:
        return f"r={self.r} mod {self.target_modulus}"


@lru_cache(maxsize=None)
def find_r_all(n: int, p: int, a: int) -> tuple[int, ...]:
    """Every ``r`` in ``Z/n`` with ``p r^2 = r`` and ``p^(a+1) r = p^a``."""
    require_prime(p)
    if n < 1:
        raise SolidError("modulus must be >= 1")
    hi, lo = p ** (a + 1), p ** a
    return tuple(r for r in range(n) if (p * r * r - r) % n == 0 and (hi * r - lo) % n == 0)


def find_r(n: int, p: int, a: int) -> Optional[HomWitness]:
    found = find_r_all(n, p, a)
    return HomWitness(p, a, n, found[0]) if found else None


class WitnessHom:
    """The map ``(m/p^t, y) -> p r^(t+1) m + (1 - p r) y`` into ``Z/n``."""

    def __init__(self, w: HomWitness):
        self.w = w

    def __call__(self, x: Fraction, y: int) -> int:
        p, r, n = self.w.p, self.w.r, self.w.target_modulus
        x = Fraction(x)
        t = _p_power_exponent(x.denominator, p)
        return (p * pow(r, t + 1, n) * x.numerator + (1 - p * r) * y) % n

    def apply_raw(self, m: int, t: int, y: int) -> int:
        """Evaluate on the unreduced representative ``m/p^t``."""
        p, r, n = self.w.p, self.w.r, self.w.target_modulus
        return (p * pow(r, t + 1, n) * m + (1 - p * r) * y) % n

    def violations(self, numerators: Iterable[int], residues: Iterable[int], max_t: int = 3) -> list[str]:
        """Hom-axiom and well-definedness failures on the sample
        ``{(m/p^t, y) : m in numerators, t <= max_t, y in residues}``.

        Sums and products are formed on raw representatives ``m/p^t``; the
        representation check makes that equivalent to working with reduced
        fractions.
        """
        p, a, n = self.w.p, self.w.a, self.w.target_modulus
        mod = p ** a
        numerators, residues = list(numerators), list(residues)
        sample = sorted({(m, t, y % mod) for m in numerators for t in range(max_t + 1) for y in residues})
        # the formula is linear in m, so m only matters mod n
        table: dict[tuple[int, int, int], int] = {}

        def f(m: int, t: int, y: int) -> int:
            key = (m % n, t, y)
            if key not in table:
                table[key] = self.apply_raw(*key)
            return table[key]

        bad: list[str] = []
        if self(Fraction(1), 1) != 1 % n:
            bad.append("unit")
        for m, t, y in sample:
            v = f(m, t, y)
            if v != f(m * p, t + 1, y):
                bad.append(f"representation of {m}/{p}^{t}")
            if v != f(m, t, y + mod):
                bad.append(f"residue {y} mod {mod}")
        for (m1, t1, y1), (m2, t2, y2) in itertools.combinations_with_replacement(sample, 2):
            f1, f2 = f(m1, t1, y1), f(m2, t2, y2)
            top = max(t1, t2)
            total = m1 * p ** (top - t1) + m2 * p ** (top - t2)
            if f(total, top, (y1 + y2) % mod) != (f1 + f2) % n:
                bad.append(f"additivity at {m1}/{p}^{t1}, {m2}/{p}^{t2}")
            if f(m1 * m2, t1 + t2, (y1 * y2) % mod) != (f1 * f2) % n:
                bad.append(f"multiplicativity at {m1}/{p}^{t1}, {m2}/{p}^{t2}")
        return bad


def _p_power_exponent(d: int, p: int) -> int:
    t = 0
    while d % p == 0:
        d //= p
        t += 1
    if d != 1:
        raise SolidError(f"denominator is not a power of {p}")
    return t


def build_hom(w: HomWitness) -> WitnessHom:
    return WitnessHom(w)


def basic_to_basic_witnesses(p: int, a: int, target_p: int, b: int) -> list[tuple[Fraction, int]]:
    """Witnesses in ``Z[1/p'] x Z/p'^b`` for a map from ``Z[1/p] x Z/p^a``.

    In the rational coordinate ``x (p x - 1) = 0`` forces ``x`` in {0, 1/p};
    the residue coordinate is enumerated.
    """
    require_prime(p)
    require_prime(target_p)
    candidates = [Fraction(0), Fraction(1, p)]
    rational = [
        x for x in candidates
        if _is_p_power(x.denominator, target_p) and p * x * x == x and p ** (a + 1) * x == p ** a
    ]
    if not rational:
        return []
    return [(x, y) for x in rational for y in find_r_all(target_p ** b, p, a)]


def _is_p_power(d: int, p: int) -> bool:
    while d % p == 0:
        d //= p
    return d == 1


# -- cyclic rings ----------------------------------------------------------------

def count_cyclic_homs(m: int, n: int) -> int:
    """Number of unital ring maps ``Z/m -> Z/n``, found by trying every image of 1."""
    if m < 1 or n < 1:
        raise SolidError("moduli must be >= 1")
    count = 0
    for c in range(n):
        if c != 1 % n:
            continue
        # x -> c x is well defined on Z/m iff c (x + m) = c x, i.e. c m = 0
        if (c * m) % n == 0 and (c * c - c) % n == 0:
            count += 1
    return count


# -- coproducts of finite-support data -------------------------------------------

@dataclass(frozen=True)
class _SplitRing:
    """``Z[J^-1] x Z/n`` (or just ``Z/n`` when ``inverted`` is None)."""

    inverted: Optional[PrimeSet]
    n: int


def _split(s: SolidData) -> _SplitRing:
    if s.e.where(lambda v: 0 < v < INF).cofinite:
        raise SolidError("coproduct cross-check needs finitely many positive finite exponents")
    n = math.prod(p ** v for p, v in s.e.exceptions if 0 < v < INF)
    return _SplitRing(None if s.q == 1 else s.inverted, n)


def _strip(n: int, primes: PrimeSet) -> int:
    """``Z[A^-1] (x) Z/n``: drop the part of ``n`` supported on ``A``."""
    return math.prod(p ** k for p, k in factorize(n).items() if p not in primes)


def tensor_expand(a: SolidData, b: SolidData) -> SolidData:
    """Coproduct via the distributed four-term tensor product of the factors."""
    x, y = _split(a), _split(b)
    loc: Optional[PrimeSet] = None
    cyclics: list[int] = []
    if x.inverted is not None and y.inverted is not None:
        loc = x.inverted | y.inverted
    if x.inverted is not None:
        cyclics.append(_strip(y.n, x.inverted))
    if y.inverted is not None:
        cyclics.append(_strip(x.n, y.inverted))
    cyclics.append(math.gcd(x.n, y.n))
    cyclics = [c for c in cyclics if c > 1]
    n = math.prod(cyclics)
    if cyclics and math.lcm(*cyclics) != n:
        raise SolidError(f"cyclic factors {cyclics} are not coprime; the product is not solid")
    if loc is None:
        return SolidData.cyclic(n)
    bad = [p for p in factorize(n) if p not in loc]
    if bad:
        raise SolidError(f"torsion at {bad} is not inverted; the product is not solid")
    return SolidData(SolidData.localization(loc).e.combine(SolidData.cyclic(n).e, _merge), 0)


def _merge(loc_value, cyc_value):
    return cyc_value if cyc_value > 0 else loc_value


def coproduct_crosscheck(a: SolidData, b: SolidData) -> tuple[bool, SolidData, SolidData]:
    by_rule = coproduct([a, b])
    by_tensor = tensor_expand(a, b)
    return by_rule == by_tensor, by_rule, by_tensor
