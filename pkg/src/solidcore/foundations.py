"""Exact integer machinery, prime sets and eventually constant exponent functions.

Extended naturals (``N u {inf}``) are plain Python ``int`` values plus the
float ``INF``; ordinary comparison, ``min`` and ``max`` then give the right
total order for free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Union

from .errors import NotPrimeError, ParseError
from .scan import Scanner

INF = math.inf
ExtNat = Union[int, float]

# Deterministic Miller-Rabin witnesses: correct for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


def check_extnat(value) -> ExtNat:
    if value == INF and isinstance(value, float):
        return INF
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"not an extended natural: {value!r}")
    return value


def format_extnat(value: ExtNat) -> str:
    return "inf" if value == INF else str(value)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_LIMIT:
        return _miller_rabin(n, _MR_BASES)
    # Miller's bound: every base below 2 ln(n)^2 (deterministic under GRH)
    bound = min(n - 1, int(2 * math.log(n) ** 2) + 1)
    return _miller_rabin(n, range(2, bound + 1))


def _miller_rabin(n: int, bases: Iterable[int]) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{p!r} is not prime")
    return p


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def vp(p: int, n: int) -> int:
    """Exponent of the prime ``p`` in ``n``."""
    require_prime(p)
    if n <= 0:
        raise ValueError("vp needs n >= 1; the valuation of 0 is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as an ascending ``{prime: exponent}`` dict."""
    if n <= 0:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    for f in (2, 3):
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
    f = 5
    cofactor_prime = is_prime(n)
    while n > 1 and f * f <= n and not cofactor_prime:
        for g in (f, f + 2):
            if n % g == 0:
                while n % g == 0:
                    out[g] = out.get(g, 0) + 1
                    n //= g
                cofactor_prime = is_prime(n)
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))


def lcm0(a: int, b: int) -> int:
    """lcm where 0 (characteristic zero) absorbs."""
    if a == 0 or b == 0:
        return 0
    return math.lcm(a, b)


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes, or the complement of one."""

    cofinite: bool
    exceptions: tuple[int, ...] = ()

    def __post_init__(self):
        ps = tuple(sorted(set(self.exceptions)))
        for p in ps:
            require_prime(p)
        object.__setattr__(self, "exceptions", ps)

    @classmethod
    def of(cls, primes: Iterable[int]) -> PrimeSet:
        return cls(False, tuple(primes))

    @classmethod
    def all_but(cls, primes: Iterable[int] = ()) -> PrimeSet:
        return cls(True, tuple(primes))

    @property
    def is_finite(self) -> bool:
        return not self.cofinite

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.exceptions

    @property
    def is_all(self) -> bool:
        return self.cofinite and not self.exceptions

    def __contains__(self, p: int) -> bool:
        return (p in self.exceptions) != self.cofinite

    def __iter__(self) -> Iterator[int]:
        if self.cofinite:
            raise ValueError("cannot iterate over a cofinite prime set")
        return iter(self.exceptions)

    def complement(self) -> PrimeSet:
        return PrimeSet(not self.cofinite, self.exceptions)

    def __or__(self, other: PrimeSet) -> PrimeSet:
        a, b = set(self.exceptions), set(other.exceptions)
        if not self.cofinite and not other.cofinite:
            return PrimeSet(False, tuple(a | b))
        if self.cofinite and other.cofinite:
            return PrimeSet(True, tuple(a & b))
        fin, cof = (a, b) if other.cofinite else (b, a)
        return PrimeSet(True, tuple(cof - fin))

    def __and__(self, other: PrimeSet) -> PrimeSet:
        return (self.complement() | other.complement()).complement()

    def __sub__(self, other: PrimeSet) -> PrimeSet:
        return self & other.complement()

    def text(self) -> str:
        body = ",".join(map(str, self.exceptions))
        if not self.cofinite:
            return "{" + body + "}"
        return "P" if not self.exceptions else "P\\{" + body + "}"

    __str__ = text


@dataclass(frozen=True, init=False)
class ExpFun:
    """Eventually constant map from primes to extended naturals.

    Stored in normal form: no exception equals the default, so dataclass
    equality is pointwise equality.
    """

    default: ExtNat
    exceptions: tuple[tuple[int, ExtNat], ...] = ()

    def __init__(self, default: ExtNat, exceptions: Mapping[int, ExtNat] | Iterable = ()):
        default = check_extnat(default)
        items = exceptions.items() if isinstance(exceptions, Mapping) else exceptions
        table: dict[int, ExtNat] = {}
        for p, v in items:
            require_prime(p)
            if p in table:
                raise ValueError(f"duplicate exception prime {p}")
            table[p] = check_extnat(v)
        norm = tuple((p, v) for p, v in sorted(table.items()) if v != default)
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "exceptions", norm)

    @classmethod
    def const(cls, value: ExtNat) -> ExpFun:
        return cls(value)

    def __call__(self, p: int) -> ExtNat:
        for q, v in self.exceptions:
            if q == p:
                return v
        return self.default

    @property
    def table(self) -> dict[int, ExtNat]:
        return dict(self.exceptions)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.exceptions)

    def sentinel(self, *others: ExpFun) -> int:
        """A prime outside every exception set, where all values are defaults."""
        keys = set(self.primes).union(*(o.primes for o in others))
        return next_prime(max(keys, default=1))

    def combine(self, other: ExpFun, op: Callable[[ExtNat, ExtNat], ExtNat]) -> ExpFun:
        keys = set(self.primes) | set(other.primes)
        return ExpFun(op(self.default, other.default), {p: op(self(p), other(p)) for p in keys})

    def map(self, f: Callable[[ExtNat], ExtNat]) -> ExpFun:
        return ExpFun(f(self.default), {p: f(v) for p, v in self.exceptions})

    def where(self, pred: Callable[[ExtNat], bool]) -> PrimeSet:
        """The set of primes at which ``pred`` holds."""
        if pred(self.default):
            return PrimeSet.all_but(p for p, v in self.exceptions if not pred(v))
        return PrimeSet.of(p for p, v in self.exceptions if pred(v))

    def restrict(self, primes: PrimeSet, off: ExtNat = 0) -> ExpFun:
        """Agree with ``self`` on ``primes`` and take the value ``off`` elsewhere."""
        if primes.is_finite:
            return ExpFun(off, {p: self(p) for p in primes.exceptions})
        table = {p: v for p, v in self.exceptions if p in primes}
        table.update((p, off) for p in primes.exceptions)
        return ExpFun(self.default, table)

    def dominates(self, other: ExpFun) -> bool:
        """Pointwise ``self >= other``."""
        if self.default < other.default:
            return False
        return all(self(p) >= other(p) for p in set(self.primes) | set(other.primes))

    def is_finite_valued(self) -> bool:
        return self.default != INF and all(v != INF for _, v in self.exceptions)

    def text(self) -> str:
        head = f"e(default={format_extnat(self.default)}"
        if not self.exceptions:
            return head + ")"
        body = ", ".join(f"{p}=>{format_extnat(v)}" for p, v in self.exceptions)
        return f"{head}; {body})"

    __str__ = text


def expfun_min(a: ExpFun, b: ExpFun) -> ExpFun:
    return a.combine(b, min)


def expfun_sup(family: Iterable[ExpFun]) -> ExpFun:
    family = list(family)
    if not family:
        raise ValueError("sup of an empty family")
    out = family[0]
    for f in family[1:]:
        out = out.combine(f, max)
    return out


def expfun_sup_indexed(index: PrimeSet, local: ExpFun) -> ExpFun:
    """Supremum of a family indexed by ``index`` whose member at ``p`` is
    ``local(p)`` at ``p`` and 0 at every other prime.

    Each member is supported at its own index prime, so the sup is just
    ``local`` restricted to ``index``.
    """
    return local.restrict(index, off=0)


def expfun_support_positive(e: ExpFun) -> PrimeSet:
    """``{p : e(p) > 0}``; infinite exactly when the default is positive."""
    return e.where(lambda v: v > 0)


# -- text forms -------------------------------------------------------------

def read_extnat(sc: Scanner) -> ExtNat:
    if sc.accept("inf"):
        return INF
    return sc.read_nat()


def read_expfun(sc: Scanner) -> ExpFun:
    sc.expect("e(")
    sc.expect("default")
    sc.expect("=")
    default = read_extnat(sc)
    table: dict[int, ExtNat] = {}
    if sc.accept(";"):
        while True:
            sc.skip_ws()
            start = sc.pos
            p = sc.read_prime()
            if p in table:
                raise sc.error(f"duplicate exception prime {p}", start)
            sc.expect("=>")
            table[p] = read_extnat(sc)
            if not sc.accept(","):
                break
    sc.expect(")")
    return ExpFun(default, table)


def read_primeset(sc: Scanner) -> PrimeSet:
    if sc.accept("P\\{"):
        return PrimeSet.all_but(_read_prime_list(sc))
    if sc.accept("{"):
        return PrimeSet.of(_read_prime_list(sc))
    if sc.accept("P"):
        return PrimeSet.all_but()
    raise sc.error("expected a prime set: P, {..} or P\\{..}")


def _read_prime_list(sc: Scanner) -> list[int]:
    out: list[int] = []
    if sc.accept("}"):
        return out
    while True:
        sc.skip_ws()
        start = sc.pos
        p = sc.read_prime()
        if p in out:
            raise sc.error(f"duplicate prime {p}", start)
        out.append(p)
        if sc.accept("}"):
            return out
        sc.expect(",")


def parse_expfun(text: str) -> ExpFun:
    sc = Scanner(text)
    e = read_expfun(sc)
    sc.finish()
    return e


def parse_primeset(text: str) -> PrimeSet:
    sc = Scanner(text)
    s = read_primeset(sc)
    sc.finish()
    return s


__all__ = [
    "INF", "ExtNat", "PrimeSet", "ExpFun", "ParseError",
    "is_prime", "require_prime", "next_prime", "primes_up_to", "vp", "factorize", "lcm0",
    "expfun_min", "expfun_sup", "expfun_sup_indexed", "expfun_support_positive",
    "format_extnat", "parse_expfun", "parse_primeset", "read_expfun", "read_primeset",
]
