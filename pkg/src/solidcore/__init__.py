"""Exact computations with solid commutative rings and ring cores."""

from .core import CoreResult, core, hom_exists, min_exponent
from .elements import ProductElementSpec, SolidElement, Tail, in_core, make_element
from .errors import (
    EnumerationTooLarge,
    InvalidSolidData,
    NotPrimeError,
    ParseError,
    RingMismatch,
    SolidError,
    TorsionIsWholeRing,
)
from .foundations import (
    INF,
    ExpFun,
    PrimeSet,
    expfun_min,
    expfun_sup,
    expfun_support_positive,
    factorize,
    is_prime,
    parse_expfun,
    parse_primeset,
    vp,
)
from .ringexpr import RingExpr, normalize, parse, print_expr
from .soliddata import (
    SolidData,
    SolidType,
    colimit_bound,
    coproduct,
    iso,
    limit_sup,
    make_solid,
    parse_solid,
)

__version__ = "0.1.0"
