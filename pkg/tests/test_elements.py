from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from solidcore.errors import ParseError, RingMismatch, SolidError
from solidcore.foundations import INF, ExpFun, PrimeSet
from solidcore.elements import (
    ProductElementSpec,
    Tail,
    elem_add,
    elem_eq,
    elem_mul,
    elem_neg,
    in_core,
    make_element,
    parse_element,
    parse_product_element,
    residue,
)
from solidcore.soliddata import SolidData

E1 = SolidData(ExpFun(1), 0)
Q = SolidData(ExpFun(0), 0)
MIXED = SolidData(ExpFun(INF, {2: 3, 3: 0, 5: 2}), 0)  # Z[{2,3,5}^-1] x Z/8 x Z/25
P = PrimeSet.all_but()


def el(rat, devs=None, ring=E1):
    return make_element(ring, Fraction(rat), devs)


def test_construction_keeps_mandatory_residue():
    x = el(Fraction(1, 2), {2: 0})
    assert x.deviations == ((2, 0),)
    assert x.text() == "(1/2; 2=0)"


def test_normalization_drops_agreeing_residue():
    assert el(3, {5: 3}).deviations == ()
    assert el(3, {5: 8}).deviations == ()
    assert el(3, {2: 0}).deviations == ((2, 0),)


def test_rational_in_q():
    x = el(Fraction(1, 2), ring=Q)
    assert x.deviations == () and x.text() == "(1/2)"


@pytest.mark.parametrize(
    "ring, rat, devs",
    [
        (E1, Fraction(1, 2), {}),  # residue at 2 is mandatory
        (SolidData(ExpFun(INF), 0), Fraction(1, 2), {}),  # 2 is not inverted in Z
        (Q, 0, {2: 1}),  # Q has no residue components
        (MIXED, 0, {7: 1}),  # e(7) = inf
        (MIXED, 0, {3: 1}),  # e(3) = 0
        (SolidData.cyclic(12), 1, {}),  # q = 1
    ],
)
def test_make_element_errors(ring, rat, devs):
    with pytest.raises(SolidError):
        make_element(ring, rat, devs)


def test_add_and_mul_examples():
    x, y = el(Fraction(1, 2), {2: 0}), el(Fraction(1, 2), {2: 1})
    assert elem_add(x, y) == el(1)
    assert elem_mul(x, y) == el(Fraction(1, 4), {2: 0})
    assert elem_mul(x, el(1)) == x
    assert elem_neg(el(0, {2: 1})) == el(0, {2: 1})


def test_eq_examples():
    assert elem_eq(el(1), el(1))
    assert not elem_eq(el(0, {2: 1}), el(0))
    assert elem_eq(el(Fraction(2, 2)), el(1))
    with pytest.raises(RingMismatch):
        elem_eq(el(1), el(1, ring=Q))
    with pytest.raises(RingMismatch):
        elem_add(el(1), el(1, ring=Q))


def test_parse_element():
    assert parse_element("(1/2; 2=0)", E1) == el(Fraction(1, 2), {2: 0})
    assert parse_element("( -3 )", E1) == el(-3)
    assert parse_element("(0; 2=1, 3=2)", E1) == el(0, {2: 1, 3: 2})
    with pytest.raises(ParseError):
        parse_element("(1/0)", E1)
    with pytest.raises(ParseError):
        parse_element("(0; 4=1)", E1)
    with pytest.raises(ParseError):
        parse_element("(0; 2=1, 2=0)", E1)


def test_mixed_ring_arithmetic_by_hand():
    # e(5) = 2: the residue of 1/2 mod 25 is 13
    x = make_element(MIXED, Fraction(1, 2), {2: 5})
    assert x.at(5) == 13
    sq = x * x
    assert sq.rat == Fraction(1, 4)
    assert sq.at(2) == 25 % 8
    assert sq.at(5) == residue(Fraction(1, 4), 25)
    # e(3) = 0, so 1/3 needs no residue
    assert make_element(MIXED, Fraction(1, 3)).deviations == ()


# -- properties ---------------------------------------------------------------

small_primes = st.sampled_from([2, 3, 5, 7, 11])


@st.composite
def e1_elements(draw):
    den_primes = draw(st.lists(small_primes, max_size=2, unique=True))
    den = 1
    for p in den_primes:
        den *= p
    rat = Fraction(draw(st.integers(-30, 30)), den)
    devs = draw(st.dictionaries(small_primes, st.integers(0, 10), max_size=3))
    for p in den_primes:
        devs.setdefault(p, draw(st.integers(0, p - 1)))
    return make_element(E1, rat, devs)


@settings(max_examples=500)
@given(e1_elements(), e1_elements(), e1_elements())
def test_ring_axioms(x, y, z):
    zero, one = el(0), el(1)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + zero == x and x * one == x
    assert x + (-x) == zero
    assert x * zero == zero


@given(e1_elements())
def test_normal_form_is_stable(x):
    assert make_element(x.ring, x.rat, x.residues) == x
    assert parse_element(x.text(), E1) == x


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_integers_embed_as_a_ring_map(m, n):
    assert el(m) + el(n) == el(m + n)
    assert el(m) * el(n) == el(m * n)
    assert -el(m) == el(-m)


@given(e1_elements(), e1_elements())
def test_components_are_pointwise(x, y):
    s, t = x + y, x * y
    for p in [2, 3, 5, 7, 11, 13]:
        assert s.at(p) == (x.at(p) + y.at(p)) % p
        assert t.at(p) == (x.at(p) * y.at(p)) % p


# -- core membership ----------------------------------------------------------

@pytest.mark.parametrize(
    "j, e, text, expected",
    [
        (P, ExpFun(1), "(0; 2=1; tail=follow)", True),
        (P, ExpFun(1), "(0; tail=const:1)", False),
        (P, ExpFun(1), "(5; tail=const:5)", True),
        (P, ExpFun(1), "(1/2; 2=1)", True),
        # Z x Z/4: component must be the image of the integer
        (PrimeSet.of([]), ExpFun(0, {2: 2}), "(3; 2=3)", True),
        (PrimeSet.of([]), ExpFun(0, {2: 2}), "(3; 2=1)", False),
        # Z[1/2] x Z/4 is solid, every element is absolute
        (PrimeSet.of([2]), ExpFun(0, {2: 2}), "(3; 2=1)", True),
        # infinite product over all primes with only 2 inverted: deviation at 3 is fatal
        (PrimeSet.of([2]), ExpFun(1), "(0; 2=1)", True),
        (PrimeSet.of([2]), ExpFun(1), "(0; 3=1)", False),
        (PrimeSet.of([2]), ExpFun(1), "(0; tail=const:0)", True),
    ],
)
def test_in_core(j, e, text, expected):
    assert in_core(j, e, parse_product_element(text)) is expected


def test_in_core_preconditions():
    with pytest.raises(SolidError):
        in_core(P, ExpFun(INF), ProductElementSpec(Fraction(0)))
    with pytest.raises(SolidError):
        in_core(PrimeSet.of([]), ExpFun(1), ProductElementSpec(Fraction(1, 2)))
    with pytest.raises(SolidError):
        in_core(P, ExpFun(1), ProductElementSpec(Fraction(1, 2)))
    with pytest.raises(SolidError):
        in_core(P, ExpFun(1, {3: 0}), ProductElementSpec(Fraction(0), ((3, 1),)))


@given(
    st.dictionaries(small_primes, st.integers(0, 6), max_size=3),
    st.sampled_from([2, 3, 5, 7, 11, 13]),
    st.integers(-5, 5),
    st.booleans(),
)
def test_in_core_ignores_agreeing_exceptions(exc, extra, rat, follow):
    j, e = PrimeSet.of([2, 3]), ExpFun(1)
    tail = Tail.FOLLOW if follow else Tail.CONSTANT
    const = None if follow else rat
    base = ProductElementSpec(Fraction(rat), tuple(sorted(exc.items())), tail, const)
    padded = dict(exc)
    padded.setdefault(extra, rat % extra)
    more = ProductElementSpec(Fraction(rat), tuple(sorted(padded.items())), tail, const)
    assert in_core(j, e, base) == in_core(j, e, more)


def test_parse_product_element():
    spec = parse_product_element("(0; 2=1; tail=const:4)")
    assert spec == ProductElementSpec(Fraction(0), ((2, 1),), Tail.CONSTANT, 4)
    assert parse_product_element("(1/3)").tail is Tail.FOLLOW
    with pytest.raises(ParseError):
        parse_product_element("(0; tail=sometimes)")
