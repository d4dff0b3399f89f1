import math

import pytest
from hypothesis import given, strategies as st

from solidcore.errors import NotPrimeError, ParseError
from solidcore.foundations import (
    INF,
    ExpFun,
    PrimeSet,
    expfun_min,
    expfun_sup,
    expfun_sup_indexed,
    expfun_support_positive,
    factorize,
    is_prime,
    next_prime,
    parse_expfun,
    parse_primeset,
    primes_up_to,
    vp,
)
from strategies import SMALL_PRIMES, expfuns, primesets

PRIMES_100 = primes_up_to(100)


def probe_primes(*fs):
    """Exception primes of every argument plus one fresh prime."""
    keys = set()
    for f in fs:
        keys |= set(f.primes)
    return sorted(keys) + [next_prime(max(keys, default=1))]


@pytest.mark.parametrize("p, n, k", [(2, 12, 2), (5, 12, 0), (3, 81, 4), (7, 7**5 * 6, 5)])
def test_vp(p, n, k):
    assert vp(p, n) == k


def test_vp_rejects_zero_and_composites():
    with pytest.raises(ValueError):
        vp(2, 0)
    with pytest.raises(NotPrimeError):
        vp(4, 8)


@given(
    st.sampled_from([p for p in PRIMES_100]),
    st.integers(0, 10),
    st.integers(1, 10**6),
)
def test_vp_of_prime_power_times_coprime(p, k, m):
    if m % p == 0:
        m += 1 if (m + 1) % p else 2
    assert vp(p, p**k * m) == k


@pytest.mark.parametrize("n, expected", [(12, {2: 2, 3: 1}), (1, {}), (97, {97: 1}), (2**61 - 1, {2**61 - 1: 1})])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


@given(st.integers(1, 10**9))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert math.prod(p**k for p, k in f.items()) == n
    assert all(is_prime(p) for p in f)
    assert list(f) == sorted(f)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime_matches_sieve():
    sieve = [True] * 5000
    sieve[0] = sieve[1] = False
    for i in range(2, 71):
        if sieve[i]:
            for j in range(i * i, 5000, i):
                sieve[j] = False
    assert [n for n in range(5000) if is_prime(n)] == [n for n in range(5000) if sieve[n]]


def test_is_prime_large():
    assert is_prime(2**89 - 1)
    assert not is_prime((2**31 - 1) * (2**61 - 1))
    # strong pseudoprime to bases 2..37, caught by base 41
    assert not is_prime(3825123056546413051)


# -- prime sets ------------------------------------------------------------------

def test_primeset_text_forms():
    assert PrimeSet.all_but().text() == "P"
    assert PrimeSet.of([5, 2, 3]).text() == "{2,3,5}"
    assert PrimeSet.all_but([3, 2]).text() == "P\\{2,3}"
    assert PrimeSet.of([]).text() == "{}"


@pytest.mark.parametrize("text", ["P", "{2,3,5}", "P\\{2,3}", "{}"])
def test_primeset_roundtrip(text):
    assert parse_primeset(text).text() == text


def test_primeset_rejects_composites():
    with pytest.raises(NotPrimeError):
        PrimeSet.of([4])
    with pytest.raises(ParseError):
        parse_primeset("{2,9}")


@given(primesets, primesets)
def test_primeset_boolean_ops_pointwise(a, b):
    for p in SMALL_PRIMES + [37, 41]:
        assert (p in (a | b)) == (p in a or p in b)
        assert (p in (a & b)) == (p in a and p in b)
        assert (p in (a - b)) == (p in a and p not in b)
        assert (p in a.complement()) == (p not in a)


# -- exponent functions --------------------------------------------------------

def brute_pointwise(op, *fs):
    primes = probe_primes(*fs)
    return {p: op(f(p) for f in fs) for p in primes}


def test_expfun_normal_form_drops_default_valued_exceptions():
    assert ExpFun(0, {2: 0, 3: 1}) == ExpFun(0, {3: 1})
    assert ExpFun(0, {2: 0}).exceptions == ()


def test_expfun_text():
    assert ExpFun(0, {5: INF, 2: 3}).text() == "e(default=0; 2=>3, 5=>inf)"
    assert ExpFun(INF).text() == "e(default=inf)"
    assert parse_expfun("e(default=0; 2=>3, 5=>inf)") == ExpFun(0, {2: 3, 5: INF})
    assert parse_expfun("e( default = 1 ;3=>0 )") == ExpFun(1, {3: 0})


@pytest.mark.parametrize("text", ["e(default=0; 4=>1)", "e(default=0; 2=>1, 2=>3)", "e(default=-1)", "e(default=0"])
def test_expfun_parse_errors(text):
    with pytest.raises(ParseError):
        parse_expfun(text)


@given(expfuns())
def test_expfun_text_roundtrip(e):
    assert parse_expfun(e.text()) == e


def test_min_examples():
    assert expfun_min(ExpFun(0), ExpFun(INF)) == ExpFun(0)
    a, b = ExpFun(0, {2: 2, 3: 1}), ExpFun(0, {2: 3})
    expected = brute_pointwise(min, a, b)
    # b(3) = 0, so the 3-exponent of a is absorbed
    assert expected == {2: 2, 3: 0, 5: 0}
    assert expfun_min(a, b) == ExpFun(0, {2: 2})
    assert expfun_min(a, a) == a


def test_sup_examples():
    assert expfun_sup([ExpFun(INF), ExpFun(0, {2: 1})]) == ExpFun(INF)
    a, b = ExpFun(0, {2: 1}), ExpFun(0, {3: 1})
    assert brute_pointwise(max, a, b) == {2: 1, 3: 1, 5: 0}
    assert expfun_sup([a, b]) == ExpFun(0, {2: 1, 3: 1})
    assert expfun_sup([a]) == a
    with pytest.raises(ValueError):
        expfun_sup([])


def test_sup_indexed_matches_finite_sup():
    local = ExpFun(1, {3: 2})
    index = PrimeSet.of([2, 3, 7])
    members = [ExpFun(0, {p: local(p)}) for p in index]
    assert expfun_sup_indexed(index, local) == expfun_sup(members)
    assert expfun_sup_indexed(PrimeSet.all_but([5]), local) == ExpFun(1, {3: 2, 5: 0})


def test_support_positive():
    assert expfun_support_positive(ExpFun(0, {2: 3})) == PrimeSet.of([2])
    assert not expfun_support_positive(ExpFun(1)).is_finite
    assert not expfun_support_positive(ExpFun(INF, {2: 0})).is_finite


@given(expfuns(), expfuns())
def test_equality_is_pointwise(a, b):
    pointwise = all(a(p) == b(p) for p in probe_primes(a, b))
    assert (a == b) == pointwise


@given(expfuns(), expfuns(), expfuns())
def test_lattice_laws(a, b, c):
    for op, comb in ((expfun_min, min), (lambda x, y: expfun_sup([x, y]), max)):
        assert op(a, b) == op(b, a)
        assert op(op(a, b), c) == op(a, op(b, c))
        assert op(a, a) == a
        r = op(a, b)
        for p in probe_primes(a, b):
            assert r(p) == comb(a(p), b(p))


@given(expfuns(), primesets)
def test_restrict_pointwise(e, s):
    r = e.restrict(s, off=7)
    for p in SMALL_PRIMES + [37]:
        assert r(p) == (e(p) if p in s else 7)


def test_expfun_rejects_bad_values():
    with pytest.raises(ValueError):
        ExpFun(-1)
    with pytest.raises(NotPrimeError):
        ExpFun(0, {6: 1})
    with pytest.raises(ValueError):
        ExpFun(1.5)
