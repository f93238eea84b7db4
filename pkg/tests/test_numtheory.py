import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_primitive_divisor, spf_sieve, trial_factor
from primegraph.numtheory import (
    FactoredInteger,
    cyclotomic_value,
    factor,
    is_prime,
    ratio_check_pairs,
    multiplicative_order,
    prime_power_part,
    prime_support,
    ratio_prime_power_check,
    zsigmondy,
)


@pytest.mark.parametrize("n, expected", [
    (1, {}),
    (63, {3: 2, 7: 1}),
    (2**24 + 1, {97: 1, 257: 1, 673: 1}),
    (4095, {3: 2, 5: 1, 7: 1, 13: 1}),
    (1025, {5: 2, 41: 1}),
])
def test_factor_examples(n, expected):
    assert trial_factor(n) == expected
    assert factor(n).factors == expected


def test_factor_rejects_zero_and_negative():
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(ValueError):
        factor(-5)
    with pytest.raises(TypeError):
        factor(2.0)


def test_factored_integer_invariants():
    with pytest.raises(ValueError):
        FactoredInteger(12, {2: 1, 3: 1})
    with pytest.raises(ValueError):
        FactoredInteger(0, {})
    assert str(factor(72)) == "2^3 * 3^2"
    assert factor(72).to_dict() == {"value": 72, "factors": {"2": 3, "3": 2}}


@pytest.mark.slow
def test_factor_matches_sieve_up_to_a_million():
    limit = 10**6
    spf = spf_sieve(limit)
    for n in range(2, limit + 1):
        expected = {}
        m = n
        while m > 1:
            p = int(spf[m])
            expected[p] = expected.get(p, 0) + 1
            m //= p
        assert factor(n).factors == expected, n


def test_factor_large_inputs_match_sympy():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.getrandbits(rng.randint(20, 80)) + 1
        assert factor(n).factors == sympy.factorint(n)
    for k in range(2, 64):
        for n in (2**k - 1, 2**k + 1):
            assert factor(n).factors == sympy.factorint(n)


def test_factor_is_deterministic():
    n = (2**59 - 1) * (2**31 - 1) * 1000003**2
    assert factor(n) == factor(n)
    assert factor(n).factors == sympy.factorint(n)


def test_is_prime_agrees_with_sympy():
    for n in range(5000):
        assert is_prime(n) == sympy.isprime(n)
    rng = random.Random(7)
    for _ in range(500):
        n = rng.getrandbits(rng.choice([40, 64, 90, 127]))
        assert is_prime(n) == sympy.isprime(n), n
    # strong pseudoprimes to several small bases
    for n in (3215031751, 3825123056546413051, 318665857834031151167461):
        assert not is_prime(n)
    for p in (2**61 - 1, 2**89 - 1, 2**107 - 1, 2**127 - 1):
        assert is_prime(p)


@pytest.mark.parametrize("n, expected", [(1, []), (65, [5, 13]), (30, [2, 3, 5])])
def test_prime_support(n, expected):
    assert prime_support(n) == expected


@pytest.mark.parametrize("n, expected", [(8, (2, 3)), (273, None), (29, (29, 1)), (2, (2, 1)), (3**7, (3, 7))])
def test_prime_power_part(n, expected):
    assert prime_power_part(n) == expected


@pytest.mark.parametrize("n", [0, 1, -4])
def test_prime_power_part_rejects_small(n):
    with pytest.raises(ValueError):
        prime_power_part(n)


@given(st.integers(min_value=2, max_value=10**12))
@settings(max_examples=300)
def test_prime_power_iff_single_prime(n):
    assert (prime_power_part(n) is not None) == (len(prime_support(n)) == 1)


def test_cyclotomic_values():
    x = sympy.Symbol("x")
    for n in range(1, 40):
        for a in (2, 3, 10):
            assert cyclotomic_value(n, a) == sympy.cyclotomic_poly(n, x).subs(x, a)


def test_multiplicative_order():
    assert multiplicative_order(2, 13) == 12
    assert multiplicative_order(10, 7) == 6
    with pytest.raises(ValueError):
        multiplicative_order(3, 3)


@pytest.mark.parametrize("a, n, expected", [(2, 6, None), (3, 2, None), (2, 12, 13), (7, 2, None), (2, 3, 7)])
def test_zsigmondy_examples(a, n, expected):
    assert zsigmondy(a, n) == expected


def test_zsigmondy_brute_force_grid():
    for a in range(2, 11):
        for n in range(2, 21):
            exceptional = (a, n) == (2, 6) or (n == 2 and (a + 1) & a == 0)
            got = zsigmondy(a, n)
            assert (got is None) == exceptional, (a, n)
            assert got == brute_primitive_divisor(a, n, sympy.factorint), (a, n)


@pytest.mark.parametrize("a, n", [(1, 5), (2, 1), (0, 0)])
def test_zsigmondy_rejects(a, n):
    with pytest.raises(ValueError):
        zsigmondy(a, n)


def test_zsigmondy_larger_exponents_are_primitive():
    for n in range(2, 121):
        p = zsigmondy(2, n)
        if n == 6:
            assert p is None
            continue
        assert (2**n - 1) % p == 0
        assert all((2**m - 1) % p for m in range(1, n))


def test_ratio_examples():
    r = ratio_prime_power_check(6, 2)
    assert r.ratio.value == 273 and r.ratio.factors == {3: 1, 7: 1, 13: 1}
    assert not r.is_prime_power
    r = ratio_prime_power_check(9, 3)
    assert r.ratio.value == (2**18 - 1) // (2**6 - 1) == 4161
    assert r.ratio.factors == {3: 1, 19: 1, 73: 1}
    assert not r.is_prime_power


@pytest.mark.parametrize("f, b", [(6, 3), (4, 1), (12, 5), (12, 3), (8, 2), (6, 0)])
def test_ratio_rejects_bad_preconditions(f, b):
    with pytest.raises(ValueError):
        ratio_prime_power_check(f, b)


def test_ratio_pairs_enumeration():
    pairs = ratio_check_pairs(12)
    assert pairs == [(6, 2), (7, 1), (9, 3), (10, 2), (11, 1), (12, 4)]
    assert all(f // b >= 3 and sympy.isprime(f // b) for f, b in ratio_check_pairs(60))


def test_ratio_never_prime_power_up_to_60():
    pairs = ratio_check_pairs(60)
    assert len(pairs) == 64
    for f, b in pairs:
        res = ratio_prime_power_check(f, b)
        assert not res.is_prime_power, (f, b)
        assert res.ratio.factors == sympy.factorint(res.ratio.value)
