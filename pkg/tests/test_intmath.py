import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pillai.intmath import (
    Pm1Index,
    iroot,
    is_perfect_power,
    is_prime,
    multiplicative_order,
    padic_valuation,
    pm1_index,
    prime_factors,
)

PRIMES_BELOW_1000 = [p for p in range(2, 1000) if is_prime(p)]


def brute_pm1_index(b: int, p: int) -> Pm1Index:
    """Direct scan oracle: least n with b**n = +-1 mod p, then big-int
    valuations of b**n - 1 and b**n + 1."""
    n = 1
    while True:
        residue = pow(b, n, p)
        if residue == 1 % p or residue == (p - 1) % p:
            break
        n += 1
    g_plus = padic_valuation(p, b**n + 1)
    g_minus = padic_valuation(p, b**n - 1)
    if g_plus >= g_minus:
        return Pm1Index(n, g_plus, +1)
    return Pm1Index(n, g_minus, -1)


class TestIroot:
    def test_exact_roots(self):
        assert iroot(27, 3) == 3
        assert iroot(28, 3) == 3
        assert iroot(26, 3) == 2
        assert iroot(1, 5) == 1
        assert iroot(0, 2) == 0

    @given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=1, max_value=40))
    @settings(max_examples=200, deadline=None)
    def test_floor_property(self, n, k):
        r = iroot(n, k)
        assert r**k <= n < (r + 1) ** k

    def test_errors(self):
        with pytest.raises(ValueError):
            iroot(-1, 2)
        with pytest.raises(ValueError):
            iroot(4, 0)


class TestPerfectPower:
    def test_examples(self):
        assert is_perfect_power(8) == (2, 3)
        assert is_perfect_power(36) == (6, 2)
        assert is_perfect_power(7) == (7, 1)
        assert is_perfect_power(64) == (2, 6)
        assert is_perfect_power(2**30) == (2, 30)

    def test_exhaustive_to_ten_thousand(self):
        for n in range(2, 10**4 + 1):
            base, exponent = is_perfect_power(n)
            assert base**exponent == n
            assert is_perfect_power(base).exponent == 1

    def test_large_input(self):
        n = (10**6 + 3) ** 12
        assert is_perfect_power(n) == (10**6 + 3, 12)

    def test_errors(self):
        for bad in (1, 0, -4):
            with pytest.raises(ValueError):
                is_perfect_power(bad)


class TestPadicValuation:
    def test_examples(self):
        assert padic_valuation(2, 8) == 3
        assert padic_valuation(3, 9) == 2
        assert padic_valuation(5, 7) == 0

    def test_negative_argument(self):
        assert padic_valuation(2, -48) == 4

    def test_division_definition(self):
        for p in (2, 3, 7):
            for n in range(1, 300):
                t = padic_valuation(p, n)
                assert n % p**t == 0 and n % p ** (t + 1) != 0

    def test_errors(self):
        with pytest.raises(ValueError):
            padic_valuation(4, 8)
        with pytest.raises(ValueError):
            padic_valuation(2, 0)


class TestPrimeFactors:
    def test_examples(self):
        assert prime_factors(1) == []
        assert prime_factors(12) == [(2, 2), (3, 1)]
        assert prime_factors(56744) == [(2, 3), (41, 1), (173, 1)]

    def test_reconstruction(self):
        for n in range(1, 2000):
            prod = 1
            for p, e in prime_factors(n):
                assert is_prime(p)
                prod *= p**e
            assert prod == n


class TestMultiplicativeOrder:
    def test_against_scan(self):
        for p in PRIMES_BELOW_1000[:30]:
            for b in range(2, min(p, 12)):
                d = multiplicative_order(b, p)
                assert pow(b, d, p) == 1
                assert all(pow(b, k, p) != 1 for k in range(1, d))

    def test_errors(self):
        with pytest.raises(ValueError):
            multiplicative_order(3, 9)
        with pytest.raises(ValueError):
            multiplicative_order(10, 5)


class TestPm1Index:
    def test_examples(self):
        assert pm1_index(2, 5) == (2, 1, +1)
        assert pm1_index(2, 3) == (1, 1, +1)
        assert pm1_index(3, 2) == (1, 2, +1)

    def test_oracle_agreement(self):
        for p in PRIMES_BELOW_1000:
            for b in (2, 3, 5, 10, 56744 % p if 56744 % p > 1 else 2):
                if b % p == 0 or b <= 1:
                    continue
                assert pm1_index(b, p) == brute_pm1_index(b, p)

    def test_exact_division_and_minimality(self):
        for p in PRIMES_BELOW_1000[:40]:
            for b in range(2, 14):
                if b % p == 0:
                    continue
                n, g, sign = pm1_index(b, p)
                value = b**n + sign
                assert value % p**g == 0
                assert value % p ** (g + 1) != 0
                for m in range(1, n):
                    assert pow(b, m, p) not in (1 % p, p - 1)

    def test_errors(self):
        with pytest.raises(ValueError):
            pm1_index(10, 5)
        with pytest.raises(ValueError):
            pm1_index(3, 4)
        with pytest.raises(ValueError):
            pm1_index(1, 5)
