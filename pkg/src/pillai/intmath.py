"""Exact integer primitives used throughout the package.

Python ints are arbitrary precision, so no wrapper type is needed; every
function here works on plain ints and never touches floating point.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterator, NamedTuple


class PowerDecomposition(NamedTuple):
    base: int
    exponent: int


class Pm1Index(NamedTuple):
    """Least exponent n with b**n = +-1 mod p, and the p-part it pins down.

    ``sign`` is +1 or -1 and ``g`` is maximal with p**g dividing b**n + sign
    exactly (the sign is the one that maximizes g).
    """

    n: int
    g: int
    sign: int


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0, by integer Newton iteration."""
    if n < 0:
        raise ValueError("iroot requires n >= 0")
    if k < 1:
        raise ValueError("iroot requires k >= 1")
    if k == 1 or n < 2:
        return n
    # start strictly above the root
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _small_primes(limit: int) -> Iterator[int]:
    """Primes <= limit (limit is tiny here: at most a bit length)."""
    if limit >= 2:
        yield 2
    p = 3
    while p <= limit:
        if all(p % q for q in range(3, isqrt(p) + 1, 2)):
            yield p
        p += 2


def is_perfect_power(n: int) -> PowerDecomposition:
    """Maximal decomposition n = base**exponent (exponent 1 iff n is no power).

    Maximality of the exponent implies the returned base is itself not a
    perfect power.
    """
    if n <= 1:
        raise ValueError("perfect-power decomposition requires n >= 2")
    base, exponent = n, 1
    for p in _small_primes(base.bit_length()):
        while True:
            r = iroot(base, p)
            if r >= 2 and r**p == base:
                base, exponent = r, exponent * p
            else:
                break
    return PowerDecomposition(base, exponent)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def prime_factors(n: int) -> list[tuple[int, int]]:
    """(prime, multiplicity) pairs of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("prime_factors requires n >= 1")
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            e += 1
            n //= d
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def padic_valuation(p: int, n: int) -> int:
    """Largest t with p**t dividing n (p prime, n nonzero)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    t = 0
    while n % p == 0:
        t += 1
        n //= p
    return t


def multiplicative_order(b: int, p: int) -> int:
    """Order of b in the multiplicative group mod a prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if b % p == 0:
        raise ValueError("b must be prime to p")
    d = p - 1
    for q, _ in prime_factors(p - 1):
        while d % q == 0 and pow(b, d // q, p) == 1:
            d //= q
    return d


def _valuation_of_shifted_power(b: int, n: int, p: int, sign: int) -> int:
    """v_p(b**n + sign) without forming b**n, via modular lifting."""
    g = 0
    while True:
        mod = p ** (g + 1)
        if (pow(b, n, mod) + sign) % mod == 0:
            g += 1
        else:
            return g


def pm1_index(b: int, p: int) -> Pm1Index:
    """Least n >= 1 with b**n = +-1 (mod p), plus the exact p-part of b**n +- 1.

    Uses the multiplicative order: for odd p the least such n is the order d
    when d is odd (hitting +1), and d/2 when d is even (which necessarily
    hits -1).  p = 2 is the conventional special case: n = 1 and g reads the
    2-part of b - 1 or b + 1, whichever is larger.
    """
    if b <= 1:
        raise ValueError("pm1_index requires b > 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if b % p == 0:
        raise ValueError("p must not divide b")
    if p == 2:
        g_plus = padic_valuation(2, b + 1)
        g_minus = padic_valuation(2, b - 1)
        if g_plus >= g_minus:
            return Pm1Index(1, g_plus, +1)
        return Pm1Index(1, g_minus, -1)
    d = multiplicative_order(b, p)
    if d % 2 == 0:
        n = d // 2
        assert pow(b, n, p) == p - 1
        return Pm1Index(n, _valuation_of_shifted_power(b, n, p, +1), +1)
    return Pm1Index(d, _valuation_of_shifted_power(b, d, p, -1), -1)
