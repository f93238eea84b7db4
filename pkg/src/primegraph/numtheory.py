"""Exact integer arithmetic: factorization, prime supports and primitive prime divisors."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt
from typing import Optional

TRIAL_LIMIT = 1_000_000
_RHO_SEED = 0x5EED

# Miller-Rabin with these bases is deterministic below 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorization."""

    value: int
    factors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"value must be positive, got {self.value}")
        product = 1
        for p, e in self.factors.items():
            if e < 1:
                raise ValueError(f"exponent of {p} must be positive, got {e}")
            product *= p**e
        if product != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def primes(self) -> list[int]:
        return sorted(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for p in self.primes:
            e = self.factors[p]
            parts.append(str(p) if e == 1 else f"{p}^{e}")
        return " * ".join(parts)

    def to_dict(self) -> dict:
        return {"value": self.value, "factors": {str(p): self.factors[p] for p in self.primes}}


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(TRIAL_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, TRIAL_LIMIT + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameter choice; n is odd, > 2 and not a perfect square.
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x: int) -> int:
        return (x + n) // 2 % n if x % 2 else x // 2 % n

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality test; deterministic below 3.3e24, Baillie-PSW beyond that."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if n < _MR_DETERMINISTIC_LIMIT:
        return _miller_rabin(n, _MR_BASES)
    if isqrt(n) ** 2 == n:
        return False
    return _miller_rabin(n, (2,)) and _strong_lucas(n)


def _brent_rho(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batched product overshot; back up one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int], rng: random.Random) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _brent_rho(m, rng)
        stack.extend((d, m // d))


def factor(n: int) -> FactoredInteger:
    """Fully factor a positive integer.

    Trial division by primes below 10**6, then Brent's rho with a fixed
    seed, so the result never depends on global random state.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"factor requires n >= 1, got {n}")
    factors: dict[int, int] = {}
    m = n
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors[p] = e
    if m > 1:
        if m < TRIAL_LIMIT * TRIAL_LIMIT:
            factors[m] = factors.get(m, 0) + 1
        else:
            _split_large(m, factors, random.Random(_RHO_SEED))
    return FactoredInteger(n, dict(sorted(factors.items())))


def prime_support(n: int) -> list[int]:
    """pi(n): the sorted list of primes dividing n (empty for n = 1)."""
    return factor(n).primes


def prime_power_part(n: int) -> Optional[tuple[int, int]]:
    """Return ``(p, k)`` with ``n == p**k`` or None when n is not a prime power."""
    if n < 2:
        raise ValueError(f"prime_power_part requires n >= 2, got {n}")
    fac = factor(n)
    if len(fac.factors) != 1:
        return None
    ((p, k),) = fac.factors.items()
    return p, k


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factor(n).factors.items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def _mobius(n: int) -> int:
    fac = factor(n).factors
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def cyclotomic_value(n: int, a: int) -> int:
    """Phi_n(a), computed as the Mobius product of a**d - 1 over d | n."""
    num, den = 1, 1
    for d in _divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    return num // den


def multiplicative_order(a: int, p: int) -> int:
    if gcd(a, p) != 1:
        raise ValueError(f"{a} is not a unit modulo {p}")
    for d in _divisors(p - 1):
        if pow(a, d, p) == 1:
            return d
    raise AssertionError("unreachable")  # pragma: no cover


def zsigmondy(a: int, n: int) -> Optional[int]:
    """Smallest primitive prime divisor of a**n - 1, or None if none exists.

    Primitive divisors all divide Phi_n(a), so only that factor is split.
    The returned prime is re-checked against every a**m - 1 with m < n.
    """
    if a < 2 or n < 2:
        raise ValueError(f"zsigmondy requires a >= 2 and n >= 2, got a={a}, n={n}")
    for p in factor(cyclotomic_value(n, a)).primes:
        if a % p == 0 or multiplicative_order(a, p) != n:
            continue
        if any(pow(a, m, p) == 1 for m in range(1, n)):  # pragma: no cover
            raise AssertionError(f"{p} is not primitive for ({a}, {n})")
        if pow(a, n, p) != 1:  # pragma: no cover
            raise AssertionError(f"{p} does not divide {a}^{n} - 1")
        return p
    return None


@dataclass(frozen=True)
class RatioCheck:
    f: int
    b: int
    ratio: FactoredInteger
    is_prime_power: bool


def ratio_prime_power_check(f: int, b: int) -> RatioCheck:
    """Factor (2**(2f) - 1) / (2**(2b) - 1) for f = n*b with n an odd prime.

    The ratio is computed and tested, never assumed to be a non-prime-power.
    """
    if b < 1 or f < 6:
        raise ValueError(f"need f >= 6 and b >= 1, got f={f}, b={b}")
    if f % b:
        raise ValueError(f"b={b} does not divide f={f}")
    n = f // b
    if n == 2 or not is_prime(n):
        raise ValueError(f"f/b = {n} must be a prime >= 3")
    ratio = factor((2 ** (2 * f) - 1) // (2 ** (2 * b) - 1))
    return RatioCheck(f, b, ratio, len(ratio.factors) == 1)


def ratio_check_pairs(max_f: int) -> list[tuple[int, int]]:
    """All (f, b) with 6 <= f <= max_f and f/b an odd prime."""
    pairs = []
    for f in range(6, max_f + 1):
        for b in range(1, f + 1):
            if f % b == 0 and f // b > 2 and is_prime(f // b):
                pairs.append((f, b))
    return pairs
