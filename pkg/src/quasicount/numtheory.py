"""Elementary number theory over exact integers.

Factorization, totients, divisors, the Legendre symbol (-3/p), and the two
congruence counts used by the T-value formulas:

* ``tau2(n)``: nonzero residues x mod n with x^2 + x + 1 = 0,
* ``tau1(m, d)``: nonzero residues x mod m with x^2 + 2x = 0 and gcd(x, m) = m/d.

Each count has a closed form and a brute-force ``*_oracle`` twin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from . import _kernels

__all__ = [
    "Factorization",
    "Rational",
    "factorize",
    "is_prime",
    "euler_phi",
    "divisors",
    "valuation",
    "legendre_minus_three",
    "tau2_closed",
    "tau2_oracle",
    "tau1_closed",
    "tau1_lemma",
    "tau1_oracle",
    "f_value",
    "lcm",
]

# Exact rationals: the stdlib type already reduces and never rounds.
Rational = Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


@dataclass(frozen=True)
class Factorization:
    value: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.parts]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 or not is_prime(p) for p, e in self.parts):
            raise ValueError(f"bad prime power in {self.parts}")
        if prod(p**e for p, e in self.parts) != self.value:
            raise ValueError("parts do not multiply to value")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.parts]

    @property
    def r(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.parts)

    def exponent(self, p: int) -> int:
        """Exponent of ``p``; 0 when ``p`` does not divide the value."""
        for q, e in self.parts:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.parts)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Prime-power decomposition by trial division, confirming large cofactors."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n!r}")
    parts = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            parts.append((p, e))
    p = 5
    while p * p <= m:
        if is_prime(m):
            break
        for q in (p, p + 2):
            if m % q == 0:
                e = 0
                while m % q == 0:
                    m //= q
                    e += 1
                parts.append((q, e))
        p += 6
    if m > 1:
        parts.append((m, 1))
    return Factorization(n, tuple(parts))


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n >= 1)."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    for p, _ in factorize(n).parts:
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=65536)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).parts:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def legendre_minus_three(p: int) -> int:
    """(-3/p) for an odd prime p: 1 if p = 1 mod 6, 0 if p = 3, else -1."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre_minus_three needs an odd prime, got {p}")
    if p == 3:
        return 0
    return 1 if p % 6 == 1 else -1


def _tau2_prime_power(p: int, a: int) -> int:
    if p == 3:
        return 1 if a == 1 else 0
    return 2 if p % 6 == 1 else 0


def tau2_closed(n: int) -> int:
    """Closed-form root count of x^2 + x + 1 mod odd n; tau2(1) is taken as 0."""
    if n < 1:
        raise ValueError(f"tau2 needs n >= 1, got {n}")
    if n % 2 == 0:
        raise ValueError(f"tau2_closed is defined for odd n only, got {n}")
    if n == 1:
        return 0
    return prod(_tau2_prime_power(p, a) for p, a in factorize(n).parts)


def tau2_oracle(n: int) -> int:
    """Count x in 1..n-1 with x^2 + x + 1 = 0 mod n by direct scan."""
    if n < 1:
        raise ValueError(f"tau2 needs n >= 1, got {n}")
    return _kernels.count_tau2(n)


def tau1_lemma(m: int, d: int) -> int:
    """The tau1 case table read literally.

    Write m = 2^k0 * prod p_i^k_i and d = 2^h0 * prod p_i^h_i. The count is 0
    unless h0 is in {0, 1, k0 - 1} and each odd h_i is 0 or k_i; it is then 1
    for h0 in {0, 1} and 2 otherwise. This overcounts two degenerate families
    that ``tau1_closed`` excludes.
    """
    if m < 1 or d < 1 or m % d:
        raise ValueError(f"tau1 needs a divisor d of m, got m={m}, d={d}")
    fm = factorize(m)
    k0 = fm.exponent(2)
    h0 = valuation(d, 2)
    allowed = {0, 1}
    if k0 >= 1:
        allowed.add(k0 - 1)
    if h0 not in allowed:
        return 0
    for p, k in fm.parts:
        if p != 2 and valuation(d, p) not in (0, k):
            return 0
    return 1 if h0 in (0, 1) else 2


def tau1_closed(m: int, d: int) -> int:
    """Closed-form tau1(m, d).

    Agrees with ``tau1_lemma`` except that it returns 0 when d = 1 (the only
    root with gcd(x, m) = m is x = 0, which is not counted) and when
    m = 2 mod 4 with d even (then x is odd, so x(x + 2) is odd).
    """
    value = tau1_lemma(m, d)
    if d == 1 or (m % 4 == 2 and d % 2 == 0):
        return 0
    return value


def tau1_oracle(m: int, d: int) -> int:
    """Count x in 1..m-1 with x^2 + 2x = 0 mod m and gcd(x, m) = m/d."""
    if m < 1 or d < 1 or m % d:
        raise ValueError(f"tau1 needs a divisor d of m, got m={m}, d={d}")
    return tau1_oracle_table(m).get(m // d, 0)


def tau1_oracle_table(m: int) -> dict[int, int]:
    """Map g -> number of roots x of x^2 + 2x mod m (1 <= x < m) with gcd(x, m) = g."""
    table: dict[int, int] = {}
    for x in _kernels.roots_x2_plus_2x(m):
        g = gcd(x, m)
        table[g] = table.get(g, 0) + 1
    return table


def f_value(p: int, k: int, a: int) -> int:
    """The bookkeeping function f(p^k) attached to the prime power p^a."""
    if a < 1 or not 0 <= k <= a:
        raise ValueError(f"need 0 <= k <= a with a >= 1, got k={k}, a={a}")
    if k == 0:
        return 1
    if k < a:
        return p ** (k - 1) * (p - 1)
    return p ** (a - 1) * (p - 2)


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out
