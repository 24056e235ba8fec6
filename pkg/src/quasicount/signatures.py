"""Quasiplatonic signatures (n1, n2, n3) for cyclic actions and their genera."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .numtheory import divisors, lcm, valuation


class GenusError(ArithmeticError):
    """Riemann-Hurwitz produced a non-integral or too-small genus."""


class Signature(tuple):
    """Unordered period triple, stored sorted ascending."""

    __slots__ = ()

    def __new__(cls, *periods):
        if len(periods) == 1 and not isinstance(periods[0], int):
            periods = tuple(periods[0])
        if len(periods) != 3:
            raise ValueError(f"a signature has three periods, got {periods!r}")
        if any(not isinstance(p, int) or p < 1 for p in periods):
            raise ValueError(f"periods must be positive integers, got {periods!r}")
        return super().__new__(cls, sorted(periods))

    def __repr__(self):
        return f"Signature{tuple(self)}"

    def __str__(self):
        return "({},{},{})".format(*self)

    @property
    def periods(self) -> tuple[int, int, int]:
        return tuple(self)

    def multiplicities(self) -> list[int]:
        """Sorted multiplicities of the period multiset, e.g. [1, 2] for (4, 8, 8)."""
        return sorted(self.count(p) for p in set(self))


def is_admissible(n: int, sig) -> bool:
    """Divisibility, lcm and parity conditions for a (0; n1, n2, n3) action of C_n, plus hyperbolicity."""
    n1, n2, n3 = sorted(sig)
    if n < 2 or n1 < 2:
        return False
    if n % n1 or n % n2 or n % n3:
        return False
    if lcm(n1, n2) != n or lcm(n1, n3) != n or lcm(n2, n3) != n:
        return False
    if n % 2 == 0:
        top = 2 ** valuation(n, 2)
        if sum(1 for p in (n1, n2, n3) if p % top == 0) % 2:
            return False
    # genus >= 2 needs 1/n1 + 1/n2 + 1/n3 < 1
    return n2 * n3 + n1 * n3 + n1 * n2 < n1 * n2 * n3


def enumerate_signatures(n: int) -> list[Signature]:
    """Admissible signatures for C_n, lexicographic.

    Walks unordered divisor triples, so O(d(n)^3) in the worst case; pairs
    whose lcm is not already n are skipped before the inner loop.
    """
    if n < 2:
        return []
    divs = divisors(n)
    out = []
    for i, n1 in enumerate(divs):
        if n1 < 2:
            continue
        for j in range(i, len(divs)):
            n2 = divs[j]
            if n1 * n2 // gcd(n1, n2) != n:
                continue
            for n3 in divs[j:]:
                if is_admissible(n, (n1, n2, n3)):
                    out.append(Signature(n1, n2, n3))
    return out


def genus(n: int, sig) -> int:
    """Riemann-Hurwitz: 1 + (n/2)(1 - 1/n1 - 1/n2 - 1/n3), checked integral and >= 2."""
    n1, n2, n3 = sorted(sig)
    g = 1 + Fraction(n, 2) * (1 - Fraction(1, n1) - Fraction(1, n2) - Fraction(1, n3))
    if g.denominator != 1:
        raise GenusError(f"non-integral genus {g} for n={n}, signature {tuple(sig)}")
    if g < 2:
        raise GenusError(f"genus {g} < 2 for n={n}, signature {tuple(sig)}")
    return int(g)
