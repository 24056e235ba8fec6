"""Brute-force ground truth by enumerating generating vectors of Z/nZ.

Two triples are equivalent when one maps to the other by multiplying every
entry by a unit and permuting positions. ``qc_oracle`` counts these classes
and shares nothing with the T-value formulas beyond the signature list.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations, product
from math import gcd

from . import _kernels
from .signatures import Signature, enumerate_signatures, is_admissible

DEFAULT_ORACLE_MAX = 2000


class OracleBoundError(ValueError):
    pass


def oracle_max() -> int:
    """Largest n the oracle accepts; ``QUASICOUNT_ORACLE_MAX`` overrides."""
    raw = os.environ.get("QUASICOUNT_ORACLE_MAX")
    if raw is None:
        return DEFAULT_ORACLE_MAX
    try:
        value = int(raw)
    except ValueError:
        raise OracleBoundError(f"QUASICOUNT_ORACLE_MAX must be an integer, got {raw!r}") from None
    if value < 1:
        raise OracleBoundError(f"QUASICOUNT_ORACLE_MAX must be >= 1, got {value}")
    return value


def _check_bound(n: int) -> None:
    if n < 1:
        raise ValueError(f"oracle needs n >= 1, got {n}")
    bound = oracle_max()
    if n > bound:
        raise OracleBoundError(f"n={n} exceeds the oracle bound {bound}")


def units(n: int) -> list[int]:
    return [u for u in range(n) if gcd(u, n) == 1] if n > 1 else [0]


def element_order(x: int, n: int) -> int:
    return n // gcd(x, n)


@dataclass(frozen=True)
class GeneratingTriple:
    entries: tuple[int, int, int]
    modulus: int

    def orders(self) -> tuple[int, int, int]:
        return tuple(element_order(x, self.modulus) for x in self.entries)

    def is_valid_for(self, sig) -> bool:
        n = self.modulus
        os_ = self.orders()
        lcm_all = os_[0]
        for o in os_[1:]:
            lcm_all = lcm_all * o // gcd(lcm_all, o)
        return (sum(self.entries) % n == 0 and sorted(os_) == sorted(sig)
                and lcm_all == n)


@dataclass(frozen=True)
class OrbitClass:
    canonical: GeneratingTriple
    size: int


def enumerate_triples(n: int, sig) -> list[GeneratingTriple]:
    """Every generating triple of Z/nZ whose order multiset is ``sig``."""
    _check_bound(n)
    sig = Signature(sig)
    if not is_admissible(n, sig):
        raise ValueError(f"signature {sig} is not admissible for n={n}")
    return [GeneratingTriple(t, n) for t in _kernels.triples(n, tuple(sig))]


def orbit_classes(n: int, sig) -> list[OrbitClass]:
    _check_bound(n)
    sig = Signature(sig)
    if not is_admissible(n, sig):
        raise ValueError(f"signature {sig} is not admissible for n={n}")
    return [OrbitClass(GeneratingTriple((x, y, z), n), size)
            for x, y, z, size in _kernels.triple_orbits(n, tuple(sig), units(n))]


def count_classes(n: int, sig) -> int:
    """Inequivalent generating triples for one signature."""
    return len(orbit_classes(n, sig))


def qc_oracle(n: int) -> int:
    _check_bound(n)
    return sum(count_classes(n, s) for s in enumerate_signatures(n))


def burnside_count(n: int, sig) -> int:
    """Orbit count of the same action via Burnside's lemma (fixed points per group element)."""
    _check_bound(n)
    triples = [t.entries for t in enumerate_triples(n, sig)]
    us = units(n)
    fixed = 0
    for u in us:
        for perm in permutations(range(3)):
            for t in triples:
                if all(t[perm[i]] == t[i] * u % n for i in range(3)):
                    fixed += 1
    group_order = len(us) * 6
    if fixed % group_order:
        raise ArithmeticError(f"Burnside sum {fixed} not divisible by {group_order}")
    return fixed // group_order


def dessin_pairs_oracle(n: int) -> int:
    """Orbits of (s0, s1) with gcd(s0, s1, n) = 1 under simultaneous unit scaling."""
    _check_bound(n)
    return _kernels.pair_orbit_count(n, units(n))


def prime_tuple_classes(p: int, rho: int) -> int:
    """Classes of rho-tuples of nonzero residues mod p summing to 0, under units x S_rho.

    For prime p every nonzero entry has order p, so these are the
    (0; p, ..., p) generating vectors of C_p.
    """
    _check_bound(p)
    seen = set()
    count = 0
    us = units(p)
    for head in product(range(1, p), repeat=rho - 1):
        last = -sum(head) % p
        if last == 0:
            continue
        t = (*head, last)
        key = tuple(sorted(t))
        if key in seen:
            continue
        count += 1
        for u in us:
            seen.add(tuple(sorted(x * u % p for x in t)))
    return count
