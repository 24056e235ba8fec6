"""Identity checks: the seven recursions, the oracle sweep, the corollary table, Lloyd.

Failures are collected as report entries; nothing here raises on a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .actions import corollary_constant, in_closed_domain, qc_sum, r_cyclic
from .numtheory import factorize, is_prime


@dataclass(frozen=True)
class Check:
    suite: str
    label: str
    instance: str
    lhs: Fraction | int
    rhs: Fraction | int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class SuiteReport:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, list[int]]:
        """label -> [passed, total]"""
        out: dict[str, list[int]] = {}
        for c in self.checks:
            entry = out.setdefault(c.label, [0, 0])
            entry[0] += c.passed
            entry[1] += 1
        return out


def _odd_primes(limit: int) -> list[int]:
    return [p for p in range(3, limit + 1, 2) if is_prime(p)]


def _prime_powers_coprime(m: int, limit: int, primes) -> list[tuple[int, int]]:
    """(q, b) with q in ``primes``, q not dividing m, and m * q^b <= limit."""
    out = []
    for q in primes:
        if m % q == 0:
            continue
        qb, b = q, 1
        if m * qb > limit:
            break
        while m * qb <= limit:
            out.append((q, b))
            qb *= q
            b += 1
    return out


def _lift(q: int, b: int) -> int:
    """q^(b-1) (q + 1)"""
    return q ** (b - 1) * (q + 1)


def verify_recursions(n_max: int) -> SuiteReport:
    """Evaluate every instance of the seven recursions with both sides' arguments <= n_max.

    An instance counts only when its smaller QC argument lies in the domain of
    the closed forms (even >= 8, odd >= 5). Below it the small cases break the
    identities: QC(6) = 1 excludes the Euclidean (2, 3, 6) action that the
    recursions from n = 6 implicitly count.
    """
    if n_max < 10:
        raise ValueError(f"n_max must be >= 10, got {n_max}")
    report = SuiteReport("recursions")
    add = report.checks.append
    odd = _odd_primes(n_max)
    qc = qc_sum

    for n in range(1, n_max + 1):
        if not in_closed_domain(n):
            continue
        f = factorize(n)
        r = f.r
        primes = f.primes
        if n % 2 == 0:
            a1 = f.exponent(2)
            # QC(2 p2^a2 ... pr^ar * q^b), r >= 2
            if a1 == 1 and r >= 2:
                for q, b in _prime_powers_coprime(n, n_max, odd):
                    rhs = (qc(n) + 1 - 2 ** (r - 2)) * _lift(q, b) - 1 + 2 ** (r - 1)
                    add(Check("recursions", "5.1", f"n={n}, q^b={q}^{b}", qc(n * q**b), rhs))
            # QC(2 p^a q^b) = QC(2 p^a) q^(b-1)(q+1) + 1
            if a1 == 1 and r == 2:
                for q, b in _prime_powers_coprime(n, n_max, odd):
                    rhs = qc(n) * _lift(q, b) + 1
                    add(Check("recursions", "5.2", f"n={n}, q^b={q}^{b}", qc(n * q**b), rhs))
            # QC(n) from QC(n/2) when the 2-part of n is at least 4
            if a1 >= 2 and in_closed_domain(n // 2):
                rhs = 2 * qc(n // 2) + 1 + (0 if a1 <= 3 else -(2**r))
                add(Check("recursions", "5.6", f"n={n}", qc(n), rhs))
            continue

        all_one = all(p % 6 == 1 for p in primes)
        if all_one and r >= 1:
            for q, b in _prime_powers_coprime(n, n_max, [p for p in odd if p % 6 == 1]):
                rhs = ((qc(n) + 1 - Fraction(5, 3) * 2 ** (r - 1)) * _lift(q, b)
                       - 1 + Fraction(5, 3) * 2**r)
                add(Check("recursions", "6.2", f"n={n}, q^b={q}^{b}", qc(n * q**b), rhs))
            if 3 * n <= n_max:
                add(Check("recursions", "6.5", f"n={n}", qc(3 * n), 4 * qc(n) + 3 - 2 ** (r + 1)))
        if all_one:
            a, three_a = 2, 9
            while three_a * n <= n_max:
                t = 3 ** (a - 1)
                rhs = 4 * t * qc(n) + 4 * t - 1 + (1 - 10 * 3 ** (a - 2)) * 2**r
                add(Check("recursions", "6.8", f"n={n}, a={a}", qc(three_a * n), rhs))
                a += 1
                three_a *= 3
        # base has >= 2 odd primes, one of them 5 mod 6; r counts the others
        if r >= 2 and any(p % 6 == 5 for p in primes):
            rr = r - 1
            for q, b in _prime_powers_coprime(n, n_max, odd):
                rhs = (qc(n) + 1 - 2**rr) * _lift(q, b) - 1 + 2 ** (rr + 1)
                add(Check("recursions", "6.12", f"n={n}, q^b={q}^{b}", qc(n * q**b), rhs))
    return report


def verify_oracle(n_max: int) -> SuiteReport:
    from .oracle import dessin_pairs_oracle, qc_oracle

    report = SuiteReport("oracle")
    for n in range(1, n_max + 1):
        report.checks.append(Check("oracle", "qc_oracle", f"n={n}", qc_oracle(n), qc_sum(n)))
        report.checks.append(Check("oracle", "dessins", f"n={n}", dessin_pairs_oracle(n), r_cyclic(n)))
    return report


def verify_corollary(n_max: int) -> SuiteReport:
    report = SuiteReport("corollary")
    for n in range(1, n_max + 1):
        predicted = corollary_constant(n)
        if predicted is None:
            continue
        actual = qc_sum(n) - Fraction(r_cyclic(n), 6)
        report.checks.append(Check("corollary", "even" if n % 2 == 0 else "odd",
                                   f"n={n}", actual, predicted))
    return report


def verify_lloyd(p_max: int) -> SuiteReport:
    from .lloyd import lloyd_coefficient

    report = SuiteReport("lloyd")
    for p in _odd_primes(p_max):
        if p < 5:
            continue
        report.checks.append(Check("lloyd", "x^3", f"p={p}", lloyd_coefficient(p, 3), qc_sum(p)))
    return report


SUITES = {
    "recursions": verify_recursions,
    "oracle": verify_oracle,
    "corollary": verify_corollary,
    "lloyd": verify_lloyd,
}
