"""T-values per signature and the counts QC(n) built from them.

``qc_sum`` is the source of truth for every n. ``qc_closed``, ``qc_unified``
and ``corollary_constant`` are closed forms with explicit domains (even
n >= 8, odd n >= 5) and return ``None`` outside them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from .numtheory import euler_phi, factorize, tau1_closed, tau2_closed
from .signatures import Signature, enumerate_signatures, genus, is_admissible


class IntegralityError(ArithmeticError):
    """A count that must be an integer came out fractional."""


class CaseTag(str, enum.Enum):
    ALL_DISTINCT = "AllDistinct"
    TWO_EQUAL = "TwoEqual"
    ALL_EQUAL = "AllEqual"


@dataclass(frozen=True)
class TValueBreakdown:
    signature: Signature
    case_tag: CaseTag
    phi_term: int
    product_term: Fraction
    w_primes: tuple[int, ...]
    value: int
    tau1_term: int | None = None
    tau2_term: int | None = None


def w_primes(n: int, sig) -> tuple[int, ...]:
    """Primes p of n whose full power p^v_p(n) divides every period."""
    g = gcd(*sig)
    return tuple(p for p, a in factorize(n).parts if g % p**a == 0)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise IntegralityError(f"{what} = {x} is not an integer")
    if x < 0:
        raise IntegralityError(f"{what} = {x} is negative")
    return int(x)


def t_value(n: int, sig) -> TValueBreakdown:
    """Number of topologically distinct C_n actions with signature ``sig``."""
    sig = Signature(sig)
    if not is_admissible(n, sig):
        raise ValueError(f"signature {sig} is not admissible for n={n}")
    ws = w_primes(n, sig)
    product = prod((Fraction(p - 2, p - 1) for p in ws), start=Fraction(1))
    n1, n2, n3 = sig
    mult = sig.multiplicities()

    if mult == [1, 1, 1]:
        phi = euler_phi(gcd(n1, n2, n3))
        raw = phi * product
        return TValueBreakdown(sig, CaseTag.ALL_DISTINCT, phi, product, ws,
                               _as_int(raw, f"T{sig} for n={n}"))

    if mult == [1, 2]:
        # pairwise lcm = n forces the repeated period to be n itself
        odd = n1 if n2 == n3 else n3
        repeated = n2
        if repeated != n:
            raise IntegralityError(f"repeated period {repeated} != n={n} in {sig}")
        tau1 = tau1_closed(n, odd)
        phi = euler_phi(odd)
        raw = Fraction(1, 2) * (tau1 + phi * product)
        return TValueBreakdown(sig, CaseTag.TWO_EQUAL, phi, product, ws,
                               _as_int(raw, f"T{sig} for n={n}"), tau1_term=tau1)

    if n1 != n:
        raise IntegralityError(f"all-equal signature {sig} differs from n={n}")
    tau2 = tau2_closed(n)
    phi = euler_phi(n)
    raw = Fraction(1, 6) * (3 + 2 * tau2 + phi * product)
    return TValueBreakdown(sig, CaseTag.ALL_EQUAL, phi, product, ws,
                           _as_int(raw, f"T{sig} for n={n}"), tau2_term=tau2)


@lru_cache(maxsize=None)
def qc_sum(n: int) -> int:
    """QC(n) as the sum of T-values over all admissible signatures."""
    if n < 1:
        raise ValueError(f"QC needs n >= 1, got {n}")
    return sum(t_value(n, s).value for s in enumerate_signatures(n))


def r_cyclic(n: int) -> int:
    """Regular dessins with automorphism group C_n: n * prod(1 + 1/p)."""
    if n < 1:
        raise ValueError(f"r(C_n) needs n >= 1, got {n}")
    return prod((p ** (a - 1) * (p + 1) for p, a in factorize(n).parts), start=1)


def in_closed_domain(n: int) -> bool:
    return (n % 2 == 0 and n >= 8) or (n % 2 == 1 and n >= 5)


def _odd_case(n: int) -> str:
    """Residue class of odd n: 'five' | 'three_once' | 'three_power' | 'one'."""
    parts = factorize(n).parts
    if any(p % 6 == 5 for p, _ in parts):
        return "five"
    a3 = factorize(n).exponent(3)
    if a3 == 1:
        return "three_once"
    if a3 >= 2:
        return "three_power"
    return "one"


def qc_closed(n: int) -> int | None:
    """QC(n) by the even/odd closed forms; ``None`` outside their domains."""
    if not in_closed_domain(n):
        return None
    f = factorize(n)
    r = f.r
    if n % 2 == 0:
        a1 = f.exponent(2)
        main = Fraction(2) ** (a1 - 2) * prod(
            (p ** (a - 1) * (p + 1) for p, a in f.parts if p != 2), start=1)
        extra = Fraction(2) ** (r - 2 if a1 == 1 else r - 1 if a1 == 2 else r)
    else:
        main = Fraction(prod(p ** (a - 1) * (p + 1) for p, a in f.parts), 6)
        scale = {"five": Fraction(1), "three_power": Fraction(1),
                 "three_once": Fraction(4, 3), "one": Fraction(5, 3)}[_odd_case(n)]
        extra = scale * 2 ** (r - 1)
    return _as_int(main - 1 + extra, f"closed-form QC({n})")


def unified_constant(n: int) -> Fraction | None:
    """The constant a in QC(n) = r(C_n)/6 - 1 + a * 2^r."""
    if not in_closed_domain(n):
        return None
    if n % 2 == 0:
        a1 = factorize(n).exponent(2)
        return Fraction(1, 4) if a1 == 1 else Fraction(1, 2) if a1 == 2 else Fraction(1)
    return {"five": Fraction(1, 2), "three_power": Fraction(1, 2),
            "three_once": Fraction(2, 3), "one": Fraction(5, 6)}[_odd_case(n)]


def qc_unified(n: int) -> tuple[Fraction, int] | None:
    """``(a, QC(n))`` from the single formula with constant a, or ``None``."""
    a = unified_constant(n)
    if a is None:
        return None
    value = Fraction(r_cyclic(n), 6) - 1 + a * 2 ** factorize(n).r
    return a, _as_int(value, f"unified QC({n})")


def corollary_constant(n: int) -> Fraction | None:
    """Predicted QC(n) - r(C_n)/6 from the case table; ``None`` outside the domain."""
    if not in_closed_domain(n):
        return None
    r = factorize(n).r
    if n % 2 == 0:
        a1 = factorize(n).exponent(2)
        return -1 + Fraction(2) ** (r - 2 if a1 == 1 else r - 1 if a1 == 2 else r)
    scale = {"five": Fraction(1), "three_power": Fraction(1),
             "three_once": Fraction(4, 3), "one": Fraction(5, 3)}[_odd_case(n)]
    return -1 + scale * 2 ** (r - 1)


def prime_power_qc(p: int, a: int) -> int | None:
    """QC(p^a) from the four prime-power branches; ``None`` where none applies."""
    if p == 2:
        return 2 ** (a - 2) + 1 if a >= 3 else None
    if p == 3:
        return 2 * 3 ** (a - 2) if a >= 2 else None
    base = Fraction(p ** (a - 1) * (p + 1), 6)
    value = base if p % 6 == 5 else base + Fraction(2, 3)
    return _as_int(value, f"prime-power QC({p}^{a})")


@dataclass
class SignatureRow:
    signature: Signature
    genus: int
    tvalue: TValueBreakdown


@dataclass
class QCReport:
    n: int
    rows: list[SignatureRow]
    qc_sum: int
    r_cyclic: int
    qc_closed: int | None = None
    oracle_value: int | None = None
    methods: tuple[str, ...] = field(default=("sum",))

    @property
    def consistent(self) -> bool:
        return all(v is None or v == self.qc_sum for v in (self.qc_closed, self.oracle_value))


def build_report(n: int, closed: bool = True, oracle: bool = False) -> QCReport:
    """Per-n dossier; the oracle runs only when asked (it is O(n^2) per signature)."""
    rows = [SignatureRow(s, genus(n, s), t_value(n, s)) for s in enumerate_signatures(n)]
    total = sum(row.tvalue.value for row in rows)
    methods = ["sum"]
    report = QCReport(n=n, rows=rows, qc_sum=total, r_cyclic=r_cyclic(n))
    if closed:
        report.qc_closed = qc_closed(n)
        methods.append("closed")
    if oracle:
        from .oracle import qc_oracle

        report.oracle_value = qc_oracle(n)
        methods.append("oracle")
    report.methods = tuple(methods)
    return report
