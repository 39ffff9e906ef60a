"""
Binomial Residue Oracles

Exact and digit-based arithmetic for binomial coefficients:
- base-p digit expansions
- Lucas' digitwise product for C(m, n) mod p
- the even-order criterion for odd graphs O_{k+1} (order C(2k+1, k))
- the multiple-of-4 criterion used for line graphs of odd graphs

All functions are pure; Python ints give the arbitrary precision.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import isqrt
from typing import Optional

from src.domain.errors import DomainError, InvariantViolation


@lru_cache(maxsize=256)
def is_prime(p: int) -> bool:
    """Trial-division primality check (small p only)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"Base must be prime, got {p}")


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


# =============================================================================
# DIGIT EXPANSIONS
# =============================================================================

@dataclass(frozen=True, slots=True)
class DigitExpansion:
    """
    Base-p expansion of a non-negative integer.

    Digits are stored least-significant first, so digit(i) is the coefficient
    of base**i. Positions past the stored length read as 0.
    """
    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise DomainError("A digit expansion needs at least one digit")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise DomainError(f"Digit {d} out of range for base {self.base}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise DomainError("Most significant digit must be nonzero")

    def __len__(self) -> int:
        return len(self.digits)

    def digit(self, i: int) -> int:
        return self.digits[i] if i < len(self.digits) else 0

    @property
    def value(self) -> int:
        return from_digits(self)

    def __str__(self) -> str:
        return "".join(str(d) for d in reversed(self.digits)) + f"_{self.base}"

    def to_dict(self) -> dict:
        return {"base": self.base, "digits": list(self.digits)}


def digits_base_p(m: int, p: int) -> DigitExpansion:
    """Unique base-p expansion of m (least significant digit first)."""
    _require_prime(p)
    if m < 0:
        raise DomainError(f"Cannot expand negative integer {m}")
    if m == 0:
        return DigitExpansion(base=p, digits=(0,))
    digits = []
    while m:
        m, d = divmod(m, p)
        digits.append(d)
    return DigitExpansion(base=p, digits=tuple(digits))


def from_digits(expansion: DigitExpansion) -> int:
    value = 0
    for d in reversed(expansion.digits):
        value = value * expansion.base + d
    return value


# =============================================================================
# BINOMIAL COEFFICIENTS
# =============================================================================

def binom_exact(m: int, n: int) -> int:
    """
    Exact C(m, n) via the multiplicative formula.

    Each partial product C(m-n+i, i) is an integer, so the floor division is exact.
    """
    if m < 0 or n < 0:
        raise DomainError(f"binom_exact needs non-negative arguments, got ({m}, {n})")
    if n > m:
        return 0
    n = min(n, m - n)
    result = 1
    for i in range(1, n + 1):
        result = result * (m - n + i) // i
    return result


def _binom_mod_prime(a: int, b: int, p: int) -> int:
    """C(a, b) mod p for 0 <= b <= a < p; the denominator is a unit mod p."""
    b = min(b, a - b)
    num = den = 1
    for i in range(b):
        num = num * (a - i) % p
        den = den * (i + 1) % p
    return num * pow(den, -1, p) % p


def lucas_residue(m: int, n: int, p: int) -> int:
    """C(m, n) mod p as the product of digitwise binomials (C(a, b) = 0 when a < b)."""
    _require_prime(p)
    if m < 0 or n < 0:
        raise DomainError(f"lucas_residue needs non-negative arguments, got ({m}, {n})")
    em = digits_base_p(m, p)
    en = digits_base_p(n, p)
    residue = 1
    for i in range(max(len(em), len(en))):
        a, b = em.digit(i), en.digit(i)
        if a < b:
            return 0
        residue = residue * _binom_mod_prime(a, b, p) % p
    return residue


# =============================================================================
# ODD-GRAPH ORDER PARITY
# =============================================================================

class Parity(str, Enum):
    EVEN = "Even"
    ODD = "Odd"

    @classmethod
    def of(cls, value: int) -> "Parity":
        return cls.EVEN if value % 2 == 0 else cls.ODD


@dataclass(frozen=True, slots=True)
class ParityCertificate:
    """
    Certificate for the parity of C(2k+1, k).

    For an Even verdict, j is the largest index with a zero binary digit of k;
    then digit j+1 of 2k+1 is 0 while digit j+1 of k is 1, and the digitwise
    factor C(0, 1) = 0 kills the Lucas product.
    """
    k: int
    expansion_k: DigitExpansion
    verdict: Parity
    j: Optional[int] = None

    def __post_init__(self):
        digits = self.expansion_k.digits
        all_ones = all(d == 1 for d in digits)
        if (self.verdict is Parity.ODD) != all_ones:
            raise InvariantViolation(f"Parity verdict {self.verdict.value} inconsistent with {self.expansion_k}")
        if self.verdict is Parity.EVEN:
            if self.j is None or not 0 <= self.j < len(digits) - 1:
                raise InvariantViolation(f"Even certificate for k={self.k} needs a valid index j, got {self.j}")
            if digits[self.j] != 0 or any(d != 1 for d in digits[self.j + 1:]):
                raise InvariantViolation(f"Index j={self.j} is not the largest zero digit of {self.expansion_k}")

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "expansion_k": str(self.expansion_k),
            "j": self.j,
            "verdict": self.verdict.value,
        }


def odd_graph_order_parity(k: int) -> ParityCertificate:
    """Parity of the order C(2k+1, k) of O_{k+1}; Odd iff k = 2^t - 1."""
    if k < 1:
        raise DomainError(f"odd_graph_order_parity needs k >= 1, got {k}")
    expansion = digits_base_p(k, 2)
    zeros = [i for i, d in enumerate(expansion.digits) if d == 0]
    if zeros:
        certificate = ParityCertificate(k=k, expansion_k=expansion, verdict=Parity.EVEN, j=zeros[-1])
    else:
        certificate = ParityCertificate(k=k, expansion_k=expansion, verdict=Parity.ODD)

    residue = lucas_residue(2 * k + 1, k, 2)
    if (residue == 0) != (certificate.verdict is Parity.EVEN):
        raise InvariantViolation(f"Digit certificate for k={k} disagrees with Lucas residue {residue}")
    return certificate


def is_multiple_of_4(k: int) -> bool:
    """
    True iff 4 divides C(2k+1, k), for even k > 4.

    C(2k+1, k) = 2(2k+1)t and (k+1)t = C(2k-1, k-1); k+1 is odd, so t is even
    exactly when C(2k-1, k-1) is even.
    """
    if k <= 4 or k % 2:
        raise DomainError(f"is_multiple_of_4 needs an even k > 4, got {k}")
    return odd_graph_order_parity(k - 1).verdict is Parity.EVEN


# =============================================================================
# EVEN-ODD CENSUS
# =============================================================================

@dataclass(frozen=True, slots=True)
class EvenOddCensus:
    """How many of O_2 .. O_{k_max+1} have even order."""
    k_max: int
    even_count: int
    odd_order_ks: tuple[int, ...] = field(default_factory=tuple)

    @property
    def fraction(self) -> float:
        return self.even_count / self.k_max if self.k_max else 0.0

    def describe(self) -> str:
        ks = ", ".join(str(k) for k in self.odd_order_ks)
        return (
            f"{self.even_count} of {self.k_max} odd graphs with k <= {self.k_max} are even-odd; "
            f"the exceptions k = 2^t - 1 are [{ks}]"
        )


def even_odd_census(k_max: int) -> EvenOddCensus:
    if k_max < 1:
        raise DomainError(f"even_odd_census needs k_max >= 1, got {k_max}")
    odd_ks = []
    k = 1
    while k <= k_max:
        odd_ks.append(k)
        k = 2 * k + 1
    return EvenOddCensus(k_max=k_max, even_count=k_max - len(odd_ks), odd_order_ks=tuple(odd_ks))
