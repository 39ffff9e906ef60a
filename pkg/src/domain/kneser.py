"""
Kneser Graph Vertex Model

Vertices of K(n, k) are k-subsets of [n], stored as bitmasks (bit i-1 <-> point i);
two vertices are adjacent iff they are disjoint. O_{k+1} is the case n = 2k + 1.

A permutation theta of [n] acts on vertices by f_theta({x_1..x_k}) = {theta(x_1)..theta(x_k)}.
Vertices are generated on demand; the global list is only built below a threshold.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from src.domain.errors import DomainError, InvariantViolation, ParseError, ResourceLimitError
from src.domain.numth import binom_exact
from src.domain.perm import Permutation

MAX_GROUND_SET = 64

_SUBSET_RE = re.compile(r"^\s*\{\s*(\d+(?:\s*,\s*\d+)*)?\s*\}\s*$")


@dataclass(frozen=True, slots=True)
class KneserParams:
    """Ground-set size n and subset size k with n > 4 and 1 < k < n/2."""
    n: int
    k: int

    def __post_init__(self):
        failed = []
        if self.n <= 4:
            failed.append(f"n > 4 (n={self.n})")
        if self.k <= 1:
            failed.append(f"k > 1 (k={self.k})")
        if 2 * self.k >= self.n:
            failed.append(f"k < n/2 (k={self.k}, n={self.n})")
        if self.n > MAX_GROUND_SET:
            failed.append(f"n <= {MAX_GROUND_SET} (n={self.n})")
        if failed:
            raise DomainError("Invalid Kneser parameters, violated: " + "; ".join(failed))

    @classmethod
    def odd(cls, k: int) -> "KneserParams":
        """Parameters of the odd graph O_{k+1} = K(2k+1, k)."""
        return cls(2 * k + 1, k)

    @property
    def is_odd_graph(self) -> bool:
        return self.n == 2 * self.k + 1

    @property
    def ground_mask(self) -> int:
        return (1 << self.n) - 1

    def __str__(self) -> str:
        return f"K({self.n},{self.k})"


def validate(n: int, k: int) -> KneserParams:
    return KneserParams(n, k)


@dataclass(frozen=True, slots=True, order=True)
class KSubset:
    """A k-element subset of [n]; ordering follows the bitmask (colex order)."""
    mask: int
    n: int
    k: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise DomainError(f"Mask {self.mask:#x} has bits outside [1..{self.n}]")
        if self.mask.bit_count() != self.k:
            raise DomainError(f"Mask {self.mask:#x} does not have exactly {self.k} elements")

    @classmethod
    def from_elements(cls, elements: Iterable[int], params: KneserParams) -> "KSubset":
        mask = 0
        count = 0
        for x in elements:
            if not 1 <= x <= params.n:
                raise DomainError(f"Element {x} outside [1..{params.n}]")
            mask |= 1 << (x - 1)
            count += 1
        if count != mask.bit_count():
            raise DomainError("Subset elements must be distinct")
        return cls(mask, params.n, params.k)

    @classmethod
    def parse(cls, text: str, params: KneserParams) -> "KSubset":
        match = _SUBSET_RE.match(text)
        if not match:
            raise ParseError(f"Malformed subset text: {text!r}")
        body = match.group(1) or ""
        elements = [int(tok) for tok in body.split(",") if tok.strip()]
        try:
            return cls.from_elements(elements, params)
        except DomainError as exc:
            raise ParseError(f"Invalid subset {text!r}: {exc}") from exc

    @property
    def elements(self) -> tuple[int, ...]:
        mask = self.mask
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length())
            mask ^= low
        return tuple(out)

    def complement(self) -> tuple[int, ...]:
        return tuple(x for x in range(1, self.n + 1) if not self.mask >> (x - 1) & 1)

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and bool(self.mask >> (x - 1) & 1)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"


def _same_params(u: KSubset, v: KSubset) -> None:
    if (u.n, u.k) != (v.n, v.k):
        raise DomainError(f"Subsets from different graphs: K({u.n},{u.k}) vs K({v.n},{v.k})")


def vertex_count(params: KneserParams) -> int:
    return binom_exact(params.n, params.k)


def degree(params: KneserParams) -> int:
    """Common valency C(n-k, k); equals k+1 for odd graphs."""
    return binom_exact(params.n - params.k, params.k)


def adjacent(u: KSubset, v: KSubset) -> bool:
    _same_params(u, v)
    return u.mask & v.mask == 0


def induced_map(theta: Permutation, v: KSubset) -> KSubset:
    """f_theta(v) = {theta(x) : x in v}."""
    if theta.degree != v.n:
        raise DomainError(f"Permutation degree {theta.degree} does not match n={v.n}")
    mask = 0
    for x in v.elements:
        mask |= 1 << (theta(x) - 1)
    return KSubset(mask, v.n, v.k)


def transitivity_witness(u: KSubset, v: KSubset) -> Permutation:
    """
    A permutation mapping u onto v: sorted u -> sorted v, sorted complement -> sorted complement.
    """
    _same_params(u, v)
    images = [0] * u.n
    for src, dst in zip(u.elements + u.complement(), v.elements + v.complement()):
        images[src - 1] = dst
    theta = Permutation(tuple(images))
    if induced_map(theta, u) != v:
        raise InvariantViolation(f"Transitivity witness failed for {u} -> {v}")
    return theta


# =============================================================================
# ENUMERATION AND RANKING
# =============================================================================

def iter_vertices(params: KneserParams) -> Iterator[KSubset]:
    """All k-subsets in increasing mask (colex) order, via Gosper's hack."""
    n, k = params.n, params.k
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield KSubset(mask, n, k)
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def vertices(params: KneserParams, max_materialize: int) -> list[KSubset]:
    count = vertex_count(params)
    if count > max_materialize:
        raise ResourceLimitError(
            f"{params} has {count} vertices, above the materialisation threshold {max_materialize}"
        )
    return list(iter_vertices(params))


def neighbours(v: KSubset) -> Iterator[KSubset]:
    """The k-subsets of the complement of v, in colex order."""
    complement = v.complement()
    if len(complement) < v.k:
        return
    positions = list(range(v.k))
    while True:
        mask = 0
        for p in positions:
            mask |= 1 << (complement[p] - 1)
        yield KSubset(mask, v.n, v.k)
        # advance the lowest position that can move
        for i in range(v.k):
            limit = positions[i + 1] if i + 1 < v.k else len(complement)
            if positions[i] + 1 < limit:
                positions[i] += 1
                positions[:i] = list(range(i))
                break
        else:
            return


def rank(v: KSubset) -> int:
    """Colex rank: sum of C(c_i, i+1) over 0-based sorted elements c_0 < ... < c_{k-1}."""
    return sum(binom_exact(x - 1, i + 1) for i, x in enumerate(v.elements))


def unrank(r: int, params: KneserParams) -> KSubset:
    total = vertex_count(params)
    if not 0 <= r < total:
        raise DomainError(f"Rank {r} outside [0, {total}) for {params}")
    mask = 0
    c = params.n
    for i in range(params.k, 0, -1):
        c -= 1
        while binom_exact(c, i) > r:
            c -= 1
        r -= binom_exact(c, i)
        mask |= 1 << c
    return KSubset(mask, params.n, params.k)
