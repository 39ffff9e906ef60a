"""
Line Graphs of Kneser Graphs

A line-vertex is an edge {u, v} of K(n, k) (u and v disjoint). Two line-vertices
are adjacent when the edges share exactly one endpoint. An automorphism theta of
the base graph lifts to {u, v} -> {theta(u), theta(v)}.

L(O_{k+1}) has order (k+1)/2 * C(2k+1, k). When that order is a multiple of 4
(k even, k > 4, k not a power of two) every involution of Sym([2k+1]) fixes a
line-vertex, so no subgroup can act regularly.
"""

import re
from dataclasses import dataclass
from itertools import chain
from typing import Iterator

from src.domain.errors import DomainError, InvariantViolation, ParseError
from src.domain.kneser import (
    KneserParams,
    KSubset,
    adjacent,
    degree,
    induced_map,
    iter_vertices,
    neighbours,
    vertex_count,
)
from src.domain.models import Classification, Family, TheoremTag, Verdict
from src.domain.numth import binom_exact, is_multiple_of_4, is_power_of_two
from src.domain.perm import Permutation

_EDGE_RE = re.compile(r"^\s*\{\s*(\{[^{}]*\})\s*,\s*(\{[^{}]*\})\s*\}\s*$")


@dataclass(frozen=True, slots=True)
class EdgePair:
    """An edge of K(n, k); u holds the smaller bitmask."""
    u: KSubset
    v: KSubset

    def __post_init__(self):
        if not adjacent(self.u, self.v):
            raise DomainError(f"{self.u} and {self.v} are not disjoint, so not an edge")
        if self.u.mask > self.v.mask:
            raise DomainError("EdgePair endpoints must be in canonical order; use EdgePair.of")

    @classmethod
    def of(cls, u: KSubset, v: KSubset) -> "EdgePair":
        return cls(u, v) if u.mask < v.mask else cls(v, u)

    @classmethod
    def parse(cls, text: str, params: KneserParams) -> "EdgePair":
        match = _EDGE_RE.match(text)
        if not match:
            raise ParseError(f"Malformed edge text: {text!r}")
        u = KSubset.parse(match.group(1), params)
        v = KSubset.parse(match.group(2), params)
        try:
            return cls.of(u, v)
        except DomainError as exc:
            raise ParseError(f"Invalid edge {text!r}: {exc}") from exc

    @property
    def endpoints(self) -> tuple[KSubset, KSubset]:
        return self.u, self.v

    def __str__(self) -> str:
        return "{" + f"{self.u},{self.v}" + "}"


def line_order_odd(k: int) -> int:
    """(k+1) * C(2k+1, k) / 2, the number of edges of O_{k+1}."""
    if k < 2:
        raise DomainError(f"line_order_odd needs k >= 2, got {k}")
    total = (k + 1) * binom_exact(2 * k + 1, k)
    if total % 2:
        raise InvariantViolation(f"Handshake count {total} is odd for k={k}")
    return total // 2


def line_order(params: KneserParams) -> int:
    return vertex_count(params) * degree(params) // 2


def line_adjacent(e1: EdgePair, e2: EdgePair) -> bool:
    if e1 == e2:
        raise DomainError(f"Line graph has no loops: {e1} compared with itself")
    return len(set(e1.endpoints) & set(e2.endpoints)) == 1


def lift(theta: Permutation, e: EdgePair) -> EdgePair:
    return EdgePair.of(induced_map(theta, e.u), induced_map(theta, e.v))


def iter_edge_pairs(params: KneserParams) -> Iterator[EdgePair]:
    """Every edge once, from its smaller endpoint, in colex order of that endpoint."""
    for u in iter_vertices(params):
        for v in neighbours(u):
            if u.mask < v.mask:
                yield EdgePair(u, v)


def edge_transitivity_witness(e1: EdgePair, e2: EdgePair) -> Permutation:
    """
    A permutation lifting e1 onto e2: u1 -> u2 and v1 -> v2 elementwise in sorted
    order, the remaining points onto the remaining points in sorted order.
    """
    n = e1.u.n
    if (n, e1.u.k) != (e2.u.n, e2.u.k):
        raise DomainError("Edges come from different Kneser graphs")
    used1 = e1.u.mask | e1.v.mask
    used2 = e2.u.mask | e2.v.mask
    rest1 = [x for x in range(1, n + 1) if not used1 >> (x - 1) & 1]
    rest2 = [x for x in range(1, n + 1) if not used2 >> (x - 1) & 1]

    images = [0] * n
    sources = chain(e1.u.elements, e1.v.elements, rest1)
    targets = chain(e2.u.elements, e2.v.elements, rest2)
    for src, dst in zip(sources, targets):
        images[src - 1] = dst
    theta = Permutation(tuple(images))
    if lift(theta, e1) != e2:
        raise InvariantViolation(f"Edge witness failed for {e1} -> {e2}")
    return theta


def classify_line_odd(k: int) -> Classification:
    if k < 2:
        raise DomainError(f"classify_line_odd needs k >= 2, got {k}")
    order_base = binom_exact(2 * k + 1, k)
    evidence = {
        "base_order_mod_4": order_base % 4,
        "k_even": k % 2 == 0,
        "k_gt_4": k > 4,
        "k_power_of_two": is_power_of_two(k),
    }
    hypothesis = k > 4 and k % 2 == 0 and is_multiple_of_4(k)
    evidence["base_order_multiple_of_4"] = hypothesis
    if hypothesis != (k > 4 and k % 2 == 0 and order_base % 4 == 0):
        raise InvariantViolation(f"Mod-4 criterion disagrees with C({2 * k + 1},{k}) mod 4")

    if hypothesis:
        verdict, tag = Verdict.NON_CAYLEY, TheoremTag.LINE_OF_ODD_MOD4
    else:
        verdict, tag = Verdict.UNRESOLVED, TheoremTag.NONE
    return Classification(
        family=Family.LINE_OF_ODD,
        n=2 * k + 1,
        k=k,
        order=line_order_odd(k),
        verdict=verdict,
        theorem_tag=tag,
        evidence=evidence,
    )
