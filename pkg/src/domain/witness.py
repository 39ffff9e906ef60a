"""
Fixed-Vertex Witnesses and Kneser Classification

Every involution theta of Sym([n]) fixes some vertex of K(n, k) whenever n is odd,
or n and k are both even. The constructors here build that vertex (and, for even
k, a disjoint pair of fixed vertices) deterministically from the canonical
InvolutionShape, then re-check the result with induced_map before returning.

If C(n, k) is even, a regular subgroup of Sym([n]) on k-subsets would contain an
involution (Cauchy) fixing no vertex; the fixed vertex rules that out.
"""

import logging

from src.domain.errors import DomainError, InvariantViolation
from src.domain.kneser import KneserParams, KSubset, induced_map, validate, vertex_count
from src.domain.models import Classification, Family, TheoremTag, Verdict
from src.domain.numth import Parity, binom_exact, even_odd_census, lucas_residue, odd_graph_order_parity
from src.domain.perm import InvolutionShape, Permutation

logger = logging.getLogger(__name__)

CENSUS_K_MAX = 64


def _check_shape(shape: InvolutionShape, params: KneserParams) -> None:
    if shape.degree != params.n:
        raise DomainError(f"Involution degree {shape.degree} does not match n={params.n}")


def _pair_points(pairs) -> list[int]:
    return [x for pair in pairs for x in pair]


def _verify_fixed(theta: Permutation, v: KSubset, label: str) -> None:
    if induced_map(theta, v) != v:
        logger.error(f"{label}: {theta} moves {v}")
        raise InvariantViolation(f"{label}: {theta} does not fix {v}")


def fixed_vertex(shape: InvolutionShape, params: KneserParams) -> KSubset:
    """
    A k-subset fixed setwise by the involution.

    Pairs and fixed points are consumed in canonical ascending order:
    with 2a <= k take every pair plus the first k - 2a fixed points
    (there are enough since b = n - 2a > k - 2a); otherwise take the first
    k // 2 pairs, plus the first fixed point when k is odd (b is then odd,
    hence positive, because n is odd).
    """
    _check_shape(shape, params)
    n, k = params.n, params.k
    if n % 2 == 0 and k % 2 == 1:
        raise DomainError(f"No fixed-vertex construction for n even and k odd ({params})")

    a = shape.a
    if 2 * a <= k:
        points = _pair_points(shape.transpositions) + list(shape.fixed_points[: k - 2 * a])
    else:
        points = _pair_points(shape.transpositions[: k // 2])
        if k % 2:
            points.append(shape.fixed_points[0])

    v = KSubset.from_elements(points, params)
    _verify_fixed(shape.to_permutation(), v, "fixed_vertex")
    return v


def disjoint_fixed_pair(shape: InvolutionShape, params: KneserParams) -> tuple[KSubset, KSubset]:
    """
    Two disjoint k-subsets, each fixed by the involution; k must be even.

    With 2a <= k, v takes every pair and the first k - 2a fixed points and w the
    next k fixed points (n - k > k of them remain). With 2a > k and k = 2l, v takes
    pairs 1..l, and w takes up to l of the remaining pairs topped up with fixed
    points; 2(a - l) + b = n - k > k keeps the supply sufficient.
    """
    _check_shape(shape, params)
    k = params.k
    if k % 2:
        raise DomainError(f"A disjoint fixed pair needs k even, got k={k}")

    a = shape.a
    fixed = list(shape.fixed_points)
    if 2 * a <= k:
        t = k - 2 * a
        v_points = _pair_points(shape.transpositions) + fixed[:t]
        w_points = fixed[t : t + k]
    else:
        half = k // 2
        v_points = _pair_points(shape.transpositions[:half])
        whole = min(a - half, half)
        w_points = _pair_points(shape.transpositions[half : half + whole])
        w_points += fixed[: k - 2 * whole]

    v = KSubset.from_elements(v_points, params)
    w = KSubset.from_elements(w_points, params)
    theta = shape.to_permutation()
    _verify_fixed(theta, v, "disjoint_fixed_pair")
    _verify_fixed(theta, w, "disjoint_fixed_pair")
    if v.mask & w.mask:
        raise InvariantViolation(f"disjoint_fixed_pair: {v} and {w} intersect")
    return v, w


# =============================================================================
# CLASSIFICATION
# =============================================================================

def classify_kneser(n: int, k: int) -> Classification:
    params = validate(n, k)
    order = vertex_count(params)
    residue = lucas_residue(n, k, 2)
    if residue != order % 2:
        raise InvariantViolation(f"Lucas residue {residue} disagrees with C({n},{k}) = {order}")

    evidence = {
        "order_mod_2": residue,
        "order_even": residue == 0,
        "n_odd": n % 2 == 1,
        "k_even": k % 2 == 0,
    }
    if residue == 0 and n % 2 == 1:
        verdict, tag = Verdict.NON_CAYLEY, TheoremTag.KNESER_ODD_N
    elif residue == 0 and n % 2 == 0 and k % 2 == 0:
        verdict, tag = Verdict.NON_CAYLEY, TheoremTag.KNESER_EVEN_N_EVEN_K
    else:
        verdict, tag = Verdict.UNRESOLVED, TheoremTag.NONE

    return Classification(
        family=Family.KNESER,
        n=n,
        k=k,
        order=order,
        verdict=verdict,
        theorem_tag=tag,
        evidence=evidence,
    )


def classify_odd(k: int) -> Classification:
    """O_{k+1} is NonCayley when its order C(2k+1, k) is even, i.e. k + 1 is not a power of two."""
    if k < 1:
        raise DomainError(f"classify_odd needs k >= 1, got {k}")
    certificate = odd_graph_order_parity(k)
    order = binom_exact(2 * k + 1, k)

    if certificate.verdict is Parity.EVEN:
        verdict, tag = Verdict.NON_CAYLEY, TheoremTag.EVEN_ODD_GRAPH
    else:
        verdict, tag = Verdict.UNRESOLVED, TheoremTag.NONE

    census = even_odd_census(max(k, CENSUS_K_MAX))
    return Classification(
        family=Family.ODD,
        n=2 * k + 1,
        k=k,
        order=order,
        verdict=verdict,
        theorem_tag=tag,
        evidence={"even_odd": certificate.verdict is Parity.EVEN, "certificate": certificate.to_dict()},
        notes=(census.describe(),),
    )
