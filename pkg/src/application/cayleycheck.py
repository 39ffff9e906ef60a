"""
Desk-Scale Verification

Sweeps that confirm every involution fixes a vertex (or a disjoint pair of
vertices, or a line-vertex of L(O_{k+1})), and a bounded exhaustive search for
a subgroup of Sym([n]) acting regularly on the k-subsets.

Exhaustive sweeps may fan out over a process pool, one task per transposition
count a; partial results are merged in ascending a.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from math import factorial, gcd
from typing import Callable, Iterable, Optional, Union

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from src.domain.errors import DomainError, InvariantViolation, ResourceLimitError
from src.domain.kneser import KneserParams, iter_vertices, vertex_count
from src.domain.linegraph import EdgePair, lift
from src.domain.models import (
    SearchOutcome,
    SubgroupSearchResult,
    SweepFailure,
    SweepMode,
    VerificationReport,
)
from src.domain.perm import InvolutionShape, Permutation, enumerate_involution_shapes, involution_count
from src.domain.witness import classify_kneser, disjoint_fixed_pair, fixed_vertex
from src.infrastructure.config import get_limits_config, get_sweep_config
from src.infrastructure.sampler import InvolutionSampler
from src.infrastructure.sweep_plan import PlanEntry

logger = logging.getLogger(__name__)

CHECK_FIXED_VERTEX = "fixed-vertex"
CHECK_DISJOINT_PAIR = "disjoint-fixed-pair"
CHECK_LIFTED_EDGE = "lifted-edge-pair"
CHECK_REGULAR_SUBGROUP = "regular-subgroup"


# =============================================================================
# PER-INVOLUTION CHECKS
# =============================================================================

def _check_fixed_vertex(shape: InvolutionShape, params: KneserParams) -> None:
    fixed_vertex(shape, params)


def _check_disjoint_pair(shape: InvolutionShape, params: KneserParams) -> None:
    disjoint_fixed_pair(shape, params)


def _check_lifted_edge(shape: InvolutionShape, params: KneserParams) -> None:
    v, w = disjoint_fixed_pair(shape, params)
    edge = EdgePair.of(v, w)
    if lift(shape.to_permutation(), edge) != edge:
        raise InvariantViolation(f"Lift of {shape.to_permutation()} moves line-vertex {edge}")


CHECKS: dict[str, Callable[[InvolutionShape, KneserParams], None]] = {
    CHECK_FIXED_VERTEX: _check_fixed_vertex,
    CHECK_DISJOINT_PAIR: _check_disjoint_pair,
    CHECK_LIFTED_EDGE: _check_lifted_edge,
}


def _run_checks(
    check: str, shapes: Iterable[InvolutionShape], params: KneserParams
) -> tuple[int, list[SweepFailure]]:
    run = CHECKS[check]
    checked = 0
    failures: list[SweepFailure] = []
    for shape in shapes:
        checked += 1
        try:
            run(shape, params)
        except InvariantViolation as exc:
            logger.warning(f"{check} failed on {params} for {shape.to_permutation()}: {exc}")
            failures.append(SweepFailure(str(shape.to_permutation()), str(exc)))
    return checked, failures


def _sweep_partition(check: str, n: int, k: int, a: int, max_degree: int) -> tuple[int, list[SweepFailure]]:
    """Worker entry point: every involution with exactly a transpositions."""
    params = KneserParams(n, k)
    shapes = enumerate_involution_shapes(n, transpositions=a, max_degree=max_degree)
    return _run_checks(check, shapes, params)


# =============================================================================
# SWEEPS
# =============================================================================

def _sweep(
    check: str,
    params: KneserParams,
    mode: SweepMode,
    max_exhaustive_n: Optional[int],
    workers: Optional[int],
) -> VerificationReport:
    limits = get_limits_config()
    max_n = max_exhaustive_n if max_exhaustive_n is not None else limits.max_exhaustive_n
    pool_size = workers if workers is not None else get_sweep_config().workers

    started = time.perf_counter()
    if mode.is_exhaustive:
        if params.n > max_n:
            raise ResourceLimitError(
                f"Exhaustive sweep limited to n <= {max_n}, got n={params.n}; use a sampled sweep"
            )
        counts = list(range(1, params.n // 2 + 1))
        logger.info(f"Exhaustive {check} sweep on {params} over a in {counts}, workers={pool_size}")
        if pool_size > 1:
            with ProcessPoolExecutor(max_workers=pool_size) as pool:
                futures = [
                    pool.submit(_sweep_partition, check, params.n, params.k, a, max_n) for a in counts
                ]
                partials = [future.result() for future in futures]
        else:
            partials = [_sweep_partition(check, params.n, params.k, a, max_n) for a in counts]
        checked = sum(count for count, _ in partials)
        failures = [failure for _, found in partials for failure in found]
        expected: Optional[int] = involution_count(params.n)
    else:
        logger.info(f"Sampled {check} sweep on {params}: {mode}")
        sampler = InvolutionSampler(params.n, mode.seed or 0)
        checked, failures = _run_checks(check, sampler.draw(mode.count or 0), params)
        expected = None

    elapsed = time.perf_counter() - started
    logger.info(f"{check} sweep on {params}: {checked} checked, {len(failures)} failures in {elapsed:.3f}s")
    return VerificationReport(
        params=params,
        check=check,
        mode=mode,
        involutions_checked=checked,
        failures=tuple(failures),
        elapsed_seconds=elapsed,
        expected_count=expected,
    )


def verify_involutions_fix(
    params: KneserParams,
    mode: SweepMode = SweepMode.exhaustive(),
    max_exhaustive_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    """Confirm fixed_vertex succeeds for every involution; needs n odd, or n and k even."""
    if params.n % 2 == 0 and params.k % 2 == 1:
        raise DomainError(f"{params}: the fixed-vertex argument needs n odd, or n and k both even")
    return _sweep(CHECK_FIXED_VERTEX, params, mode, max_exhaustive_n, workers)


def verify_pairs_fix(
    params: KneserParams,
    mode: SweepMode = SweepMode.exhaustive(),
    max_exhaustive_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    if params.k % 2:
        raise DomainError(f"{params}: a disjoint fixed pair needs k even")
    return _sweep(CHECK_DISJOINT_PAIR, params, mode, max_exhaustive_n, workers)


def verify_lifted_involutions_fix(
    k: int,
    mode: SweepMode = SweepMode.exhaustive(),
    max_exhaustive_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    """Every involution of Sym([2k+1]) fixes some line-vertex of L(O_{k+1}), for even k."""
    if k < 2 or k % 2:
        raise DomainError(f"Lifted sweep needs an even k >= 2, got {k}")
    return _sweep(CHECK_LIFTED_EDGE, KneserParams.odd(k), mode, max_exhaustive_n, workers)


# =============================================================================
# REGULAR SUBGROUP SEARCH
# =============================================================================

@dataclass(frozen=True)
class SearchBudget:
    max_degree: int = 6
    max_subgroups: int = 200_000
    max_materialize: int = 1_000_000

    @classmethod
    def from_config(cls) -> "SearchBudget":
        limits = get_limits_config()
        return cls(
            max_degree=limits.max_search_degree,
            max_subgroups=limits.max_subgroups,
            max_materialize=limits.max_materialize,
        )


# Elements are 0-based image tuples, the array form of a sympy permutation.
Element = tuple[int, ...]


def _cyclic_generators(n: int, target: int) -> list[SymPermutation]:
    """One generator per nontrivial cyclic subgroup of Sym(n) whose order divides target."""
    covered: set[Element] = set()
    generators = []
    for images in permutations(range(n)):
        if images in covered:
            continue
        g = SymPermutation(list(images))
        m = g.order()
        if m == 1 or target % m:
            continue
        # <H, g> depends only on <g>; the other generators of <g> are redundant
        covered.update(tuple((g ** j).array_form) for j in range(1, m) if gcd(j, m) == 1)
        generators.append(g)
    return generators


def _elements(members: Iterable[SymPermutation]) -> frozenset:
    return frozenset(tuple(p.array_form) for p in members)


def _act(p: Element, mask: int) -> int:
    image = 0
    while mask:
        low = mask & -mask
        image |= 1 << p[low.bit_length() - 1]
        mask ^= low
    return image


def _is_regular(group: frozenset, identity: Element, masks: list[int]) -> bool:
    """Only the identity fixes any vertex, and the orbit of one vertex is everything."""
    if len(group) != len(masks):
        return False
    for p in group:
        if p != identity and any(_act(p, m) == m for m in masks):
            return False
    return {_act(p, masks[0]) for p in group} == set(masks)


def _format(p: SymPermutation) -> str:
    return str(Permutation(tuple(x + 1 for x in p.array_form)))


def search_regular_subgroup(
    params: KneserParams, budget: Optional[SearchBudget] = None
) -> SubgroupSearchResult:
    """
    Exhaustive search for a subgroup of Sym([n]) of order C(n, k) acting regularly
    on the k-subsets.

    Subgroups are grown from the trivial group by adjoining one cyclic subgroup
    at a time, keeping only groups whose order divides C(n, k); every subgroup
    of the target order is reached this way. Absence is reported only after the
    whole space is exhausted.
    """
    budget = budget or SearchBudget.from_config()
    n = params.n
    target = vertex_count(params)
    started = time.perf_counter()

    def result(outcome: SearchOutcome, **kwargs) -> SubgroupSearchResult:
        return SubgroupSearchResult(
            params=params,
            target_order=target,
            outcome=outcome,
            elapsed_seconds=time.perf_counter() - started,
            **kwargs,
        )

    if factorial(n) % target:
        return result(SearchOutcome.NO_REGULAR_SUBGROUP, reason=f"{target} does not divide {n}!")
    if n > budget.max_degree:
        return result(SearchOutcome.SKIPPED, reason=f"n={n} exceeds the search degree bound {budget.max_degree}")
    if target > budget.max_materialize:
        return result(
            SearchOutcome.SKIPPED,
            reason=f"{target} vertices exceed the materialisation threshold {budget.max_materialize}",
        )

    identity: Element = tuple(range(n))
    masks = [v.mask for v in iter_vertices(params)]
    candidates = _cyclic_generators(n, target)
    logger.info(f"Regular-subgroup search on {params}: order {target}, {len(candidates)} cyclic generators")

    trivial = frozenset({identity})
    generators_of: dict[frozenset, list[SymPermutation]] = {trivial: []}
    queue = [trivial]
    even_order = 0
    head = 0
    while head < len(queue):
        group = queue[head]
        head += 1
        if len(group) == target:
            continue
        for g in candidates:
            if tuple(g.array_form) in group:
                continue
            gens = generators_of[group] + [g]
            extended = PermutationGroup(gens)
            size = extended.order()
            if target % size:
                continue
            members = list(extended.generate())
            elements = _elements(members)
            if elements in generators_of:
                continue
            generators_of[elements] = gens
            queue.append(elements)
            if len(generators_of) > budget.max_subgroups:
                return result(
                    SearchOutcome.SKIPPED,
                    subgroups_examined=len(generators_of),
                    even_order_subgroups=even_order,
                    reason=f"more than {budget.max_subgroups} subgroups",
                )
            if size % 2 == 0:
                even_order += 1
                if not any(p.order() == 2 for p in members):
                    raise InvariantViolation(f"Even-order subgroup of size {size} without an involution")
            if size == target and _is_regular(elements, identity, masks):
                regenerated = _elements(PermutationGroup(gens).generate())
                if regenerated != elements or not _is_regular(regenerated, identity, masks):
                    raise InvariantViolation("Regular subgroup failed re-verification")
                logger.info(f"Found a regular subgroup of order {target} on {params}")
                return result(
                    SearchOutcome.FOUND,
                    subgroups_examined=len(generators_of),
                    even_order_subgroups=even_order,
                    generators=tuple(_format(p) for p in gens),
                )

    logger.info(f"No regular subgroup on {params} after {len(generators_of)} subgroups")
    return result(
        SearchOutcome.NO_REGULAR_SUBGROUP,
        subgroups_examined=len(generators_of),
        even_order_subgroups=even_order,
    )


def contradicts_classification(result: SubgroupSearchResult) -> bool:
    """A regular subgroup on a graph already proved non-Cayley."""
    if result.outcome is not SearchOutcome.FOUND:
        return False
    return classify_kneser(result.params.n, result.params.k).is_non_cayley


# =============================================================================
# PLANS
# =============================================================================

def run_plan_entry(
    entry: PlanEntry, budget: Optional[SearchBudget] = None
) -> list[Union[VerificationReport, SubgroupSearchResult]]:
    """Run one sweep-plan entry over each of its instances, in listed order."""
    if entry.check == CHECK_LIFTED_EDGE:
        return [verify_lifted_involutions_fix(k, entry.mode) for k in entry.ks]

    results: list[Union[VerificationReport, SubgroupSearchResult]] = []
    for n, k in entry.instances:
        params = KneserParams(n, k)
        if entry.check == CHECK_REGULAR_SUBGROUP:
            results.append(search_regular_subgroup(params, budget))
        elif entry.check == CHECK_DISJOINT_PAIR:
            results.append(verify_pairs_fix(params, entry.mode))
        else:
            results.append(verify_involutions_fix(params, entry.mode))
    return results


def passed(result: Union[VerificationReport, SubgroupSearchResult]) -> bool:
    """Verified sweeps pass; a search passes unless it contradicts a NonCayley classification."""
    if isinstance(result, VerificationReport):
        return result.verified
    return not contradicts_classification(result)
