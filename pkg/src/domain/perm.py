"""
Permutations of [n] = {1, ..., n}

Parsing, composition, cycle decomposition, order, involution structure and
exhaustive involution enumeration. Points are 1-based throughout.

Composition applies the right factor first: compose(p, q)(i) = p(q(i)).
"""

import re
from dataclasses import dataclass
from itertools import combinations
from math import factorial, lcm
from typing import Iterator, Optional

from src.domain.errors import DomainError, ParseError, ResourceLimitError

DEFAULT_MAX_INVOLUTION_DEGREE = 12

_CYCLE_TEXT_RE = re.compile(r"^\s*(\(\s*[\d\s,]*\)\s*)*$")
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """
    A bijection of [n]; images[i - 1] holds theta(i).
    """
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise DomainError("Permutation degree must be positive")
        if sorted(self.images) != list(range(1, n + 1)):
            raise DomainError(f"Images {self.images} are not a bijection of [1..{n}]")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def format_cycles(self) -> str:
        """Cycle notation with fixed points omitted; the identity is ''."""
        return "".join(
            "(" + " ".join(str(x) for x in cycle) + ")"
            for cycle in cycle_decomposition(self).cycles
            if len(cycle) > 1
        )

    def __str__(self) -> str:
        return self.format_cycles() or "()"


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse disjoint cycle notation such as "(1 2)(3 4)"; omitted points are fixed."""
    if n < 1:
        raise DomainError(f"Degree must be positive, got {n}")
    if not _CYCLE_TEXT_RE.match(text):
        raise ParseError(f"Malformed cycle notation: {text!r}")

    images = list(range(1, n + 1))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        try:
            points = [int(tok) for tok in body.replace(",", " ").split()]
        except ValueError as exc:
            raise ParseError(f"Malformed cycle {body!r}") from exc
        for x in points:
            if not 1 <= x <= n:
                raise ParseError(f"Point {x} outside [1..{n}] in {text!r}")
            if x in seen:
                raise ParseError(f"Point {x} repeated in {text!r}")
            seen.add(x)
        for x, y in zip(points, points[1:] + points[:1]):
            images[x - 1] = y
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The map i -> p(q(i))."""
    if p.degree != q.degree:
        raise DomainError(f"Cannot compose permutations of degree {p.degree} and {q.degree}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


# =============================================================================
# CYCLES AND ORDER
# =============================================================================

@dataclass(frozen=True, slots=True)
class CycleDecomposition:
    """Canonical disjoint cycles: each starts at its minimum, sorted by start, 1-cycles included."""
    degree: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    @property
    def order(self) -> int:
        return lcm(*self.lengths)

    def to_permutation(self) -> Permutation:
        images = list(range(1, self.degree + 1))
        for cycle in self.cycles:
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                images[x - 1] = y
        return Permutation(tuple(images))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    seen = [False] * (p.degree + 1)
    cycles = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p(x)
        cycles.append(tuple(cycle))
    return CycleDecomposition(degree=p.degree, cycles=tuple(cycles))


def order(p: Permutation) -> int:
    return cycle_decomposition(p).order


# =============================================================================
# INVOLUTIONS
# =============================================================================

@dataclass(frozen=True, slots=True)
class InvolutionShape:
    """
    An order-2 permutation split into a transpositions (x_r, y_r) and b fixed points.

    Transpositions have x_r < y_r and are sorted by x_r; fixed points ascend.
    """
    degree: int
    transpositions: tuple[tuple[int, int], ...]
    fixed_points: tuple[int, ...]

    def __post_init__(self):
        if not self.transpositions:
            raise DomainError("An involution moves at least one pair")
        points = [x for pair in self.transpositions for x in pair] + list(self.fixed_points)
        if len(points) != self.degree or sorted(points) != list(range(1, self.degree + 1)):
            raise DomainError(f"Shape does not partition [1..{self.degree}]")

    @property
    def a(self) -> int:
        return len(self.transpositions)

    @property
    def b(self) -> int:
        return len(self.fixed_points)

    def to_permutation(self) -> Permutation:
        images = list(range(1, self.degree + 1))
        for x, y in self.transpositions:
            images[x - 1] = y
            images[y - 1] = x
        return Permutation(tuple(images))


def involution_shape(p: Permutation) -> InvolutionShape:
    decomposition = cycle_decomposition(p)
    if decomposition.order != 2:
        raise DomainError(f"Permutation {p} has order {decomposition.order}, not 2")
    transpositions = tuple(c for c in decomposition.cycles if len(c) == 2)
    fixed = tuple(c[0] for c in decomposition.cycles if len(c) == 1)
    return InvolutionShape(degree=p.degree, transpositions=transpositions, fixed_points=fixed)


def involution_count(n: int, transpositions: Optional[int] = None) -> int:
    """Number of involutions of Sym([n]): sum over a >= 1 of n! / (a! 2^a (n-2a)!)."""
    def count(a: int) -> int:
        return factorial(n) // (factorial(a) * 2 ** a * factorial(n - 2 * a))

    if transpositions is not None:
        return count(transpositions) if 1 <= transpositions <= n // 2 else 0
    return sum(count(a) for a in range(1, n // 2 + 1))


def _matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Perfect matchings of an ascending tuple, each pair ascending, pairs sorted by first element."""
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in _matchings(remaining):
            yield ((first, partner),) + tail


def enumerate_involution_shapes(
    n: int,
    transpositions: Optional[int] = None,
    max_degree: int = DEFAULT_MAX_INVOLUTION_DEGREE,
) -> Iterator[InvolutionShape]:
    """
    Every involution of Sym([n]) exactly once, as a canonical shape.

    Bounds are checked eagerly; passing transpositions=a restricts the stream
    to involutions with exactly a transpositions.
    """
    if n < 1:
        raise DomainError(f"Degree must be positive, got {n}")
    if n > max_degree:
        raise ResourceLimitError(f"Involution enumeration limited to n <= {max_degree}, got n={n}")
    counts = [transpositions] if transpositions is not None else list(range(1, n // 2 + 1))
    return _shape_stream(n, [a for a in counts if 1 <= a <= n // 2])


def _shape_stream(n: int, counts: list[int]) -> Iterator[InvolutionShape]:
    everything = tuple(range(1, n + 1))
    for a in counts:
        for moved in combinations(everything, 2 * a):
            moved_set = set(moved)
            fixed = tuple(x for x in everything if x not in moved_set)
            for matching in _matchings(moved):
                yield InvolutionShape(degree=n, transpositions=matching, fixed_points=fixed)


def enumerate_involutions(
    n: int,
    transpositions: Optional[int] = None,
    max_degree: int = DEFAULT_MAX_INVOLUTION_DEGREE,
) -> Iterator[Permutation]:
    shapes = enumerate_involution_shapes(n, transpositions=transpositions, max_degree=max_degree)
    return (shape.to_permutation() for shape in shapes)
