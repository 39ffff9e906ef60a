"""
Domain Models

Result value objects shared by the domain, application and interface layers.
Every model serialises through to_dict(); renderers build TSV/JSON from that.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from src.domain.errors import InvariantViolation
from src.domain.kneser import KneserParams


# =============================================================================
# ENUMS
# =============================================================================

class Family(str, Enum):
    KNESER = "Kneser"
    ODD = "Odd"
    LINE_OF_ODD = "LineOfOdd"


class Verdict(str, Enum):
    """Only one direction is ever proved; there is deliberately no CAYLEY member."""
    NON_CAYLEY = "NonCayley"
    UNRESOLVED = "Unresolved"


class TheoremTag(str, Enum):
    KNESER_ODD_N = "Thm2.1-I"
    KNESER_EVEN_N_EVEN_K = "Thm2.1-II"
    EVEN_ODD_GRAPH = "Thm2.8"
    LINE_OF_ODD_MOD4 = "Thm2.13"
    NONE = "None"


class SweepKind(str, Enum):
    EXHAUSTIVE = "Exhaustive"
    SAMPLED = "Sampled"


class SearchOutcome(str, Enum):
    NO_REGULAR_SUBGROUP = "NoRegularSubgroup"
    FOUND = "Found"
    SKIPPED = "Skipped"


# =============================================================================
# CLASSIFICATION
# =============================================================================

TSV_FIELDS = ("family", "n", "k", "order", "parity", "verdict", "theorem_tag")


@dataclass(frozen=True)
class Classification:
    """
    Verdict for one graph-family member.

    evidence holds the parity / mod-4 facts the verdict rests on; a NonCayley
    verdict must carry a theorem tag, an Unresolved one must not.
    """
    family: Family
    n: int
    k: int
    order: int
    verdict: Verdict
    theorem_tag: TheoremTag
    evidence: dict[str, Any] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.verdict is Verdict.NON_CAYLEY and self.theorem_tag is TheoremTag.NONE:
            raise InvariantViolation("A NonCayley verdict needs a theorem tag")
        if self.verdict is Verdict.UNRESOLVED and self.theorem_tag is not TheoremTag.NONE:
            raise InvariantViolation("An Unresolved verdict cannot cite a theorem")

    @property
    def parity(self) -> str:
        return "even" if self.order % 2 == 0 else "odd"

    @property
    def is_non_cayley(self) -> bool:
        return self.verdict is Verdict.NON_CAYLEY

    def row(self) -> dict[str, Any]:
        return {
            "family": self.family.value,
            "n": self.n,
            "k": self.k,
            "order": self.order,
            "parity": self.parity,
            "verdict": self.verdict.value,
            "theorem_tag": self.theorem_tag.value,
        }

    def to_dict(self) -> dict[str, Any]:
        data = self.row()
        data["evidence"] = dict(self.evidence)
        data["notes"] = list(self.notes)
        return data


# =============================================================================
# VERIFICATION
# =============================================================================

@dataclass(frozen=True, slots=True)
class SweepMode:
    """Exhaustive, or Sampled with a recorded seed and sample count."""
    kind: SweepKind
    seed: Optional[int] = None
    count: Optional[int] = None

    @classmethod
    def exhaustive(cls) -> "SweepMode":
        return cls(SweepKind.EXHAUSTIVE)

    @classmethod
    def sampled(cls, seed: int, count: int) -> "SweepMode":
        if count < 1:
            raise ValueError(f"Sample count must be positive, got {count}")
        return cls(SweepKind.SAMPLED, seed=seed, count=count)

    @property
    def is_exhaustive(self) -> bool:
        return self.kind is SweepKind.EXHAUSTIVE

    def __str__(self) -> str:
        if self.is_exhaustive:
            return self.kind.value
        return f"{self.kind.value}(seed={self.seed}, count={self.count})"

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "seed": self.seed, "count": self.count}


@dataclass(frozen=True)
class SweepFailure:
    permutation: str
    reason: str

    def to_dict(self) -> dict[str, str]:
        return {"permutation": self.permutation, "reason": self.reason}


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of sweeping involutions through one fixedness check."""
    params: KneserParams
    check: str
    mode: SweepMode
    involutions_checked: int
    failures: tuple[SweepFailure, ...] = ()
    elapsed_seconds: float = 0.0
    expected_count: Optional[int] = None

    def __post_init__(self):
        if self.mode.is_exhaustive and self.expected_count is not None:
            if self.involutions_checked != self.expected_count:
                raise InvariantViolation(
                    f"Exhaustive sweep checked {self.involutions_checked} involutions, "
                    f"closed form says {self.expected_count}"
                )

    @property
    def verified(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.params.n,
            "k": self.params.k,
            "check": self.check,
            "mode": self.mode.to_dict(),
            "involutions_checked": self.involutions_checked,
            "expected_count": self.expected_count,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_seconds": round(self.elapsed_seconds, 6),
            "verified": self.verified,
        }


@dataclass(frozen=True)
class SubgroupSearchResult:
    """Outcome of the bounded search for a subgroup of Sym([n]) acting regularly on k-subsets."""
    params: KneserParams
    target_order: int
    outcome: SearchOutcome
    subgroups_examined: int = 0
    generators: tuple[str, ...] = ()
    reason: str = ""
    even_order_subgroups: int = 0
    elapsed_seconds: float = 0.0

    def __post_init__(self):
        if self.outcome is SearchOutcome.FOUND and not self.generators:
            raise InvariantViolation("A Found outcome must list its generators")
        if self.outcome is SearchOutcome.SKIPPED and not self.reason:
            raise InvariantViolation("A Skipped outcome must give a reason")

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.params.n,
            "k": self.params.k,
            "target_order": self.target_order,
            "outcome": self.outcome.value,
            "subgroups_examined": self.subgroups_examined,
            "even_order_subgroups": self.even_order_subgroups,
            "generators": list(self.generators),
            "reason": self.reason,
            "elapsed_seconds": round(self.elapsed_seconds, 6),
        }
