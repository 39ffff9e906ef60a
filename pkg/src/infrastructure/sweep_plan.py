"""
Sweep Plan Loader

YAML description of a batch of verification runs. A plan lists entries, each
naming a check, its sweep mode and the instances it covers:

    name: desk-scale
    entries:
      - check: fixed-vertex
        instances: [[5, 2], [7, 3]]
      - check: lifted-edge-pair
        mode: sampled
        seed: 11
        count: 200
        ks: [6]
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from src.domain.errors import ParseError
from src.domain.models import SweepMode
from src.infrastructure.config import get_config

logger = logging.getLogger(__name__)

PLAN_CHECKS = ("fixed-vertex", "disjoint-fixed-pair", "lifted-edge-pair", "regular-subgroup")


@dataclass
class PlanEntry:
    """One check run over a list of (n, k) instances, or over odd-graph ks."""
    check: str
    mode: SweepMode
    instances: tuple[tuple[int, int], ...] = ()
    ks: tuple[int, ...] = ()

    @classmethod
    def from_dict(cls, data: dict) -> "PlanEntry":
        check = data.get("check")
        if check not in PLAN_CHECKS:
            raise ParseError(f"Unknown check {check!r}; expected one of {', '.join(PLAN_CHECKS)}")

        mode_name = str(data.get("mode", "exhaustive")).lower()
        if mode_name == "exhaustive":
            mode = SweepMode.exhaustive()
        elif mode_name == "sampled":
            try:
                mode = SweepMode.sampled(int(data.get("seed", 0)), int(data.get("count", 0)))
            except ValueError as exc:
                raise ParseError(f"Bad sampled mode for {check}: {exc}") from exc
        else:
            raise ParseError(f"Unknown mode {mode_name!r} for {check}")

        try:
            instances = tuple((int(n), int(k)) for n, k in data.get("instances", []))
            ks = tuple(int(k) for k in data.get("ks", []))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"Bad instance list for {check}: {exc}") from exc

        if check == "lifted-edge-pair":
            if instances or not ks:
                raise ParseError("lifted-edge-pair entries list ks, not instances")
        elif ks or not instances:
            raise ParseError(f"{check} entries list [n, k] instances")
        return cls(check=check, mode=mode, instances=instances, ks=ks)


@dataclass
class SweepPlan:
    name: str
    description: str = ""
    entries: list[PlanEntry] = field(default_factory=list)

    @classmethod
    def from_file(cls, file_path: str) -> "SweepPlan":
        with open(file_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
        if not isinstance(data, dict):
            raise ParseError(f"Sweep plan {file_path} is not a mapping")
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SweepPlan":
        entries = [PlanEntry.from_dict(item) for item in data.get("entries", [])]
        if not entries:
            raise ParseError("Sweep plan has no entries")
        return cls(name=data.get("name", "unnamed"), description=data.get("description", ""), entries=entries)


class SweepPlanLoader:
    """
    Loader for sweep plans.

    Caches parsed plans by resolved path.
    """

    def __init__(self):
        self._cache: Dict[Path, SweepPlan] = {}

    def load(self, path: Optional[str] = None) -> SweepPlan:
        file_path = Path(path) if path else get_config().plan_path
        key = file_path.resolve()
        if key in self._cache:
            return self._cache[key]

        if not file_path.exists():
            raise FileNotFoundError(f"Sweep plan not found: {file_path}")
        plan = SweepPlan.from_file(str(file_path))
        logger.info(f"Loaded sweep plan {plan.name!r} with {len(plan.entries)} entries from {file_path}")
        self._cache[key] = plan
        return plan

    def clear_cache(self) -> None:
        self._cache.clear()


# Singleton loader instance
_loader: Optional[SweepPlanLoader] = None


def get_sweep_plan(path: Optional[str] = None) -> SweepPlan:
    global _loader
    if _loader is None:
        _loader = SweepPlanLoader()
    return _loader.load(path)
