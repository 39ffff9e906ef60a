"""
Desk-Scale Verification Script

Runs every entry of a YAML sweep plan and prints one status line per instance.
Exits non-zero if any sweep reports a failure.

Usage:
    python scripts/run_desk_checks.py
    python scripts/run_desk_checks.py --plan data/sweeps/desk_scale.yaml
    python scripts/run_desk_checks.py --workers 4 --only fixed-vertex
"""

import argparse
import logging
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.application.cayleycheck import passed, run_plan_entry
from src.domain.errors import InvariantViolation, KneserError
from src.domain.models import VerificationReport
from src.infrastructure.config import get_config
from src.infrastructure.sweep_plan import PLAN_CHECKS, get_sweep_plan


def describe(result) -> str:
    if isinstance(result, VerificationReport):
        return (
            f"{result.check} {result.params} {result.mode}: "
            f"{result.involutions_checked} involutions, {len(result.failures)} failures "
            f"({result.elapsed_seconds:.2f}s)"
        )
    detail = f" ({result.reason})" if result.reason else ""
    return (
        f"regular-subgroup {result.params}: {result.outcome.value}{detail}, "
        f"{result.subgroups_examined} subgroups ({result.elapsed_seconds:.2f}s)"
    )


def main() -> int:
    parser = argparse.ArgumentParser(description="Run a desk-scale verification plan")
    parser.add_argument("--plan", type=str, default=None, help="Sweep plan YAML (default: KNESER_PLAN_PATH)")
    parser.add_argument("--only", choices=PLAN_CHECKS, default=None, help="Run entries of one check only")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes for exhaustive sweeps")
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args()

    logging.basicConfig(
        level=logging.INFO if args.verbose else get_config().log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    if args.workers is not None:
        get_config().sweep.workers = args.workers

    try:
        plan = get_sweep_plan(args.plan)
    except (FileNotFoundError, KneserError) as e:
        print(f"[ERROR] {e}")
        return 1

    print(f"{'='*60}")
    print(f"PLAN: {plan.name}")
    print(f"{'='*60}")

    failed = 0
    for entry in plan.entries:
        if args.only and entry.check != args.only:
            continue
        try:
            results = run_plan_entry(entry)
        except InvariantViolation as e:
            failed += 1
            print(f"[FAIL] {entry.check}: {e}")
            continue
        except KneserError as e:
            print(f"[SKIP] {entry.check}: {e}")
            continue
        for result in results:
            ok = passed(result)
            failed += not ok
            print(f"[{'OK' if ok else 'FAIL'}] {describe(result)}")

    print(f"\n{'='*60}")
    print("ALL CHECKS PASSED" if not failed else f"{failed} CHECK(S) FAILED")
    return 0 if not failed else 2


if __name__ == "__main__":
    sys.exit(main())
