"""
Kneser Non-Cayley Certification Toolkit

Exact arithmetic, permutation machinery and constructive witnesses showing that
many Kneser graphs K(n, k), odd graphs O_{k+1} and line graphs L(O_{k+1}) are
vertex-transitive but not Cayley graphs, with desk-scale exhaustive checks.

Architecture:
    - src/domain: Pure mathematics (residues, permutations, subsets, witnesses)
    - src/application: Verification sweeps, subgroup search, classification tables
    - src/infrastructure: Configuration, sampling, networkx and YAML adapters
    - src/interfaces: CLI and renderers

Usage:
    from src.domain.witness import classify_odd
    from src.application.cayleycheck import verify_involutions_fix

    classify_odd(6).verdict          # Verdict.NON_CAYLEY
    verify_involutions_fix(KneserParams(7, 3)).involutions_checked   # 231
"""

__version__ = "1.0.0"
