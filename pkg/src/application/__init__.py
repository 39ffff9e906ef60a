"""
Application Layer

Use cases and orchestration.
Contains the verification sweeps, the regular-subgroup search and the
classification table builders.
"""
