"""
Domain Layer

Graph-theoretic and arithmetic core: binomial residues, permutations,
Kneser vertices, fixed-vertex witnesses, line graphs and result models.
No dependencies on external frameworks.
"""
