"""
Interface Layer

Adapters for input/output.
Command-line interface and TSV/JSON renderers.
"""
