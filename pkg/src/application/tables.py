"""
Classification Tables

Row generators behind `classify`: one Classification per family member over an
inclusive range, plus the linegraph-order summary rows.
"""

import re
from typing import Iterator

from src.domain.errors import ParseError
from src.domain.kneser import KneserParams, degree
from src.domain.linegraph import classify_line_odd, line_order
from src.domain.models import Classification
from src.domain.numth import binom_exact
from src.domain.witness import classify_kneser, classify_odd

_RANGE_RE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def parse_range(text: str) -> range:
    """Inclusive "A..B"."""
    match = _RANGE_RE.match(text)
    if not match:
        raise ParseError(f"Range must look like A..B, got {text!r}")
    low, high = int(match.group(1)), int(match.group(2))
    if low > high:
        raise ParseError(f"Empty range {text!r}: {low} > {high}")
    return range(low, high + 1)


def odd_rows(ks: range) -> Iterator[Classification]:
    for k in ks:
        yield classify_odd(k)


def line_odd_rows(ks: range) -> Iterator[Classification]:
    for k in ks:
        yield classify_line_odd(k)


def kneser_rows(n_max: int) -> Iterator[Classification]:
    """Every valid (n, k) with 5 <= n <= n_max, ordered by n then k."""
    for n in range(5, n_max + 1):
        for k in range(2, (n + 1) // 2):
            yield classify_kneser(n, k)


def linegraph_order_rows(ks: range) -> Iterator[dict]:
    for k in ks:
        params = KneserParams.odd(k)
        base = binom_exact(params.n, k)
        order = line_order(params)
        yield {
            "k": k,
            "n": params.n,
            "base_order": base,
            "degree": degree(params),
            "line_order": order,
            "parity": "even" if order % 2 == 0 else "odd",
            "base_order_mod_4": base % 4,
        }
