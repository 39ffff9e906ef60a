"""
networkx materialisation of K(n, k) and its line graph.

Nodes are KSubset / EdgePair values. Both builders refuse graphs whose order
exceeds the materialisation threshold.
"""

import logging
from typing import Optional

import networkx as nx

from src.domain.errors import ResourceLimitError
from src.domain.kneser import KneserParams, iter_vertices, neighbours, vertex_count
from src.domain.linegraph import EdgePair, line_order
from src.infrastructure.config import get_limits_config

logger = logging.getLogger(__name__)


def _threshold(max_materialize: Optional[int]) -> int:
    return max_materialize if max_materialize is not None else get_limits_config().max_materialize


def kneser_graph(params: KneserParams, max_materialize: Optional[int] = None) -> nx.Graph:
    limit = _threshold(max_materialize)
    order = vertex_count(params)
    if order > limit:
        raise ResourceLimitError(f"{params} has {order} vertices, above the threshold {limit}")

    graph = nx.Graph(name=str(params))
    graph.add_nodes_from(iter_vertices(params))
    for u in iter_vertices(params):
        graph.add_edges_from((u, v) for v in neighbours(u) if u.mask < v.mask)
    logger.debug(f"Materialised {params}: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges")
    return graph


def line_graph(params: KneserParams, max_materialize: Optional[int] = None) -> nx.Graph:
    """L(K(n, k)) with nodes relabelled from networkx edge tuples to EdgePair values."""
    limit = _threshold(max_materialize)
    order = line_order(params)
    if order > limit:
        raise ResourceLimitError(f"L({params}) has {order} vertices, above the threshold {limit}")

    base = kneser_graph(params, max_materialize=limit)
    lg = nx.line_graph(base)
    return nx.relabel_nodes(lg, {edge: EdgePair.of(*edge) for edge in lg.nodes})
