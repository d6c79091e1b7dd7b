from typing import Optional

from ..core.config import settings
from ..core.exceptions import OracleLimitError
from ..core.hypergraph import Hypergraph, binom3, is_inclusion
from ..schemas.estimates import ExactCounts
from ..utils.logger import logger
from .engine import hybrid_contribution, outer_contribution

_CLASS_FIELDS = ("ttt", "ttc", "tcc", "ccc")


def exact_count(h: Hypergraph, edge_cap: Optional[int] = None) -> ExactCounts:
    """
    Brute-force counts over every edge, unordered edge pair and unordered
    pairwise-intersecting edge triple.

    Counting is per configuration: a vertex triple covered by two hyperedges
    contributes two inner triangles.

    :param h: the whole hypergraph, in memory
    :param edge_cap: refuse inputs with more edges (defaults to settings.oracle_edge_cap)
    :return: ExactCounts
    """
    cap = settings.oracle_edge_cap if edge_cap is None else edge_cap
    if len(h) > cap:
        logger.error("Exact count refused", edges=len(h), cap=cap)
        raise OracleLimitError(len(h), cap)

    edges = h.edges
    counts = {"inner": sum(binom3(len(e)) for e in edges), "hybrid": 0, "outer": 0, "ccc": 0, "tcc": 0, "ttc": 0, "ttt": 0}

    # shared[i] lists (j, I_ij) for j > i with a non-empty intersection
    n = len(edges)
    shared: list[dict[int, int]] = [dict() for _ in range(n)]
    for i in range(n):
        set_i = edges[i].vertex_set
        for j in range(i + 1, n):
            i_ij = len(set_i & edges[j].vertex_set)
            if i_ij:
                shared[i][j] = i_ij
                counts["hybrid"] += hybrid_contribution(edges[i], edges[j], i_ij)

    for i in range(n):
        e_i = edges[i]
        partners = sorted(shared[i].items())
        for a, (j, i_ij) in enumerate(partners):
            e_j = edges[j]
            for k, i_ik in partners[a + 1:]:
                i_jk = shared[j].get(k)
                if not i_jk:
                    continue
                e_k = edges[k]
                i_triple = len(e_i.vertex_set & e_j.vertex_set & e_k.vertex_set)
                counts["outer"] += outer_contribution(i_ij, i_ik, i_jk, i_triple)
                inclusions = (is_inclusion(i_ij, len(e_i), len(e_j))
                              + is_inclusion(i_ik, len(e_i), len(e_k))
                              + is_inclusion(i_jk, len(e_j), len(e_k)))
                counts[_CLASS_FIELDS[inclusions]] += 1

    return ExactCounts(**counts)
