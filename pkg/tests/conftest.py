import random
from itertools import combinations
from pathlib import Path

import pytest

from hypertri.core.hypergraph import Hypergraph
from hypertri.schemas.estimates import ExactCounts


# Three edges in a chain: pairs (1,2) and (2,3) share two vertices, the triple shares vertex 3
CHAIN = [[1, 2, 3], [2, 3, 4], [3, 4, 5]]

# One proper subset pair plus two single-vertex overlaps
NESTED = [[1, 2, 3], [2, 3], [3, 4]]


@pytest.fixture
def chain_hypergraph() -> Hypergraph:
    return Hypergraph.from_vertex_sets(CHAIN)


@pytest.fixture
def nested_hypergraph() -> Hypergraph:
    return Hypergraph.from_vertex_sets(NESTED)


def random_hypergraph(rng: random.Random, max_edges: int = 12, max_vertices: int = 8,
                      min_size: int = 1, max_size: int = 6) -> Hypergraph:
    """Small random hypergraph for property checks."""
    edges = rng.randint(1, max_edges)
    vertex_sets = []
    for _ in range(edges):
        size = rng.randint(min_size, min(max_size, max_vertices))
        vertex_sets.append(rng.sample(range(max_vertices), size))
    return Hypergraph.from_vertex_sets(vertex_sets)


@pytest.fixture
def random_hypergraphs():
    """Factory: ``count`` random hypergraphs from a fixed seed."""
    def build(count: int, seed: int = 7, **kwargs) -> list[Hypergraph]:
        rng = random.Random(seed)
        return [random_hypergraph(rng, **kwargs) for _ in range(count)]
    return build


def enumerate_configurations(h: Hypergraph) -> ExactCounts:
    """
    Independent counter: lists every configuration explicitly instead of
    using the closed-form contributions.
    """
    edges = [e.vertex_set for e in h]
    inner = sum(1 for e in edges for _ in combinations(sorted(e), 3))

    hybrid = 0
    for a, b in combinations(edges, 2):
        shared = a & b
        exclusive = a ^ b
        hybrid += sum(1 for _ in combinations(sorted(shared), 2)) * len(exclusive)

    outer = 0
    classes = {0: 0, 1: 0, 2: 0, 3: 0}
    for a, b, c in combinations(edges, 3):
        if not (a & b and a & c and b & c):
            continue
        for _x in (a & b) - c:
            for _y in (a & c) - b:
                for _z in (b & c) - a:
                    outer += 1
        inclusions = sum(1 for p, q in ((a, b), (a, c), (b, c)) if p <= q or q <= p)
        classes[inclusions] += 1

    return ExactCounts(inner=inner, hybrid=hybrid, outer=outer,
                       ttt=classes[0], ttc=classes[1], tcc=classes[2], ccc=classes[3])


@pytest.fixture
def write_stream(tmp_path):
    """Write vertex lists in the line format and return the path."""
    def write(vertex_sets, name: str = "stream.txt", header: str = "") -> Path:
        path = tmp_path / name
        body = "".join(" ".join(str(v) for v in vs) + "\n" for vs in vertex_sets)
        path.write_text(header + body, encoding="utf-8")
        return path
    return write


@pytest.fixture
def configuration_counter():
    return enumerate_configurations
