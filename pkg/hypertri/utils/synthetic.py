"""
Reproducible synthetic hypergraph streams for the bench harness and tests.
"""
from typing import Optional

import numpy as np

from ..core.exceptions import ConfigError
from ..core.hypergraph import Hyperedge, Hypergraph


def _check_sizes(universe: int, min_size: int, max_size: int):
    if not 1 <= min_size <= max_size:
        raise ConfigError(f"need 1 <= min_size <= max_size, got {min_size}..{max_size}")
    if max_size > universe:
        raise ConfigError(f"max_size {max_size} exceeds the vertex universe {universe}")


def _assemble(rng: np.random.Generator, sizes: np.ndarray, universe: int) -> Hypergraph:
    edges = []
    for arrival, size in enumerate(sizes, start=1):
        vertices = rng.choice(universe, size=int(size), replace=False)
        edges.append(Hyperedge.build(arrival, vertices.tolist()))
    return Hypergraph(tuple(edges))


def uniform_stream(edges: int, universe: int, min_size: int, max_size: int, seed: int = 0) -> Hypergraph:
    """
    Sizes uniform in [min_size, max_size]; members drawn without replacement
    from vertices [0, universe).
    """
    _check_sizes(universe, min_size, max_size)
    rng = np.random.default_rng(seed)
    sizes = rng.integers(min_size, max_size + 1, size=edges)
    return _assemble(rng, sizes, universe)


def heavy_tailed_stream(edges: int, universe: int, min_size: int, max_size: int,
                        exponent: float = 1.6, seed: int = 0,
                        exponent_end: Optional[float] = None) -> Hypergraph:
    """
    Sizes follow a Zipf law shifted to start at ``min_size``; draws beyond
    ``max_size`` are redrawn, so the result is a truncated Zipf.

    With ``exponent_end`` the exponent moves linearly from ``exponent`` at the
    first hyperedge to ``exponent_end`` at the last, so typical sizes drift.
    """
    _check_sizes(universe, min_size, max_size)
    for a in (exponent, exponent_end):
        if a is not None and a <= 1.0:
            raise ConfigError(f"Zipf exponent must be > 1, got {a}")
    rng = np.random.default_rng(seed)
    span = max_size - min_size + 1
    if exponent_end is None:
        a = exponent
    else:
        a = np.linspace(exponent, exponent_end, num=edges)
    sizes = rng.zipf(a=a, size=edges)
    overflow = sizes > span
    while overflow.any():
        redraw = a if np.isscalar(a) else a[overflow]
        sizes[overflow] = rng.zipf(a=redraw, size=int(overflow.sum()))
        overflow = sizes > span
    return _assemble(rng, sizes + (min_size - 1), universe)
