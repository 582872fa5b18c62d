"""Seeded random graph families used by the CLI, sweeps and benchmarks."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def _split(n: int) -> tuple[int, int]:
    left = (n + 1) // 2
    return left, n - left


def _pairs_from_cells(cells: np.ndarray, cols: int, offset: int) -> np.ndarray:
    cells = np.sort(cells)
    return np.stack([cells // cols, offset + cells % cols], axis=1)


def random_bipartite(n: int, p: float, seed: int) -> Graph:
    """Bipartite Erdos-Renyi graph: Left ``0..ceil(n/2)-1``, Right the rest.

    Every Left-Right pair is an edge independently with probability ``p``.
    Sampled as a binomial edge count followed by a uniform choice of that
    many distinct pairs, which has the same distribution and stays cheap
    when ``n`` is large and ``p`` tiny.
    """
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    left, right = _split(n)
    cells = left * right
    count = int(rng.binomial(cells, p)) if cells else 0
    chosen = rng.choice(cells, size=count, replace=False) if count else np.empty(0, np.int64)
    return Graph(n, _pairs_from_cells(chosen.astype(np.int64), max(right, 1), left))


def random_bipartite_m(n: int, m: int, seed: int) -> Graph:
    """Bipartite graph with exactly ``m`` edges chosen uniformly among Left-Right pairs."""
    left, right = _split(n)
    if not 0 <= m <= left * right:
        raise ValueError(f"m must lie in 0..{left * right}")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(left * right, size=m, replace=False) if m else np.empty(0, np.int64)
    return Graph(n, _pairs_from_cells(chosen.astype(np.int64), max(right, 1), left))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) on all vertex pairs; may be non-bipartite."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.shape[0]) < p
    return Graph(n, np.stack([iu[keep], ju[keep]], axis=1), require_bipartite=False)
