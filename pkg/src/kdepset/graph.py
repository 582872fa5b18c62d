"""Immutable bipartite graph, edge-list I/O and the k-dependence predicate.

Vertices are dense 0-based integers. Edges are stored once, as ``(u, v)``
with ``u < v``, in lexicographic order; that canonical order is what makes
every downstream algorithm deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import cached_property
from typing import IO

import numpy as np

from . import _backend
from .errors import EdgeNotPresent, NotBipartite, ParseError

LEFT = 0
RIGHT = 1

Edge = tuple[int, int]


def _canonical(n: int, edges) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be pairs of vertex ids")
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError(f"vertex id out of range for n={n}")
    lo = arr.min(axis=1)
    hi = arr.max(axis=1)
    if np.any(lo == hi):
        raise ValueError(f"self-loop on vertex {int(lo[lo == hi][0])}")
    order = np.lexsort((hi, lo))
    lo, hi = lo[order], hi[order]
    dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
    if np.any(dup):
        i = int(np.flatnonzero(dup)[0])
        raise ValueError(f"duplicate edge ({int(lo[i])}, {int(hi[i])})")
    return lo, hi


def _odd_cycle(parent: np.ndarray, u: int, v: int) -> list[int]:
    up = [u]
    while parent[up[-1]] != -1:
        up.append(int(parent[up[-1]]))
    vp = [v]
    while parent[vp[-1]] != -1:
        vp.append(int(parent[vp[-1]]))
    on_up = {x: i for i, x in enumerate(up)}
    for j, x in enumerate(vp):
        if x in on_up:
            return up[: on_up[x] + 1] + vp[:j][::-1]
    raise AssertionError("conflict endpoints lie in different BFS trees")


class Graph:
    """Simple undirected graph with an optional 2-coloring.

    Args:
        n: number of vertices.
        edges: iterable of vertex pairs; order and orientation do not matter.
        require_bipartite: raise :class:`NotBipartite` (with an odd cycle as
            witness) when no 2-coloring exists. With ``False`` such graphs
            are accepted and :attr:`side` is ``None``.

    The 2-coloring is found by BFS; the lowest id of each connected
    component is Left, so isolated vertices are always Left.
    """

    def __init__(self, n: int, edges: Iterable[Edge] = (), *, require_bipartite: bool = True):
        if n < 0:
            raise ValueError("n must be non-negative")
        if not isinstance(edges, np.ndarray):
            edges = list(edges)
        u, v = _canonical(n, edges)
        self._init(n, u, v, None)
        color, parent, conflict = _backend.kernels.two_color(n, *self.csr)
        if conflict[0] == -1:
            self._side = color
        elif require_bipartite:
            raise NotBipartite(_odd_cycle(parent, *conflict))
        if self._side is not None:
            self._side.setflags(write=False)

    def _init(self, n, u, v, side):
        self._n = int(n)
        self._u = u
        self._v = v
        self._u.setflags(write=False)
        self._v.setflags(write=False)
        self._side = side

    @classmethod
    def _from_arrays(cls, n: int, u: np.ndarray, v: np.ndarray, side) -> Graph:
        # trusted: u < v, lexicographically sorted, no duplicates
        g = cls.__new__(cls)
        g._init(n, u, v, side)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return int(self._u.shape[0])

    @property
    def side(self) -> np.ndarray | None:
        """Per-vertex ``LEFT``/``RIGHT`` label, or ``None`` if not bipartite."""
        return self._side

    @property
    def is_bipartite(self) -> bool:
        return self._side is not None

    @property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return self._u, self._v

    @cached_property
    def edges(self) -> list[Edge]:
        return list(zip(self._u.tolist(), self._v.tolist()))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def edge_keys(self) -> np.ndarray:
        """``u * n + v`` for each canonical edge; sorted ascending."""
        return self._u * self._n + self._v

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` with each adjacency row sorted ascending."""
        src = np.concatenate([self._u, self._v])
        dst = np.concatenate([self._v, self._u])
        order = np.lexsort((dst, src))
        indices = np.ascontiguousarray(dst[order])
        indptr = np.zeros(self._n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=self._n), out=indptr[1:])
        indptr.setflags(write=False)
        indices.setflags(write=False)
        return indptr, indices

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.csr[0])

    def neighbors(self, v: int) -> list[int]:
        indptr, indices = self.csr
        return indices[indptr[v]: indptr[v + 1]].tolist()

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        key = u * self._n + v
        keys = self.edge_keys
        i = int(np.searchsorted(keys, key))
        return i < keys.shape[0] and int(keys[i]) == key

    def left(self) -> list[int]:
        self._need_bipartite()
        return np.flatnonzero(self._side == LEFT).tolist()

    def right(self) -> list[int]:
        self._need_bipartite()
        return np.flatnonzero(self._side == RIGHT).tolist()

    def bitmasks(self) -> list[int]:
        """Neighbor set of every vertex as an int bitmask (small graphs)."""
        masks = [0] * self._n
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return masks

    def keep_edges(self, mask: np.ndarray) -> Graph:
        """Subgraph on the same vertices keeping edges where ``mask`` is true."""
        return Graph._from_arrays(self._n, self._u[mask], self._v[mask], self._side)

    def _need_bipartite(self):
        if self._side is None:
            raise NotBipartite([])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self._n != other._n or not np.array_equal(self._u, other._u) \
                or not np.array_equal(self._v, other._v):
            return False
        if self._side is None or other._side is None:
            return self._side is other._side
        return bool(np.array_equal(self._side, other._side))

    __hash__ = None

    def __repr__(self) -> str:
        kind = "bipartite" if self.is_bipartite else "general"
        return f"Graph(n={self._n}, m={self.m}, {kind})"


def remove_edges(g: Graph, removed: Iterable[Edge]) -> Graph:
    """Return ``g`` without the edges in ``removed``; vertices and sides are kept.

    Raises:
        EdgeNotPresent: if some pair in ``removed`` is not an edge of ``g``.
    """
    pairs = np.asarray(list(removed), dtype=np.int64).reshape(-1, 2)
    if pairs.shape[0] == 0:
        return g
    lo = pairs.min(axis=1)
    hi = pairs.max(axis=1)
    keys = lo * g.n + hi
    bad = (lo < 0) | (hi >= g.n) | ~np.isin(keys, g.edge_keys)
    if np.any(bad):
        i = int(np.flatnonzero(bad)[0])
        raise EdgeNotPresent((int(pairs[i, 0]), int(pairs[i, 1])))
    return g.keep_edges(~np.isin(g.edge_keys, keys))


def _member_mask(g: Graph, s: Iterable[int]) -> np.ndarray:
    ids = np.fromiter(s, dtype=np.int64)
    if ids.size and (ids.min() < 0 or ids.max() >= g.n):
        raise ValueError(f"vertex id out of range for n={g.n}")
    mask = np.zeros(g.n, dtype=bool)
    mask[ids] = True
    return mask


def induced_degrees(g: Graph, s: Iterable[int]) -> dict[int, int]:
    """Degree of each member of ``s`` inside the subgraph of ``g`` induced by ``s``."""
    mask = _member_mask(g, s)
    u, v = g.edge_arrays
    inside = mask[u] & mask[v]
    deg = np.bincount(np.concatenate([u[inside], v[inside]]), minlength=g.n)
    members = np.flatnonzero(mask)
    return dict(zip(members.tolist(), deg[members].tolist()))


def is_k_dependent(g: Graph, s: Iterable[int], k: int) -> bool:
    """True iff no vertex of ``s`` has more than ``k`` neighbors inside ``s``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    degs = induced_degrees(g, s)
    return max(degs.values(), default=0) <= k


# -- text formats -----------------------------------------------------------

def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", lineno) from None


def parse_edge_list(source: str | IO[str], *, require_bipartite: bool = True) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v``.

    ``#`` lines and blank lines are ignored.

    Raises:
        ParseError: malformed line, id out of range, self-loop, duplicate
            edge, or edge count mismatch.
        NotBipartite: the graph has an odd cycle (only when
            ``require_bipartite``).
    """
    text = source if isinstance(source, str) else source.read()
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    edges = []
    seen = set()
    for lineno, line in lines:
        a, b = _ints(line, lineno, 2)
        if len(edges) == m:
            raise ParseError(f"more than m={m} edge lines", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if a == b:
            raise ParseError(f"self-loop on vertex {a}", lineno)
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges, require_bipartite=require_bipartite)


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.n} {g.m}")
    u, v = g.edge_arrays
    out.extend(f"{a} {b}" for a, b in zip(u.tolist(), v.tolist()))
    return "\n".join(out) + "\n"


def read_graph(path, *, require_bipartite: bool = True) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh, require_bipartite=require_bipartite)


def write_graph(path, g: Graph, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g, comments))


def format_solution(vertices: Iterable[int]) -> str:
    """One vertex id per line, ascending."""
    return "".join(f"{v}\n" for v in sorted(vertices))


def parse_solution(source: str | IO[str]) -> frozenset[int]:
    text = source if isinstance(source, str) else source.read()
    out = set()
    for lineno, line in _data_lines(text):
        (v,) = _ints(line, lineno, 1)
        if v in out:
            raise ParseError(f"vertex {v} listed twice", lineno)
        out.add(v)
    return frozenset(out)
