"""Bipartite maximum matching, Konig vertex cover and maximum independent set."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import numpy as np

from . import _backend
from .errors import InvalidMatching, NotBipartite, NotMaximumMatching, ParseError
from .graph import LEFT, RIGHT, Edge, Graph, _data_lines, _ints


class Matching:
    """A set of pairwise vertex-disjoint vertex pairs.

    Pairs are normalized to ``(min, max)`` and kept sorted. Building a
    ``Matching`` from pairs that share a vertex raises ``InvalidMatching``;
    whether the pairs are edges of some graph is checked separately by
    :func:`verify_matching`.
    """

    __slots__ = ("_pairs", "_partner")

    def __init__(self, pairs: Iterable[Edge] = ()):
        canon = sorted({(a, b) if a < b else (b, a) for a, b in pairs})
        partner: dict[int, int] = {}
        for a, b in canon:
            if a == b:
                raise InvalidMatching(f"pair ({a}, {b}) is a self-loop")
            if a in partner or b in partner:
                shared = a if a in partner else b
                raise InvalidMatching(f"vertex {shared} is covered twice")
            partner[a] = b
            partner[b] = a
        self._pairs = tuple(canon)
        self._partner = partner

    @classmethod
    def from_mate(cls, mate: np.ndarray) -> Matching:
        """Build from a partner array (``-1`` = unmatched), as the kernels return."""
        mate = np.asarray(mate, dtype=np.int64)
        lo = np.flatnonzero(mate > np.arange(mate.shape[0]))
        m = cls.__new__(cls)
        m._pairs = tuple(zip(lo.tolist(), mate[lo].tolist()))
        m._partner = None
        return m

    @property
    def pairs(self) -> tuple[Edge, ...]:
        return self._pairs

    def partner(self, v: int) -> int | None:
        if self._partner is None:
            self._partner = {}
            for a, b in self._pairs:
                self._partner[a] = b
                self._partner[b] = a
        return self._partner.get(v)

    def mate_array(self, n: int) -> np.ndarray:
        mate = np.full(n, -1, dtype=np.int64)
        if self._pairs:
            arr = np.asarray(self._pairs, dtype=np.int64)
            mate[arr[:, 0]] = arr[:, 1]
            mate[arr[:, 1]] = arr[:, 0]
        return mate

    def __len__(self) -> int:
        return len(self._pairs)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._pairs)

    def __contains__(self, pair) -> bool:
        a, b = pair
        return self.partner(a) == b

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self) -> str:
        return f"Matching({list(self._pairs)!r})"


def _require_bipartite(g: Graph) -> None:
    if not g.is_bipartite:
        raise NotBipartite([])


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching of a bipartite graph (Hopcroft-Karp).

    Deterministic: Left vertices and adjacency rows are scanned in ascending
    id order, so equal graphs always produce the same matching.
    """
    _require_bipartite(g)
    if g.m == 0:
        return Matching()
    mate = _backend.kernels.hopcroft_karp(g.n, *g.csr, g.side)
    return Matching.from_mate(mate)


def verify_matching(g: Graph, pairs: Iterable[Edge]) -> bool:
    """True iff every pair is an edge of ``g`` and no two pairs share a vertex."""
    arr = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
    if arr.shape[0] == 0:
        return True
    if arr.min() < 0 or arr.max() >= g.n:
        return False
    flat = arr.ravel()
    if np.unique(flat).shape[0] != flat.shape[0]:
        return False
    keys = arr.min(axis=1) * g.n + arr.max(axis=1)
    edge_keys = g.edge_keys
    pos = np.searchsorted(edge_keys, keys)
    pos[pos == edge_keys.shape[0]] = 0
    return bool(edge_keys.shape[0] and np.all(edge_keys[pos] == keys))


def verify_cover(g: Graph, cover: Iterable[int]) -> bool:
    """True iff every edge of ``g`` has an endpoint in ``cover``."""
    mask = np.zeros(g.n, dtype=bool)
    ids = np.fromiter(cover, dtype=np.int64)
    if ids.size and (ids.min() < 0 or ids.max() >= g.n):
        return False
    mask[ids] = True
    u, v = g.edge_arrays
    return bool(np.all(mask[u] | mask[v]))


def _alternating_reach(g: Graph, m: Matching) -> tuple[np.ndarray, int]:
    _require_bipartite(g)
    if not verify_matching(g, m):
        raise InvalidMatching("pairs are not a matching of this graph")
    return _backend.kernels.alternating_reach(g.n, *g.csr, g.side, m.mate_array(g.n))


def is_maximum_matching(g: Graph, m: Matching) -> bool:
    """True iff ``m`` is a matching of ``g`` with no augmenting path."""
    if not verify_matching(g, m):
        return False
    _, aug = _alternating_reach(g, m)
    return aug == -1


def konig_cover(g: Graph, m: Matching) -> frozenset[int]:
    """Minimum vertex cover built from a maximum matching.

    With ``Z`` the set of vertices reachable from unmatched Left vertices by
    alternating paths, the cover is ``(Left - Z) | (Right & Z)`` and has
    exactly ``len(m)`` vertices.

    Raises:
        InvalidMatching: ``m`` is not a matching of ``g``.
        NotMaximumMatching: the search reached an unmatched Right vertex.
    """
    reached, aug = _alternating_reach(g, m)
    if aug != -1:
        raise NotMaximumMatching(f"augmenting path ends at vertex {aug}")
    side = g.side
    in_z = reached.astype(bool)
    cover = np.flatnonzero(((side == LEFT) & ~in_z) | ((side == RIGHT) & in_z))
    assert cover.shape[0] == len(m)
    return frozenset(cover.tolist())


def independent_set_from_matching(g: Graph, m: Matching) -> frozenset[int]:
    """Complement of :func:`konig_cover`; a maximum independent set of ``g``."""
    keep = np.ones(g.n, dtype=bool)
    keep[np.fromiter(konig_cover(g, m), dtype=np.int64)] = False
    return frozenset(np.flatnonzero(keep).tolist())


def max_independent_set(g: Graph) -> frozenset[int]:
    """Maximum independent set of a bipartite graph; size ``n - nu(g)``."""
    return independent_set_from_matching(g, max_matching(g))


def format_matchings(rounds: Iterable[Iterable[Edge]]) -> str:
    """Sidecar format: a ``k`` line, then per round a size line and its pairs."""
    rounds = [list(r) for r in rounds]
    out = [str(len(rounds))]
    for r in rounds:
        out.append(str(len(r)))
        out.extend(f"{a} {b}" for a, b in r)
    return "\n".join(out) + "\n"


def parse_matchings(source) -> list[Matching]:
    """Inverse of :func:`format_matchings`; ``#`` comments and blank lines are skipped."""
    text = source if isinstance(source, str) else source.read()
    lines = _data_lines(text)

    def take(count):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError("unexpected end of matchings file") from None
        return _ints(line, lineno, count), lineno

    (k,), lineno = take(1)
    if k < 0:
        raise ParseError("round count must be non-negative", lineno)
    rounds = []
    for _ in range(k):
        (size,), lineno = take(1)
        if size < 0:
            raise ParseError("matching size must be non-negative", lineno)
        pairs = [tuple(take(2)[0]) for _ in range(size)]
        try:
            rounds.append(Matching(pairs))
        except InvalidMatching as exc:
            raise ParseError(f"round {len(rounds) + 1}: {exc}", lineno) from None
    extra = next(lines, None)
    if extra is not None:
        raise ParseError("trailing data after last round", extra[0])
    return rounds
