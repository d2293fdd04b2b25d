"""Exhaustive enumeration of orientations, used as an independent check.

Nothing here shares code with the branch-and-bound solver: orientation
``mask`` simply reverses edge ``e`` when bit ``e`` is set, and all ``2**m``
masks are scored in vectorised chunks.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .errors import CapExceeded
from .graph import Graph

ORACLE_CAP = 22
_CHUNK = 1 << 18


def indegree_table(
    n: int,
    edges: Sequence[tuple[int, int]],
    masks: np.ndarray,
    offsets: Sequence[int] | None = None,
) -> np.ndarray:
    """Indegrees of every vertex (rows) under every mask (columns)."""
    table = np.zeros((n, masks.size), dtype=np.int16)
    if offsets is not None:
        table += np.asarray(offsets, dtype=np.int16)[:, None]
    for e, (u, v) in enumerate(edges):
        bit = ((masks >> e) & 1).astype(np.int16)
        table[u] += bit
        table[v] += 1 - bit
    return table


def _chunks(m: int) -> Iterator[np.ndarray]:
    total = 1 << m
    for start in range(0, total, _CHUNK):
        yield np.arange(start, min(total, start + _CHUNK), dtype=np.int64)


def _proper(table: np.ndarray, edges: Sequence[tuple[int, int]]) -> np.ndarray:
    ok = np.ones(table.shape[1], dtype=bool)
    for u, v in edges:
        ok &= table[u] != table[v]
    return ok


def brute_force_oracle(g: Graph, cap: int = ORACLE_CAP) -> int:
    """Minimum, over all proper orientations, of the maximum indegree."""
    if g.m > cap:
        raise CapExceeded(f"brute force: m={g.m} exceeds cap {cap}")
    if g.m == 0:
        return 0
    best = g.m + 1
    for masks in _chunks(g.m):
        table = indegree_table(g.n, g.edges, masks)
        ok = _proper(table, g.edges)
        if ok.any():
            best = min(best, int(table[:, ok].max(axis=0).min()))
    return best


def proper_orientation_masks(g: Graph, max_indeg: int, cap: int = ORACLE_CAP) -> np.ndarray:
    """Every mask giving a proper orientation with max indegree <= ``max_indeg``."""
    if g.m > cap:
        raise CapExceeded(f"brute force: m={g.m} exceeds cap {cap}")
    found = []
    for masks in _chunks(g.m):
        table = indegree_table(g.n, g.edges, masks)
        ok = _proper(table, g.edges) & (table.max(axis=0, initial=0) <= max_indeg)
        found.append(masks[ok])
    return np.concatenate(found) if found else np.zeros(0, dtype=np.int64)


def mask_to_directions(mask: int, m: int) -> list[bool]:
    return [bool((mask >> e) & 1) for e in range(m)]
