"""Ground truth by brute force: sweep every coloring, close under moves.

This module deliberately avoids the linear-algebra machinery.  Orbits are
computed by plain BFS closure under the move generators (one per vertex
and one per face), so the census is an independent referee for both
counting routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedded import EmbeddedGraph
from .errors import EdgeCapError, InternalInvariantError

DEFAULT_EDGE_CAP = 22


@dataclass(frozen=True)
class OrbitCensus:
    """Orbit partition of all 2^|E| colorings under the two moves."""

    edge_count: int
    class_count: int
    orbit_size: int
    representatives: tuple[int, ...]


def _generators(g: EmbeddedGraph) -> list[int]:
    gens = set(g.incidence_matrix.rows) | set(g.dual_incidence_matrix.rows)
    gens.discard(0)
    return sorted(gens)


def orbit_of(g: EmbeddedGraph, w: int, edge_cap: int = DEFAULT_EDGE_CAP) -> frozenset[int]:
    """All colorings reachable from w by vertex and face moves."""
    m = g.edge_count
    if m > edge_cap:
        raise EdgeCapError(f"{m} edges exceeds the sweep cap {edge_cap}")
    if w < 0 or w >> m:
        raise ValueError("coloring length does not match the edge count")
    gens = _generators(g)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for gen in gens:
                v = u ^ gen
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def enumerate_classes(g: EmbeddedGraph, edge_cap: int = DEFAULT_EDGE_CAP) -> OrbitCensus:
    """Sweep all colorings and report the orbit census.

    Representatives are the lexicographically smallest colorings of their
    orbits (equivalently: smallest as integers, since the sweep ascends).
    All orbits must share one size; anything else is reported as a bug.
    """
    m = g.edge_count
    if m > edge_cap:
        raise EdgeCapError(f"{m} edges exceeds the sweep cap {edge_cap}")
    gens = _generators(g)
    total = 1 << m
    visited = bytearray(total)
    representatives = []
    orbit_size = None
    for w in range(total):
        if visited[w]:
            continue
        representatives.append(w)
        size = 0
        frontier = [w]
        visited[w] = 1
        while frontier:
            nxt = []
            for u in frontier:
                size += 1
                for gen in gens:
                    v = u ^ gen
                    if not visited[v]:
                        visited[v] = 1
                        nxt.append(v)
            frontier = nxt
        if orbit_size is None:
            orbit_size = size
        elif orbit_size != size:
            raise InternalInvariantError("orbits of unequal size found")
    assert orbit_size is not None
    if orbit_size * len(representatives) != total:
        raise InternalInvariantError("orbit census does not cover the coloring space")
    return OrbitCensus(m, len(representatives), orbit_size, tuple(representatives))
