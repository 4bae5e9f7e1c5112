"""The linear structure of the color-switching game.

Colorings of the edges by two colors are vectors in GF(2)^{|E|}.  A vertex
move adds a row of the incidence matrix, a face move adds a row of the
dual incidence matrix, so equivalence classes are the cosets of the sum
of the two row spaces (the cocycle spaces U and U*).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gf2
from .embedded import EmbeddedGraph
from .gf2 import GF2Matrix


@dataclass(frozen=True)
class SpaceSummary:
    """Dimension bookkeeping for one graph, plus the resulting class count."""

    vertex_count: int
    edge_count: int
    face_count: int
    genus: int
    dim_cocycle: int
    dim_dual_cocycle: int
    dim_cycle: int
    dim_sum: int
    dim_intersection: int
    bicycle_dim: int
    class_exponent: int

    @property
    def class_count(self) -> int:
        return 1 << self.class_exponent


def cocycle_space(g: EmbeddedGraph) -> GF2Matrix:
    """Generators of the cut space U: the incidence matrix rows."""
    return g.incidence_matrix


def dual_cocycle_space(g: EmbeddedGraph) -> GF2Matrix:
    """Generators of U*: the dual incidence matrix rows."""
    return g.dual_incidence_matrix


def cycle_space(g: EmbeddedGraph) -> GF2Matrix:
    """Basis of the cycle space, the kernel of the incidence matrix."""
    return gf2.kernel_basis(g.incidence_matrix)


def bicycle_space(g: EmbeddedGraph) -> GF2Matrix:
    """Basis of the bicycle space, the intersection of cut and cycle space."""
    return gf2.row_space_intersection_basis(g.incidence_matrix, cycle_space(g))


@lru_cache(maxsize=256)
def moves_matrix(g: EmbeddedGraph) -> GF2Matrix:
    """All move generators stacked: incidence rows over dual incidence rows."""
    return gf2.stack(g.incidence_matrix, g.dual_incidence_matrix)


def coloring_from_string(g: EmbeddedGraph, bits: str) -> int:
    if len(bits) != g.edge_count:
        raise ValueError(f"coloring must have length {g.edge_count}, got {len(bits)}")
    return gf2.vector_from_string(bits)


def coloring_to_string(g: EmbeddedGraph, w: int) -> str:
    return gf2.vector_to_string(w, g.edge_count)


def apply_vertex_move(g: EmbeddedGraph, w: int, vertex: int) -> int:
    """Switch the colors of all non-loop edges at the vertex."""
    if not 0 <= vertex < g.vertex_count:
        raise IndexError(f"vertex index {vertex} out of range")
    return w ^ g.incidence_matrix.rows[vertex]


def apply_face_move(g: EmbeddedGraph, w: int, face: int) -> int:
    """Switch the colors of the edges appearing once on the face boundary."""
    if not 0 <= face < g.face_count:
        raise IndexError(f"face index {face} out of range")
    return w ^ g.dual_incidence_matrix.rows[face]


def class_exponent(g: EmbeddedGraph) -> int:
    """log2 of the class count: the codimension of U + U*."""
    return g.edge_count - gf2.rank(moves_matrix(g))


def class_count_direct(g: EmbeddedGraph) -> int:
    """Number of equivalence classes, counted by linear algebra alone."""
    return 1 << class_exponent(g)


def same_class(g: EmbeddedGraph, w1: int, w2: int) -> bool:
    """True iff the two colorings differ by a sequence of moves."""
    for w in (w1, w2):
        if w < 0 or w >> g.edge_count:
            raise ValueError("coloring length does not match the edge count")
    return gf2.in_row_space(moves_matrix(g), w1 ^ w2)


@lru_cache(maxsize=256)
def signature_basis(g: EmbeddedGraph) -> GF2Matrix:
    """Canonical basis of (U + U*)^perp, the dual side of the class space.

    Taken in reduced echelon form so signatures are stable across runs.
    """
    return gf2.rref(gf2.kernel_basis(moves_matrix(g)))[0]


def class_signature(g: EmbeddedGraph, w: int) -> int:
    """Complete class invariant: inner products of w with the signature basis.

    Two colorings have equal signatures iff ``same_class`` holds.
    """
    sig = 0
    for i, z in enumerate(signature_basis(g).rows):
        if gf2.dot(z, w):
            sig |= 1 << i
    return sig


def bot_matrix(g: EmbeddedGraph, vertex: int | None = None, face: int | None = None) -> GF2Matrix:
    """Both incidence matrices stacked with one row deleted from each.

    This is the adjacency description of the balanced overlaid Tait graph
    obtained by deleting the chosen vertex, an incident face, and their
    edges.  Deleting any incident pair leaves the row space U + U*.
    Defaults: the lowest-index vertex and its lowest-index incident face.
    """
    if vertex is None:
        vertex = 0
    if not 0 <= vertex < g.vertex_count:
        raise IndexError(f"vertex index {vertex} out of range")
    face_of = g.faces.face_of_dart
    incident = sorted({face_of[d] for d in g.rotations[vertex]})
    if not incident:
        incident = list(range(g.face_count))  # edgeless graph: every face qualifies
    if face is None:
        face = incident[0]
    if not 0 <= face < g.face_count:
        raise IndexError(f"face index {face} out of range")
    if face not in incident:
        raise ValueError(f"face {face} is not incident to vertex {vertex}")
    rows = tuple(r for i, r in enumerate(g.incidence_matrix.rows) if i != vertex)
    dual_rows = tuple(r for i, r in enumerate(g.dual_incidence_matrix.rows) if i != face)
    return GF2Matrix(g.edge_count, rows + dual_rows)


def summarize(g: EmbeddedGraph) -> SpaceSummary:
    inc = g.incidence_matrix
    dual_inc = g.dual_incidence_matrix
    dim_u = gf2.rank(inc)
    dim_us = gf2.rank(dual_inc)
    dim_sum = gf2.row_space_sum_dim(inc, dual_inc)
    return SpaceSummary(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        face_count=g.face_count,
        genus=g.genus,
        dim_cocycle=dim_u,
        dim_dual_cocycle=dim_us,
        dim_cycle=g.edge_count - dim_u,
        dim_sum=dim_sum,
        dim_intersection=dim_u + dim_us - dim_sum,
        bicycle_dim=bicycle_space(g).nrows,
        class_exponent=g.edge_count - dim_sum,
    )
