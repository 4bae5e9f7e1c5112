"""Counting classes through the first homology of the surface.

A spanning tree T of the graph together with a co-tree C (a spanning tree
of the dual avoiding the duals of T) leaves exactly 2g edges.  Each
leftover edge closes a unique cycle inside the co-tree; pairing cycles of
the graph with these 2g dual fundamental cycles realizes the projection
from the cycle space onto H_1 of the surface over GF(2), whose kernel is
the dual cut space.  Restricted to the strand space of the medial graph
the kernel dimension b yields the class count 2^(2g + b).
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from . import gf2
from .embedded import EmbeddedGraph
from .errors import InternalInvariantError
from .gf2 import GF2Matrix
from .medial import strand_space, trace_medial


@dataclass(frozen=True)
class TreeCotree:
    """A spanning tree, a disjoint dual spanning tree, and the 2g leftovers."""

    tree_edges: tuple[int, ...]
    cotree_edges: tuple[int, ...]
    leftover_edges: tuple[int, ...]


@dataclass(frozen=True)
class HomologyMap:
    """The dual fundamental cycles, one per leftover edge, as edge bitsets."""

    edge_count: int
    cycles: tuple[int, ...]

    def cycle_matrix(self) -> GF2Matrix:
        return GF2Matrix(self.edge_count, self.cycles)


def _spanning_tree(
    vertex_count: int,
    endpoints: list[tuple[int, int]],
    allowed: list[int],
    rng: Random | None,
) -> list[int]:
    """Grow a spanning tree from vertex 0 using only the allowed edges.

    Candidates are scanned lowest edge index first; with an rng the
    candidate order is shuffled per step, which reaches every possible
    tree choice while keeping the result a valid tree.
    """
    reached = [False] * vertex_count
    reached[0] = True
    tree: list[int] = []
    in_tree: set[int] = set()
    while len(tree) < vertex_count - 1:
        candidates = [
            j for j in allowed
            if j not in in_tree and reached[endpoints[j][0]] != reached[endpoints[j][1]]
        ]
        if not candidates:
            return tree  # caller decides whether a partial tree is an error
        j = candidates[0] if rng is None else rng.choice(candidates)
        tree.append(j)
        in_tree.add(j)
        u, w = endpoints[j]
        reached[u] = reached[w] = True
    return tree


def tree_cotree(
    g: EmbeddedGraph,
    tree_edges: tuple[int, ...] | None = None,
    rng: Random | None = None,
) -> TreeCotree:
    """Choose T, C and the 2g leftover edges.

    By default T is grown deterministically (lowest edge index first);
    pass ``tree_edges`` to replay a specific spanning tree, or ``rng``
    for randomized tie-breaking.  The co-tree always exists for a
    cellular embedding; failure to span the dual is reported as an
    internal error.
    """
    nv = g.vertex_count
    endpoints = [g.edge_endpoints(j) for j in range(g.edge_count)]
    if tree_edges is not None:
        tree = sorted(set(int(j) for j in tree_edges))
        if len(tree) != len(tuple(tree_edges)):
            raise ValueError("repeated edge in the supplied spanning tree")
        for j in tree:
            if not 0 <= j < g.edge_count:
                raise ValueError(f"edge index {j} out of range")
        if len(tree) != nv - 1:
            raise ValueError(f"a spanning tree needs {nv - 1} edges, got {len(tree)}")
        check = _spanning_tree(nv, endpoints, tree, None)
        if len(check) != nv - 1:
            raise ValueError("supplied edges do not form a spanning tree")
    else:
        tree = _spanning_tree(nv, endpoints, list(range(g.edge_count)), rng)
        if len(tree) != nv - 1:
            raise InternalInvariantError("failed to span a connected graph")

    dual = g.dual()
    dual_endpoints = [dual.edge_endpoints(j) for j in range(g.edge_count)]
    tree_set = set(tree)
    allowed = [j for j in range(g.edge_count) if j not in tree_set]
    cotree = _spanning_tree(dual.vertex_count, dual_endpoints, allowed, rng)
    if len(cotree) != dual.vertex_count - 1:
        raise InternalInvariantError("co-tree failed to span the dual graph")
    used = tree_set | set(cotree)
    leftover = tuple(j for j in range(g.edge_count) if j not in used)
    if len(leftover) != 2 * g.genus:
        raise InternalInvariantError(
            f"expected {2 * g.genus} leftover edges, found {len(leftover)}"
        )
    return TreeCotree(tuple(sorted(tree)), tuple(sorted(cotree)), leftover)


def fundamental_dual_cycles(g: EmbeddedGraph, tc: TreeCotree) -> HomologyMap:
    """For each leftover edge, the unique cycle it closes in the co-tree."""
    dual = g.dual()
    adjacency: dict[int, list[tuple[int, int]]] = {v: [] for v in range(dual.vertex_count)}
    for j in tc.cotree_edges:
        u, w = dual.edge_endpoints(j)
        adjacency[u].append((w, j))
        adjacency[w].append((u, j))
    cycles = []
    for j in tc.leftover_edges:
        u, w = dual.edge_endpoints(j)
        cycle = 1 << j
        if u != w:
            # path from u to w inside the co-tree (DFS; the tree is tiny)
            stack = [(u, -1, 0)]
            path_bits = None
            while stack:
                node, parent_edge, bits = stack.pop()
                if node == w:
                    path_bits = bits
                    break
                for nxt, edge in adjacency[node]:
                    if edge != parent_edge:
                        stack.append((nxt, edge, bits | (1 << edge)))
            if path_bits is None:
                raise InternalInvariantError("co-tree does not connect the dual endpoints")
            cycle |= path_bits
        cycles.append(cycle)
    return HomologyMap(g.edge_count, tuple(cycles))


def homology_image(g: EmbeddedGraph, hm: HomologyMap, u: int) -> int:
    """Image of a cycle u in H_1: inner products with the fundamental cycles.

    The formula is only well defined on the cycle space, so membership is
    checked rather than trusted.
    """
    if u < 0 or u >> g.edge_count:
        raise ValueError("vector length does not match the edge count")
    for row in g.incidence_matrix.rows:
        if gf2.dot(row, u):
            raise ValueError("vector is not in the cycle space")
    image = 0
    for i, p in enumerate(hm.cycles):
        if gf2.dot(p, u):
            image |= 1 << i
    return image


def strand_image_matrix(
    g: EmbeddedGraph, tc: TreeCotree | None = None
) -> tuple[GF2Matrix, GF2Matrix]:
    """(strand basis, its homology images); rows correspond pairwise."""
    if tc is None:
        tc = tree_cotree(g)
    hm = fundamental_dual_cycles(g, tc)
    basis = strand_space(trace_medial(g))
    images = tuple(homology_image(g, hm, v) for v in basis.rows)
    return basis, GF2Matrix(len(tc.leftover_edges), images)


def strand_kernel_dim(g: EmbeddedGraph, tc: TreeCotree | None = None) -> int:
    """b: dimension of the homology kernel restricted to the strand space."""
    basis, images = strand_image_matrix(g, tc)
    return basis.nrows - gf2.rank(images)


def strand_kernel_basis(g: EmbeddedGraph, tc: TreeCotree | None = None) -> GF2Matrix:
    """Basis (in edge coordinates) of the strand vectors that die in homology."""
    basis, images = strand_image_matrix(g, tc)
    kernel_coeffs = gf2.kernel_basis(gf2.transpose(images))
    vectors = []
    for combo in kernel_coeffs.rows:
        w = 0
        for i in range(basis.nrows):
            if (combo >> i) & 1:
                w ^= basis.rows[i]
        vectors.append(w)
    return gf2.rref(GF2Matrix(g.edge_count, tuple(vectors)))[0]


def class_count_homology(g: EmbeddedGraph, tc: TreeCotree | None = None) -> int:
    """Number of equivalence classes counted as 2^(2g + b)."""
    return 1 << (2 * g.genus + strand_kernel_dim(g, tc))
