"""Connected graphs cellularly embedded on orientable surfaces.

An embedding is encoded as a rotation system: every edge contributes two
darts (edge ends), each vertex lists its incident darts in counterclockwise
cyclic order, and the involution ``alpha`` swaps the two darts of each edge.
Faces are the orbits of the permutation d -> sigma(alpha(d)), where
``sigma`` is the rotation successor.  All GF(2) vectors produced here and
downstream are indexed by the edge order of the input.

Text format (``#`` starts a comment)::

    vertices <n>
    v <i>: <dart> <dart> ...    # one line per vertex i = 0..n-1, ccw order
    edges <m>
    e <j>: <dart> <dart>        # one line per edge j = 0..m-1

Darts are distinct non-negative integers; edge index j is GF(2)
coordinate j throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import InternalInvariantError, InvalidGraphError, RotationParseError
from .gf2 import GF2Matrix


@dataclass(frozen=True)
class FaceSet:
    """Face orbits of an embedding; each orbit starts at its smallest dart."""

    faces: tuple[tuple[int, ...], ...]
    face_of_dart: dict[int, int]

    @property
    def count(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class EmbeddedGraph:
    """A connected rotation system.  Immutable; derived data is cached.

    ``rotations[i]`` is the ccw cyclic dart order at vertex i and
    ``edge_darts[j]`` the dart pair of edge j.  Construction validates the
    structure and raises :class:`InvalidGraphError` on any defect.
    """

    rotations: tuple[tuple[int, ...], ...]
    edge_darts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "rotations", tuple(tuple(int(d) for d in rot) for rot in self.rotations)
        )
        object.__setattr__(
            self, "edge_darts", tuple((int(a), int(b)) for a, b in self.edge_darts)
        )
        self._validate()

    # -- structure ---------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def edge_count(self) -> int:
        return len(self.edge_darts)

    def _validate(self) -> None:
        seen: set[int] = set()
        for rot in self.rotations:
            for d in rot:
                if d < 0:
                    raise InvalidGraphError(f"negative dart id {d}")
                if d in seen:
                    raise InvalidGraphError(f"duplicate dart {d} in rotations")
                seen.add(d)
        paired: set[int] = set()
        for j, (a, b) in enumerate(self.edge_darts):
            if a == b:
                raise InvalidGraphError(f"edge {j} pairs dart {a} with itself")
            for d in (a, b):
                if d in paired:
                    raise InvalidGraphError(f"duplicate dart {d} in edge pairs")
                paired.add(d)
                if d not in seen:
                    raise InvalidGraphError(f"dart {d} missing from rotations")
        if seen - paired:
            missing = sorted(seen - paired)
            raise InvalidGraphError(f"darts missing from edge pairs: {missing}")
        if self.vertex_count == 0:
            raise InvalidGraphError("graph has no vertices")
        if not self._is_connected():
            raise InvalidGraphError("disconnected graph")

    def _is_connected(self) -> bool:
        n = self.vertex_count
        if n == 1:
            return True
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = n
        dv = self.dart_vertex
        for a, b in self.edge_darts:
            ra, rb = find(dv[a]), find(dv[b])
            if ra != rb:
                parent[ra] = rb
                components -= 1
        return components == 1

    @cached_property
    def dart_vertex(self) -> dict[int, int]:
        return {d: v for v, rot in enumerate(self.rotations) for d in rot}

    @cached_property
    def dart_edge(self) -> dict[int, int]:
        return {d: j for j, pair in enumerate(self.edge_darts) for d in pair}

    @cached_property
    def alpha(self) -> dict[int, int]:
        """Fixed-point-free involution swapping the two darts of each edge."""
        out: dict[int, int] = {}
        for a, b in self.edge_darts:
            out[a] = b
            out[b] = a
        return out

    @cached_property
    def sigma(self) -> dict[int, int]:
        """Rotation successor: next dart counterclockwise at the same vertex."""
        out: dict[int, int] = {}
        for rot in self.rotations:
            for i, d in enumerate(rot):
                out[d] = rot[(i + 1) % len(rot)]
        return out

    @cached_property
    def sigma_inv(self) -> dict[int, int]:
        return {v: k for k, v in self.sigma.items()}

    def edge_endpoints(self, j: int) -> tuple[int, int]:
        a, b = self.edge_darts[j]
        return self.dart_vertex[a], self.dart_vertex[b]

    # -- faces, genus, dual ------------------------------------------------

    @cached_property
    def faces(self) -> FaceSet:
        """Orbits of d -> sigma(alpha(d)), indexed by their smallest dart.

        A vertex with an empty rotation contributes one (dartless) face;
        for a valid top-level graph this only happens for the one-vertex
        graph, but sub-ribbons rely on the same convention.
        """
        sigma = self.sigma
        alpha = self.alpha
        orbits: list[tuple[int, ...]] = []
        face_of: dict[int, int] = {}
        for start in sorted(alpha):
            if start in face_of:
                continue
            orbit = []
            d = start
            while True:
                orbit.append(d)
                face_of[d] = len(orbits)
                d = sigma[alpha[d]]
                if d == start:
                    break
            orbits.append(tuple(orbit))
        for rot in self.rotations:
            if not rot:
                orbits.append(())
        return FaceSet(tuple(orbits), face_of)

    @property
    def face_count(self) -> int:
        return self.faces.count

    @property
    def genus(self) -> int:
        """Genus from Euler's formula for the connected embedding."""
        two_g = 2 - self.vertex_count + self.edge_count - self.face_count
        if two_g < 0 or two_g % 2:
            raise InternalInvariantError(
                f"Euler characteristic is inconsistent: 2 - v + e - f = {two_g}"
            )
        return two_g // 2

    def dual(self) -> "EmbeddedGraph":
        """The dual embedding: one vertex per face, edge indexing preserved.

        The dual rotation at a face is its boundary orbit, so the dual of
        the dual recovers the primal vertex/face structure.
        """
        return EmbeddedGraph(self.faces.faces, self.edge_darts)

    # -- incidence matrices --------------------------------------------------

    @cached_property
    def incidence_matrix(self) -> GF2Matrix:
        """Vertex-edge incidence over GF(2); loops contribute zero columns."""
        rows = [0] * self.vertex_count
        dv = self.dart_vertex
        for j, (a, b) in enumerate(self.edge_darts):
            u, w = dv[a], dv[b]
            if u != w:
                rows[u] |= 1 << j
                rows[w] |= 1 << j
        return GF2Matrix(self.edge_count, tuple(rows))

    @cached_property
    def dual_incidence_matrix(self) -> GF2Matrix:
        """Face-edge incidence mod 2; equals the dual graph's incidence matrix.

        Entry (f, j) is the parity of how often edge j appears on the
        boundary walk of face f, so bridges traversed twice cancel out.
        """
        rows = [0] * self.face_count
        face_of = self.faces.face_of_dart
        for j, (a, b) in enumerate(self.edge_darts):
            fa, fb = face_of[a], face_of[b]
            if fa != fb:
                rows[fa] |= 1 << j
                rows[fb] |= 1 << j
        return GF2Matrix(self.edge_count, tuple(rows))

    # -- spanning sub-ribbons ------------------------------------------------

    @cached_property
    def _dense(self) -> tuple:
        """Dart-indexed arrays used by the subset enumeration hot loop."""
        dart_ids = sorted(self.alpha)
        index_of = {d: i for i, d in enumerate(dart_ids)}
        alpha_ix = tuple(index_of[self.alpha[d]] for d in dart_ids)
        edge_ix = tuple(self.dart_edge[d] for d in dart_ids)
        rot_ix = tuple(tuple(index_of[d] for d in rot) for rot in self.rotations)
        endpoints = tuple(self.edge_endpoints(j) for j in range(self.edge_count))
        return dart_ids, alpha_ix, edge_ix, rot_ix, endpoints

    def subset_counter(self) -> Callable[[int], tuple[int, int]]:
        """Return a function mapping an edge bitmask to (k(H), f(H)).

        k(H) counts connected components of the spanning subgraph (all
        vertices kept) and f(H) its faces when re-traced as a ribbon
        subgraph, with one face per isolated vertex.  The returned
        callable owns its scratch buffers, so each call site is
        independent and safe to use concurrently.
        """
        _, alpha_ix, edge_ix, rot_ix, endpoints = self._dense
        nv = self.vertex_count
        nd = len(alpha_ix)
        sigma_sub = [0] * nd
        seen = [0] * nd
        parent = list(range(nv))
        stamp = 0

        def count(mask: int) -> tuple[int, int]:
            nonlocal stamp
            stamp += 1
            # component count via union-find over all vertices
            parent[:] = range(nv)
            k = nv
            for j, (u, w) in enumerate(endpoints):
                if not (mask >> j) & 1:
                    continue
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[w] != w:
                    parent[w] = parent[parent[w]]
                    w = parent[w]
                if u != w:
                    parent[u] = w
                    k -= 1
            # restricted rotation successor and isolated-vertex faces
            faces = 0
            for rot in rot_ix:
                first = -1
                prev = -1
                for d in rot:
                    if (mask >> edge_ix[d]) & 1:
                        if first < 0:
                            first = d
                        else:
                            sigma_sub[prev] = d
                        prev = d
                if first < 0:
                    faces += 1
                else:
                    sigma_sub[prev] = first
            # face orbits of d -> sigma_sub(alpha(d)) over present darts
            for start in range(nd):
                if not (mask >> edge_ix[start]) & 1 or seen[start] == stamp:
                    continue
                d = start
                while seen[d] != stamp:
                    seen[d] = stamp
                    d = sigma_sub[alpha_ix[d]]
                faces += 1
            return k, faces

        return count

    def sub_ribbon_face_count(self, edges: Iterable[int]) -> int:
        """Faces of the ribbon subgraph on the given edge indices."""
        mask = 0
        for j in edges:
            if not 0 <= j < self.edge_count:
                raise ValueError(f"edge index {j} out of range")
            mask |= 1 << j
        return self.subset_counter()(mask)[1]


# -- text format -------------------------------------------------------------


def parse_rotation_system(text: str) -> EmbeddedGraph:
    """Parse the rotation-system text format into a validated graph."""
    vertex_count: int | None = None
    edge_count: int | None = None
    rotations: dict[int, tuple[int, ...]] = {}
    edges: dict[int, tuple[int, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        def fail(msg: str) -> RotationParseError:
            return RotationParseError(f"line {lineno}: {msg}")

        parts = line.split()
        if parts[0] == "vertices":
            if vertex_count is not None:
                raise fail("repeated 'vertices' header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise fail("expected 'vertices <n>'")
            vertex_count = int(parts[1])
        elif parts[0] == "edges":
            if edge_count is not None:
                raise fail("repeated 'edges' header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise fail("expected 'edges <m>'")
            edge_count = int(parts[1])
        elif parts[0] == "v":
            if vertex_count is None:
                raise fail("'v' line before 'vertices' header")
            head, _, tail = line.partition(":")
            fields = head.split()
            if len(fields) != 2 or not fields[1].isdigit():
                raise fail("expected 'v <i>: <darts...>'")
            i = int(fields[1])
            if not 0 <= i < vertex_count:
                raise fail(f"vertex index {i} out of range")
            if i in rotations:
                raise fail(f"repeated vertex {i}")
            try:
                rotations[i] = tuple(int(t) for t in tail.split())
            except ValueError:
                raise fail("darts must be integers") from None
        elif parts[0] == "e":
            if edge_count is None:
                raise fail("'e' line before 'edges' header")
            head, _, tail = line.partition(":")
            fields = head.split()
            if len(fields) != 2 or not fields[1].isdigit():
                raise fail("expected 'e <j>: <dart> <dart>'")
            j = int(fields[1])
            if not 0 <= j < edge_count:
                raise fail(f"edge index {j} out of range")
            if j in edges:
                raise fail(f"repeated edge {j}")
            try:
                darts = tuple(int(t) for t in tail.split())
            except ValueError:
                raise fail("darts must be integers") from None
            if len(darts) != 2:
                raise fail("an edge needs exactly two darts")
            edges[j] = (darts[0], darts[1])
        else:
            raise fail(f"unrecognized line {line!r}")

    if vertex_count is None or edge_count is None:
        raise RotationParseError("missing 'vertices' or 'edges' header")
    missing_v = [i for i in range(vertex_count) if i not in rotations]
    if missing_v:
        raise RotationParseError(f"missing rotation lines for vertices {missing_v}")
    missing_e = [j for j in range(edge_count) if j not in edges]
    if missing_e:
        raise RotationParseError(f"missing edge lines for edges {missing_e}")
    return EmbeddedGraph(
        tuple(rotations[i] for i in range(vertex_count)),
        tuple(edges[j] for j in range(edge_count)),
    )


def format_rotation_system(g: EmbeddedGraph, header: str | None = None) -> str:
    """Serialize a graph in the same text format that the parser accepts."""
    lines = []
    if header:
        for h in header.splitlines():
            lines.append(f"# {h}".rstrip())
    lines.append(f"vertices {g.vertex_count}")
    for i, rot in enumerate(g.rotations):
        darts = " ".join(str(d) for d in rot)
        lines.append(f"v {i}: {darts}".rstrip())
    lines.append(f"edges {g.edge_count}")
    for j, (a, b) in enumerate(g.edge_darts):
        lines.append(f"e {j}: {a} {b}")
    return "\n".join(lines) + "\n"
