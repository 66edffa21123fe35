"""Bipartite quad-graphs with a discrete complex structure, and their medial graphs.

A surface is described combinatorially: a bipartite coloring of the
vertices and a list of quadrilateral faces, each given as its four vertices
in counterclockwise order starting at a black vertex, together with a
complex weight ``rho`` of positive real part per face.  No embedding is
stored; every derived structure (medial graph, rotation system, boundary
walks) is computed from the face cycles alone.

Orientation conventions
-----------------------
All orientation-sensitive code in the package derives from one convention:
the stored face cycle ``(b-, w-, b+, w+)`` is counterclockwise.  Side ``k``
of a face joins ``cycle[k]`` to ``cycle[(k+1) % 4]``:

    side 0: b- -> w-      side 1: w- -> b+
    side 2: b+ -> w+      side 3: w+ -> b-

The medial graph ``X`` has one vertex per surface edge (its midpoint) and,
inside every face, four edges forming the Varignon parallelogram.  The
medial edge at corner ``cycle[k]`` joins the midpoints of the two sides
meeting there.  Its canonical orientation is parallel to ``b- -> b+`` for
the two edges at white corners (the *black-type* edges, parallel to the
black diagonal) and parallel to ``w- -> w+`` for the two edges at black
corners (the *white-type* edges).  In terms of (from-side, to-side):

    corner 0 (b-): white-type, side 0 -> side 3
    corner 1 (w-): black-type, side 0 -> side 1
    corner 2 (b+): white-type, side 1 -> side 2
    corner 3 (w+): black-type, side 3 -> side 2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    FaceCycleNotAlternating,
    NonManifoldEdge,
    NonPositiveRhoRealPart,
    NotBipartite,
    NotStronglyRegular,
)

#: (from_side, to_side) of the canonically oriented medial edge at corner k.
CORNER_SIDES = {0: (0, 3), 1: (0, 1), 2: (1, 2), 3: (3, 2)}


@dataclass(frozen=True)
class QuadFace:
    """A quadrilateral with its complex weight.

    ``cycle`` lists the four vertices counterclockwise starting at a black
    vertex, so positions 0, 2 are black (b-, b+) and 1, 3 white (w-, w+).
    """

    id: int
    cycle: tuple[int, int, int, int]
    rho: complex

    @property
    def b_minus(self) -> int:
        return self.cycle[0]

    @property
    def w_minus(self) -> int:
        return self.cycle[1]

    @property
    def b_plus(self) -> int:
        return self.cycle[2]

    @property
    def w_plus(self) -> int:
        return self.cycle[3]

    def side(self, k: int) -> tuple[int, int]:
        return (self.cycle[k % 4], self.cycle[(k + 1) % 4])


class QuadSurface:
    """A validated closed bipartite quad-graph with complex weights.

    Immutable after construction.  Use :func:`validate_surface` to build
    one from raw data; the constructor assumes the invariants already hold.
    """

    def __init__(self, black: Sequence[bool], faces: Sequence[QuadFace]):
        self.black: tuple[bool, ...] = tuple(bool(b) for b in black)
        self.faces: tuple[QuadFace, ...] = tuple(faces)
        self.n_vertices = len(self.black)

        # Undirected edges as (black, white) pairs, sorted for determinism.
        edge_set = set()
        for f in self.faces:
            for k in range(4):
                u, v = f.side(k)
                b, w = (u, v) if self.black[u] else (v, u)
                edge_set.add((b, w))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(edge_set))
        self.edge_index: dict[tuple[int, int], int] = {
            e: i for i, e in enumerate(self.edges)
        }

        # For each edge: the face owning the directed side b->w (left face
        # of the black-to-white direction) and the face owning w->b.
        self.edge_left_face = [-1] * len(self.edges)
        self.edge_right_face = [-1] * len(self.edges)
        self.edge_left_side = [-1] * len(self.edges)
        self.edge_right_side = [-1] * len(self.edges)
        for fi, f in enumerate(self.faces):
            for k in range(4):
                u, v = f.side(k)
                if self.black[u]:
                    ei = self.edge_index[(u, v)]
                    self.edge_left_face[ei] = fi
                    self.edge_left_side[ei] = k
                else:
                    ei = self.edge_index[(v, u)]
                    self.edge_right_face[ei] = fi
                    self.edge_right_side[ei] = k

        self.n_edges = len(self.edges)
        self.n_faces = len(self.faces)
        self.genus = (2 - self.n_vertices + self.n_edges - self.n_faces) // 2

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def side_edge(self, face_index: int, k: int) -> int:
        """Index of the undirected edge that is side k of the given face."""
        u, v = self.faces[face_index].side(k)
        b, w = (u, v) if self.black[u] else (v, u)
        return self.edge_index[(b, w)]

    def rho_array(self):
        import numpy as np

        return np.array([f.rho for f in self.faces], dtype=complex)

    def is_orthodiagonal(self, tol: float = 1e-12) -> bool:
        return all(abs(f.rho.imag) <= tol * max(1.0, abs(f.rho)) for f in self.faces)

    def __repr__(self) -> str:
        return (
            f"QuadSurface(V={self.n_vertices}, E={self.n_edges}, "
            f"F={self.n_faces}, g={self.genus})"
        )


def validate_surface(
    colors: Sequence[str] | Sequence[bool],
    faces: Iterable[tuple[int, Sequence[int], complex]],
) -> QuadSurface:
    """Validate a raw surface description and return a :class:`QuadSurface`.

    ``colors`` maps vertex id -> "black"/"white" (or True for black);
    ``faces`` yields (face id, 4-cycle of vertex ids, rho).  Face ids must
    be 0..F-1 and vertex ids 0..V-1, both dense.

    Checks, in order: bipartite alternation along every face cycle,
    Re(rho) > 0, manifoldness and global orientability (every directed
    side occurs exactly once), strong regularity, connectedness.  The
    genus is forced to be a non-negative integer by these checks.
    """
    black = [c is True or c == "black" for c in colors]
    n_vertices = len(black)

    face_list: list[QuadFace] = []
    for fid, cycle, rho in faces:
        cyc = tuple(int(v) for v in cycle)
        if len(cyc) != 4:
            raise FaceCycleNotAlternating(f"face {fid}: needs exactly 4 vertices")
        if any(v < 0 or v >= n_vertices for v in cyc):
            raise FaceCycleNotAlternating(f"face {fid}: vertex id out of range")
        if len(set(cyc)) != 4:
            raise NotStronglyRegular(f"face {fid}: repeated vertex in cycle")
        pattern = tuple(black[v] for v in cyc)
        if pattern != (True, False, True, False):
            if pattern == (False, True, False, True):
                raise FaceCycleNotAlternating(
                    f"face {fid}: cycle must start at a black vertex"
                )
            raise FaceCycleNotAlternating(
                f"face {fid}: colors along cycle do not alternate black/white"
            )
        rho_c = complex(rho)
        if not rho_c.real > 0:
            raise NonPositiveRhoRealPart(f"face {fid}: Re(rho) = {rho_c.real}")
        face_list.append(QuadFace(id=int(fid), cycle=cyc, rho=rho_c))

    face_list.sort(key=lambda f: f.id)
    if [f.id for f in face_list] != list(range(len(face_list))):
        raise FaceCycleNotAlternating("face ids must be dense 0..F-1")

    # Edge colors recheck (an edge joining two same-colored vertices can
    # only arise from a bad coloring, caught above per face).  Directed
    # sides: each must occur exactly once for a closed oriented surface.
    directed: dict[tuple[int, int], int] = {}
    for fi, f in enumerate(face_list):
        for k in range(4):
            s = f.side(k)
            if s in directed:
                raise NonManifoldEdge(
                    f"directed edge {s} used by faces {directed[s]} and {fi}"
                )
            directed[s] = fi
    for (u, v) in directed:
        if (v, u) not in directed:
            raise NonManifoldEdge(f"edge {(u, v)} has no partner face (boundary?)")

    # Bipartite check on the whole graph (face checks already force it on
    # face cycles; a stray inconsistency would contradict those, but keep
    # the explicit guard for odd colorings of isolated data).
    for (u, v) in directed:
        if black[u] == black[v]:
            raise NotBipartite(f"edge {(u, v)} joins two same-colored vertices")

    _check_strong_regularity(face_list)

    surf = QuadSurface(black, face_list)

    # Connectedness over the vertex graph.
    if n_vertices:
        seen = [False] * n_vertices
        adj: list[list[int]] = [[] for _ in range(n_vertices)]
        for (b, w) in surf.edges:
            adj[b].append(w)
            adj[w].append(b)
        stack = [0]
        seen[0] = True
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        if not all(seen):
            raise Disconnected("surface graph is not connected")

    if surf.n_edges != 2 * surf.n_faces:
        raise NonManifoldEdge(
            f"edge count {surf.n_edges} != 2 * face count {surf.n_faces}"
        )
    chi = surf.euler_characteristic()
    if (2 - chi) % 2 != 0 or surf.genus < 0:
        raise NonManifoldEdge(f"Euler characteristic {chi} is not 2-2g with g >= 0")
    return surf


def _check_strong_regularity(faces: list[QuadFace]) -> None:
    """Two faces share at most one edge; two shared vertices force a shared edge."""
    by_vertex: dict[int, list[int]] = {}
    for fi, f in enumerate(faces):
        for v in set(f.cycle):
            by_vertex.setdefault(v, []).append(fi)

    checked: set[tuple[int, int]] = set()
    for shared_faces in by_vertex.values():
        for i in range(len(shared_faces)):
            for j in range(i + 1, len(shared_faces)):
                pair = (shared_faces[i], shared_faces[j])
                if pair in checked:
                    continue
                checked.add(pair)
                fa, fb = faces[pair[0]], faces[pair[1]]
                common = set(fa.cycle) & set(fb.cycle)
                sides_a = {frozenset(fa.side(k)) for k in range(4)}
                sides_b = {frozenset(fb.side(k)) for k in range(4)}
                shared_edges = sides_a & sides_b
                if len(shared_edges) > 1:
                    raise NotStronglyRegular(
                        f"faces {pair} share {len(shared_edges)} edges"
                    )
                if len(common) >= 2 and not shared_edges:
                    raise NotStronglyRegular(
                        f"faces {pair} share vertices {sorted(common)} but no edge"
                    )
                if len(common) > 2:
                    raise NotStronglyRegular(
                        f"faces {pair} share {len(common)} vertices"
                    )


def genus(surface: QuadSurface) -> int:
    """Genus from the Euler count (validation guarantees integrality)."""
    return surface.genus


@dataclass(frozen=True)
class MedialEdge:
    """Directed medial edge data in canonical orientation."""

    id: int
    face: int
    corner_pos: int          # 0..3, position of the corner vertex in the face cycle
    corner: int              # the corner vertex id
    black_type: bool         # parallel to the black diagonal
    mv_from: int             # medial vertex (= edge index) at the tail
    mv_to: int


class MedialGraph:
    """The medial graph of a quad surface, with its rotation system.

    Vertices are the surface edges (midpoints); each face contributes four
    medial edges, one per corner, stored in canonical orientation.  The
    rotation system lists, for every medial vertex, the incident edge ends
    in counterclockwise order; it is the data from which intersection
    numbers and dual spanning trees are computed.
    """

    def __init__(self, surface: QuadSurface):
        self.surface = surface
        surf = surface
        self.n_vertices = surf.n_edges

        edges: list[MedialEdge] = []
        for fi, f in enumerate(surf.faces):
            for k in range(4):
                fr_side, to_side = CORNER_SIDES[k]
                edges.append(
                    MedialEdge(
                        id=4 * fi + k,
                        face=fi,
                        corner_pos=k,
                        corner=f.cycle[k],
                        black_type=(k % 2 == 1),
                        mv_from=surf.side_edge(fi, fr_side),
                        mv_to=surf.side_edge(fi, to_side),
                    )
                )
        self.edges: tuple[MedialEdge, ...] = tuple(edges)
        self.n_edges = len(edges)

        # Rotation system.  Around the midpoint of edge e = (b, w), the
        # counterclockwise order of the four incident medial edges is:
        # (left face @ corner w), (left face @ corner b),
        # (right face @ corner b), (right face @ corner w),
        # where "left" is the face containing the directed side b -> w.
        self.rotation: list[list[int]] = []
        self._edge_at: dict[tuple[int, int], int] = {}  # (face, corner_pos) -> id
        for me in edges:
            self._edge_at[(me.face, me.corner_pos)] = me.id
        for ei, (b, w) in enumerate(surf.edges):
            lf = surf.edge_left_face[ei]
            rf = surf.edge_right_face[ei]
            order = [
                self._corner_edge(lf, w),
                self._corner_edge(lf, b),
                self._corner_edge(rf, b),
                self._corner_edge(rf, w),
            ]
            self.rotation.append(order)

        # Position of each edge end in the rotation list of its vertex.
        self.end_pos: dict[tuple[int, int], int] = {}
        for mv, order in enumerate(self.rotation):
            for pos, me_id in enumerate(order):
                self.end_pos[(me_id, mv)] = pos

        # Adjacency for path finding: mv -> list of (neighbor mv, edge id, dir).
        self.adjacency: list[list[tuple[int, int, int]]] = [
            [] for _ in range(self.n_vertices)
        ]
        for me in edges:
            self.adjacency[me.mv_from].append((me.mv_to, me.id, +1))
            self.adjacency[me.mv_to].append((me.mv_from, me.id, -1))

        # Unique medial edge joining two given medial vertices (uniqueness
        # is a consequence of strong regularity).
        self.edge_between: dict[tuple[int, int], tuple[int, int]] = {}
        for me in edges:
            self.edge_between[(me.mv_from, me.mv_to)] = (me.id, +1)
            self.edge_between[(me.mv_to, me.mv_from)] = (me.id, -1)

    def _corner_edge(self, face: int, vertex: int) -> int:
        k = self.surface.faces[face].cycle.index(vertex)
        return self._edge_at[(face, k)]

    def edge_at(self, face: int, corner_pos: int) -> MedialEdge:
        return self.edges[self._edge_at[(face, corner_pos)]]

    def n_faces(self) -> int:
        return self.surface.n_vertices + self.surface.n_faces

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces()

    # --- medial faces ----------------------------------------------------
    #
    # Faces of X are indexed 0..F-1 for the quad faces F_Q and
    # F..F+V-1 for the vertex faces F_v.

    def face_of_edge_side(self, me: MedialEdge, left: bool) -> int:
        """Medial face on the given side of a canonically directed edge.

        The quad face F_Q lies on one side of each of its four medial
        edges, the corner's vertex face F_v on the other.  Which side is
        which follows from the counterclockwise boundary of F_Q being
        +e(corner1), +e(corner2), -e(corner3), -e(corner0).
        """
        k = me.corner_pos
        fq_on_left = k in (1, 2)  # F_Q boundary traverses these canonically
        nf = self.surface.n_faces
        if left == fq_on_left:
            return me.face
        return nf + me.corner

    def face_boundary_walk(self, face_index: int) -> list[tuple[int, int]]:
        """Boundary of medial face F_Q (ccw) as a list of (edge id, direction)."""
        return [
            (self._edge_at[(face_index, 1)], +1),
            (self._edge_at[(face_index, 2)], +1),
            (self._edge_at[(face_index, 3)], -1),
            (self._edge_at[(face_index, 0)], -1),
        ]

    def vertex_boundary_walk(self, vertex: int) -> list[tuple[int, int]]:
        """Boundary of medial face F_v (ccw around v) as (edge id, direction).

        The counterclockwise traversal uses each corner edge at v with
        direction +1 at corners 0 and 3 and -1 at corners 1 and 2.
        """
        incident = []
        for fi, f in enumerate(self.surface.faces):
            for k in range(4):
                if f.cycle[k] == vertex:
                    d = +1 if k in (0, 3) else -1
                    incident.append((self._edge_at[(fi, k)], d))
        # Chain the directed edges into a closed walk.
        by_start: dict[int, tuple[int, int]] = {}
        for me_id, d in incident:
            me = self.edges[me_id]
            start = me.mv_from if d > 0 else me.mv_to
            by_start[start] = (me_id, d)
        walk = []
        me_id, d = incident[0]
        for _ in range(len(incident)):
            walk.append((me_id, d))
            me = self.edges[me_id]
            end = me.mv_to if d > 0 else me.mv_from
            me_id, d = by_start[end]
        return walk

    def walk_from_medial_vertices(self, mvs: Sequence[int]) -> list[tuple[int, int]]:
        """Directed edge walk visiting the given closed medial vertex sequence."""
        walk = []
        n = len(mvs)
        for i in range(n):
            a, b = mvs[i], mvs[(i + 1) % n]
            walk.append(self.edge_between[(a, b)])
        return walk


def build_medial(surface: QuadSurface) -> MedialGraph:
    """Construct the medial graph; see :class:`MedialGraph`."""
    return MedialGraph(surface)
