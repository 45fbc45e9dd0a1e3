"""Combinatorial 2-sphere checks for paneled cycle systems.

Attaching a disk to every cycle of a system turns it into a 2-complex.
The system panels into a sphere exactly when that complex is a connected
closed surface (every edge in two faces, a single closed fan of faces
around every vertex) with Euler characteristic 2.  Embeddability is never
computed here; the test is purely combinatorial.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import Cycle, CycleError, SubgraphPiece, is_valid_cycle
from .graphs import Graph


@dataclass(frozen=True)
class CycleSystem:
    """A set of faces (cycles) over a host graph."""

    host: Graph
    faces: frozenset[Cycle]

    def __post_init__(self):
        for c in self.faces:
            if not is_valid_cycle(c, self.host):
                raise CycleError(f"face {c.seq!r} is not a cycle of the host graph")

    def sorted_faces(self) -> list[Cycle]:
        return sorted(self.faces, key=Cycle.sort_key)


def cycle_system(host: Graph, faces) -> CycleSystem:
    return CycleSystem(host, frozenset(faces))


def carrier(sys: CycleSystem) -> SubgraphPiece:
    """The 1-skeleton of the system: union of all face vertices and edges."""
    vertices: set[str] = set()
    edges = set()
    for c in sys.faces:
        vertices |= c.vertex_set
        edges |= c.edges()
    return SubgraphPiece(frozenset(vertices), frozenset(edges))


def euler_characteristic(sys: CycleSystem) -> int:
    """V - E + F of the paneled complex."""
    skel = carrier(sys)
    return len(skel.vertices) - len(skel.edges) + len(sys.faces)


def system_pair_intersection(s1: CycleSystem, s2: CycleSystem) -> SubgraphPiece:
    """Shared vertices and edges of the two carriers."""
    if s1.host != s2.host:
        raise CycleError("cycle systems live on different host graphs")
    a, b = carrier(s1), carrier(s2)
    return SubgraphPiece(a.vertices & b.vertices, a.edges & b.edges)


@dataclass(frozen=True)
class SurfaceFailure:
    kind: str  # "edge-degree" | "vertex-link" | "disconnected" | "chi"
    detail: str


@dataclass(frozen=True)
class SurfaceVerdict:
    is_closed_surface: bool
    is_sphere: bool
    euler_characteristic: int
    failures: tuple[SurfaceFailure, ...] = field(default_factory=tuple)


def is_combinatorial_sphere(sys: CycleSystem) -> SurfaceVerdict:
    """Closed-surface conditions plus Euler characteristic 2.

    Checks, in order: every carrier edge lies in exactly two faces; the
    faces around each vertex form one closed fan (the fan is the multigraph
    joining faces that share an edge through the vertex; for polygon faces
    it is 2-regular, so one fan means connected); the face-adjacency graph
    is connected.  The vertex condition is kept even though it is often
    omitted: it rejects complexes pinched at a vertex, which can slip past
    the edge and chi tests.
    """
    faces = sys.sorted_faces()
    chi = euler_characteristic(sys)
    failures: list[SurfaceFailure] = []

    if not faces:
        return SurfaceVerdict(False, False, chi, (SurfaceFailure("disconnected", "no faces"),))

    edge_faces: dict[tuple[str, str], list[int]] = {}
    vertex_faces: dict[str, list[int]] = {}
    for i, c in enumerate(faces):
        for e in c.edges():
            edge_faces.setdefault(e, []).append(i)
        for v in c.seq:
            vertex_faces.setdefault(v, []).append(i)

    for e in sorted(edge_faces):
        k = len(edge_faces[e])
        if k != 2:
            failures.append(
                SurfaceFailure("edge-degree", f"edge {e!r} lies in {k} face(s), need 2")
            )

    edge_degree_ok = not failures

    if edge_degree_ok:
        for v in sorted(vertex_faces):
            local = vertex_faces[v]
            # multigraph on the faces at v, one link per carrier edge at v
            adjacency: dict[int, list[int]] = {i: [] for i in local}
            for e, fs in edge_faces.items():
                if v in e:
                    a, b = fs
                    adjacency[a].append(b)
                    adjacency[b].append(a)
            unvisited = set(local)
            fans = 0
            while unvisited:
                fans += 1
                stack = [unvisited.pop()]
                while stack:
                    cur = stack.pop()
                    for nxt in adjacency[cur]:
                        if nxt in unvisited:
                            unvisited.remove(nxt)
                            stack.append(nxt)
            if fans != 1:
                failures.append(
                    SurfaceFailure(
                        "vertex-link", f"faces at vertex {v!r} form {fans} fans, need 1"
                    )
                )

    # global connectivity through shared edges
    reach = {0}
    stack = [0]
    shared: dict[int, set[int]] = {i: set() for i in range(len(faces))}
    for fs in edge_faces.values():
        for a in fs:
            for b in fs:
                if a != b:
                    shared[a].add(b)
    while stack:
        cur = stack.pop()
        for nxt in shared[cur]:
            if nxt not in reach:
                reach.add(nxt)
                stack.append(nxt)
    if len(reach) != len(faces):
        failures.append(
            SurfaceFailure(
                "disconnected", f"face complex splits into parts ({len(reach)} of {len(faces)} reachable)"
            )
        )

    closed = not failures
    if chi != 2:
        failures.append(SurfaceFailure("chi", f"Euler characteristic {chi}, need 2"))
    return SurfaceVerdict(closed, closed and chi == 2, chi, tuple(failures))


def system_to_json(sys: CycleSystem) -> dict:
    return {"faces": [list(c.seq) for c in sys.sorted_faces()]}


def system_from_json(host: Graph, data: dict) -> CycleSystem:
    if not isinstance(data, dict) or "faces" not in data:
        raise CycleError("cycle-system JSON needs a 'faces' field")
    faces = [Cycle(tuple(item)) for item in data["faces"]]
    return cycle_system(host, faces)
