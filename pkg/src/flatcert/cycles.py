"""Simple-cycle enumeration, cycle intersections, and the Böhme condition.

A set of cycles whose pairwise intersections (shared vertices plus shared
edges) are each connected or empty is called a Böhme system; such systems
are the raw material for the sphere certificates in
:mod:`flatcert.certificates`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Edge, Graph, edge_key


class CycleError(ValueError):
    """A vertex sequence is not a valid cycle where one is required."""


def _canonical_seq(seq: tuple[str, ...]) -> tuple[str, ...]:
    if len(seq) < 3:
        raise CycleError(f"cycle needs at least 3 vertices, got {seq!r}")
    if len(set(seq)) != len(seq):
        raise CycleError(f"repeated vertex in cycle {seq!r}")
    pivot = seq.index(min(seq))
    fwd = seq[pivot:] + seq[:pivot]
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return fwd if fwd[1] < fwd[-1] else rev


@dataclass(frozen=True)
class Cycle:
    """A simple cycle held in canonical rotation.

    The stored sequence starts at the smallest vertex and runs in the
    direction that puts the smaller of its two neighbours second, so equal
    cycles compare equal regardless of how they were written down.
    """

    seq: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "seq", _canonical_seq(tuple(self.seq)))

    def __len__(self) -> int:
        return len(self.seq)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.seq)

    def edges(self) -> frozenset[Edge]:
        n = len(self.seq)
        return frozenset(edge_key(self.seq[i], self.seq[(i + 1) % n]) for i in range(n))

    def reversed(self) -> tuple[str, ...]:
        """The sequence walked backwards (same cycle, opposite orientation)."""
        return (self.seq[0],) + tuple(reversed(self.seq[1:]))

    def sort_key(self):
        return (len(self.seq), self.seq)


def cycle(*vertices: str) -> Cycle:
    """Convenience constructor: ``cycle("b", "e", "f")``."""
    return Cycle(tuple(vertices))


def is_valid_cycle(c: Cycle, G: Graph) -> bool:
    """True when every vertex exists in ``G`` and consecutive pairs are edges."""
    if not all(G.has_vertex(v) for v in c.seq):
        return False
    n = len(c.seq)
    return all(G.has_edge(c.seq[i], c.seq[(i + 1) % n]) for i in range(n))


def is_induced_cycle(c: Cycle, G: Graph) -> bool:
    """A valid cycle with no chord among its vertices."""
    if not is_valid_cycle(c, G):
        return False
    n = len(c.seq)
    consecutive = c.edges()
    for u, v in combinations(c.seq, 2):
        if edge_key(u, v) not in consecutive and G.has_edge(u, v):
            return False
    return True


def enumerate_cycles(
    G: Graph, max_len: int | None = None, induced_only: bool = False
) -> list[Cycle]:
    """All simple cycles of ``G``, canonical and sorted by (length, sequence).

    Backtracking over paths anchored at the smallest vertex of each cycle:
    a path grows only through vertices larger than its anchor, and a closing
    edge back to the anchor is accepted only in the direction with
    ``path[1] < path[-1]``, so each cycle is produced exactly once.
    """
    cap = max_len if max_len is not None else len(G.vertices)
    found: list[Cycle] = []
    adjacency = {v: G.neighbors(v) for v in G.vertices}

    def extend(path: list[str], on_path: set[str]) -> None:
        anchor, tip = path[0], path[-1]
        for w in adjacency[tip]:
            if w == anchor and len(path) >= 3 and path[1] < path[-1]:
                found.append(Cycle(tuple(path)))
            elif w > anchor and w not in on_path and len(path) < cap:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                path.pop()
                on_path.remove(w)

    if cap >= 3:
        for start in G.vertices:
            extend([start], {start})
    if induced_only:
        found = [c for c in found if is_induced_cycle(c, G)]
    return sorted(found, key=Cycle.sort_key)


@dataclass(frozen=True)
class SubgraphPiece:
    """A vertex set plus an edge set; isolated vertices are permitted."""

    vertices: frozenset[str]
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise CycleError(f"edge ({u!r}, {v!r}) has an endpoint outside the piece")

    def is_empty(self) -> bool:
        return not self.vertices

    def union(self, other: "SubgraphPiece") -> "SubgraphPiece":
        return SubgraphPiece(self.vertices | other.vertices, self.edges | other.edges)

    def contains(self, other: "SubgraphPiece") -> bool:
        return other.vertices <= self.vertices and other.edges <= self.edges


EMPTY_PIECE = SubgraphPiece(frozenset(), frozenset())


def piece_from_cycle(c: Cycle) -> SubgraphPiece:
    return SubgraphPiece(c.vertex_set, c.edges())


def cycle_intersection(c1: Cycle, c2: Cycle) -> SubgraphPiece:
    """Shared vertices and shared edges of two cycles."""
    return SubgraphPiece(c1.vertex_set & c2.vertex_set, c1.edges() & c2.edges())


def piece_components(p: SubgraphPiece) -> int:
    """Connected components of a piece; an isolated shared vertex counts as one."""
    parent = {v: v for v in p.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in p.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(v) for v in p.vertices})


@dataclass(frozen=True)
class BohmeVerdict:
    """Outcome of the pairwise-connected-intersection test.

    A failing verdict carries the canonically first pair whose intersection
    has two or more components.
    """

    ok: bool
    witness: tuple[Cycle, Cycle] | None = None


def is_bohme_system(cycles, G: Graph) -> BohmeVerdict:
    """Check that all pairwise cycle intersections are connected or empty.

    Raises :class:`CycleError` if any cycle is not valid in ``G``.  The
    witness, when present, is the first failing pair with the cycles taken
    in canonical sorted order.
    """
    ordered = sorted(set(cycles), key=Cycle.sort_key)
    for c in ordered:
        if not is_valid_cycle(c, G):
            raise CycleError(f"cycle {c.seq!r} is not a cycle of the graph")
    for c1, c2 in combinations(ordered, 2):
        if piece_components(cycle_intersection(c1, c2)) > 1:
            return BohmeVerdict(False, (c1, c2))
    return BohmeVerdict(True, None)


def cycle_to_json(c: Cycle) -> list[str]:
    return list(c.seq)


def cycle_from_json(data) -> Cycle:
    if not (isinstance(data, (list, tuple)) and all(isinstance(v, str) for v in data)):
        raise CycleError(f"cycle JSON must be a list of vertex labels, got {data!r}")
    return Cycle(tuple(data))


def cycle_set_to_json(cycles) -> list[list[str]]:
    return [cycle_to_json(c) for c in sorted(set(cycles), key=Cycle.sort_key)]


def cycle_set_from_json(data) -> list[Cycle]:
    if not isinstance(data, list):
        raise CycleError("cycle-set JSON must be a list of cycles")
    return [cycle_from_json(item) for item in data]
