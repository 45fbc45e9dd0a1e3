"""Finite simple graphs, delta-wye exchanges, and the Petersen family.

Vertices are string labels so that mixed labellings such as
``a, b, c, 1, 2, 3, v, y`` round-trip exactly.  All values are immutable,
operations are pure functions, and every ordering (vertex lists, edge
lists, family rosters) is deterministic across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

Edge = tuple[str, str]

#: canonical_form and isomorphism tests are exhaustive within refinement
#: cells, so cap the input size where that is still instantaneous.
MAX_CANONICAL_VERTICES = 16

FAMILY_NAMES = ("K6", "P7", "K331", "P8", "K44_MINUS_E", "P9", "P10")


class GraphError(ValueError):
    """A graph construction or exchange would violate simplicity."""


def edge_key(u: str, v: str) -> Edge:
    """Normalised undirected edge: the endpoint pair in sorted order."""
    if u == v:
        raise GraphError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with unique string vertex labels.

    ``vertices`` is sorted and ``edges`` holds sorted label pairs, so two
    equal graphs are structurally identical, not merely isomorphic.
    """

    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    @cached_property
    def _adjacency(self) -> dict[str, tuple[str, ...]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: tuple(sorted(ws)) for v, ws in nbrs.items()}

    def has_vertex(self, v: str) -> bool:
        return v in self._adjacency

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and edge_key(u, v) in self.edges

    def neighbors(self, v: str) -> tuple[str, ...]:
        if v not in self._adjacency:
            raise GraphError(f"unknown vertex {v!r}")
        return self._adjacency[v]

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def triangles(self) -> list[tuple[str, str, str]]:
        """All vertex triples that induce a triangle, in sorted order."""
        out = []
        for a, b, c in combinations(self.vertices, 3):
            if self.has_edge(a, b) and self.has_edge(b, c) and self.has_edge(a, c):
                out.append((a, b, c))
        return out


def build_graph(labels: list[str], edge_list: list[tuple[str, str]]) -> Graph:
    """Validate and build a simple graph.

    Raises :class:`GraphError` naming the offending item for duplicate
    labels, self-loops, duplicate edges, or edges with unknown endpoints.
    """
    seen: set[str] = set()
    for lab in labels:
        if lab in seen:
            raise GraphError(f"duplicate label {lab!r}")
        seen.add(lab)
    edges: set[Edge] = set()
    for u, v in edge_list:
        if u not in seen:
            raise GraphError(f"unknown endpoint {u!r} in edge ({u!r}, {v!r})")
        if v not in seen:
            raise GraphError(f"unknown endpoint {v!r} in edge ({u!r}, {v!r})")
        key = edge_key(u, v)
        if key in edges:
            raise GraphError(f"duplicate edge {key!r}")
        edges.add(key)
    return Graph(tuple(sorted(seen)), frozenset(edges))


def induced_subgraph(G: Graph, subset) -> Graph:
    """The subgraph induced by ``subset``: those vertices and all edges among them."""
    S = set(subset)
    for v in S:
        if not G.has_vertex(v):
            raise GraphError(f"unknown vertex {v!r}")
    edges = frozenset(e for e in G.edges if e[0] in S and e[1] in S)
    return Graph(tuple(sorted(S)), edges)


def delta_y(G: Graph, triangle: tuple[str, str, str], new_label: str) -> Graph:
    """Replace a triangle by a new degree-3 vertex joined to its corners.

    The three triangle edges are removed and three spokes to ``new_label``
    are added, so the edge count is preserved and the vertex count grows
    by one.
    """
    a, b, c = triangle
    if len({a, b, c}) != 3:
        raise GraphError(f"triangle vertices not distinct: {triangle!r}")
    for u, v in ((a, b), (b, c), (a, c)):
        if not (G.has_vertex(u) and G.has_vertex(v) and G.has_edge(u, v)):
            raise GraphError(f"not a triangle of the graph: {triangle!r}")
    if G.has_vertex(new_label):
        raise GraphError(f"label collision: {new_label!r} already in use")
    edges = set(G.edges)
    for u, v in ((a, b), (b, c), (a, c)):
        edges.discard(edge_key(u, v))
    for u in (a, b, c):
        edges.add(edge_key(u, new_label))
    return Graph(tuple(sorted(G.vertices + (new_label,))), frozenset(edges))


def y_delta(G: Graph, center: str) -> Graph:
    """Remove a degree-3 vertex and join its three neighbours into a triangle.

    Fails if the center does not have degree exactly 3, or if two of its
    neighbours are already adjacent (a triangle edge would duplicate an
    existing edge, and simple graphs are an invariant here).
    """
    if not G.has_vertex(center):
        raise GraphError(f"unknown vertex {center!r}")
    nbrs = G.neighbors(center)
    if len(nbrs) != 3:
        raise GraphError(f"vertex {center!r} has degree {len(nbrs)}, need 3")
    for u, v in combinations(nbrs, 2):
        if G.has_edge(u, v):
            raise GraphError(
                f"neighbours {u!r},{v!r} of {center!r} already adjacent; "
                "exchange would create a multi-edge"
            )
    edges = {e for e in G.edges if center not in e}
    for u, v in combinations(nbrs, 2):
        edges.add(edge_key(u, v))
    verts = tuple(v for v in G.vertices if v != center)
    return Graph(verts, frozenset(edges))


# ---------------------------------------------------------------------------
# Canonical forms.
#
# Colour refinement (split vertex classes by the multiset of neighbour
# colours until stable) followed by exhaustive individualisation within the
# first non-singleton class.  Every leaf of the search tree is a complete
# ordering; the lexicographically smallest relabelled edge list is the
# canonical form.  Exponential in the worst case, which is fine at <= 16
# vertices, and exact: no hashing, no external isomorphism engine.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalLabel:
    """Total-order-comparable encoding of a graph's isomorphism class."""

    data: bytes


def canonical_form(G: Graph) -> CanonicalLabel:
    """Canonical label, equal exactly for isomorphic graphs."""
    if len(G.vertices) > MAX_CANONICAL_VERTICES:
        raise GraphError(
            f"canonical_form supports at most {MAX_CANONICAL_VERTICES} vertices, "
            f"got {len(G.vertices)}"
        )
    return _canonical_cached(G)


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return canonical_form(G) == canonical_form(H)


def _refine(adj: list[tuple[int, ...]], colors: list[int]) -> list[int]:
    """Stable colour refinement; colour ids are signature-sorted, hence invariant."""
    while True:
        sigs = [
            (colors[i], tuple(sorted(colors[j] for j in adj[i])))
            for i in range(len(colors))
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _encode_under(adj: list[tuple[int, ...]], position: list[int]) -> tuple:
    pairs = set()
    for i, nbrs in enumerate(adj):
        pi = position[i]
        for j in nbrs:
            pj = position[j]
            if pi < pj:
                pairs.add((pi, pj))
    return tuple(sorted(pairs))


def _search(adj: list[tuple[int, ...]], colors: list[int], best: tuple | None) -> tuple:
    colors = _refine(adj, colors)
    n = len(colors)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        position = [0] * n
        for v, c in enumerate(colors):
            position[v] = c
        enc = _encode_under(adj, position)
        return enc if best is None or enc < best else best
    fresh = n  # strictly larger than any refined colour id
    for v in target:
        branched = list(colors)
        branched[v] = fresh
        best = _search(adj, branched, best)
    return best


@lru_cache(maxsize=8192)
def _canonical_cached(G: Graph) -> CanonicalLabel:
    n = len(G.vertices)
    index = {v: i for i, v in enumerate(G.vertices)}
    adj_sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in G.edges:
        adj_sets[index[u]].add(index[v])
        adj_sets[index[v]].add(index[u])
    adj = [tuple(sorted(s)) for s in adj_sets]
    m = len(G.edges)
    if m == 0 or m == n * (n - 1) // 2:
        # complete and edgeless graphs: every ordering gives the same code
        enc = _encode_under(adj, list(range(n)))
    else:
        enc = _search(adj, [0] * n, None)
    payload = f"{n}:" + ",".join(f"{i}-{j}" for i, j in enc)
    return CanonicalLabel(payload.encode("ascii"))


# ---------------------------------------------------------------------------
# The Petersen family.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    """A Petersen-family graph under its conventional labelling.

    ``provenance`` records one shortest sequence of exchanges that reaches
    the member from K6 during closure generation.
    """

    name: str
    graph: Graph
    provenance: tuple[str, ...]


def k6() -> Graph:
    labels = ["a", "b", "c", "d", "e", "f"]
    return build_graph(labels, list(combinations(labels, 2)))


def k331() -> Graph:
    """Complete tripartite graph on parts {a,b,c}, {1,2,3}, {v}."""
    letters = ["a", "b", "c"]
    digits = ["1", "2", "3"]
    edges = [(x, i) for x in letters for i in digits]
    edges += [("v", w) for w in letters + digits]
    return build_graph(letters + digits + ["v"], edges)


def k44_minus_e() -> Graph:
    """K4,4 on parts {a,b,c,d} and {1,2,3,4} with the edge a4 removed."""
    letters = ["a", "b", "c", "d"]
    digits = ["1", "2", "3", "4"]
    edges = [(x, i) for x in letters for i in digits if (x, i) != ("a", "4")]
    return build_graph(letters + digits, edges)


def p7() -> Graph:
    """K6 on {a,b,c,1,2,3} with the triangle (1,2,3) exchanged to a Y at y."""
    labels = ["a", "b", "c", "1", "2", "3"]
    base = build_graph(labels, list(combinations(labels, 2)))
    return delta_y(base, ("1", "2", "3"), "y")


def p8() -> Graph:
    """K3,3,1 with the triangle (v,a,1) exchanged to a Y at y."""
    return delta_y(k331(), ("v", "a", "1"), "y")


def p9() -> Graph:
    """Hexagon (1..6) with chordal paths through 7, 8, 9 and the triangle (7,8,9).

    Vertex 7 joins 3 and 6, vertex 8 joins 2 and 5, vertex 9 joins 1 and 4.
    """
    hexagon = [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("6", "1")]
    chords = [("7", "3"), ("7", "6"), ("8", "2"), ("8", "5"), ("9", "1"), ("9", "4")]
    triangle = [("7", "8"), ("8", "9"), ("7", "9")]
    return build_graph([str(i) for i in range(1, 10)], hexagon + chords + triangle)


def p10() -> Graph:
    """The Petersen graph, labelled so that (1,2,3,4,5) is an outer pentagon.

    Spokes pair 1-7, 2-8, 3-9, 4-10, 5-6 and the inner pentagon runs
    6-8-10-7-9-6.  This is the unique labelling (up to the graph's own
    symmetries) compatible with the bundled P10 certificate.
    """
    outer = [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")]
    spokes = [("1", "7"), ("2", "8"), ("3", "9"), ("4", "10"), ("5", "6")]
    inner = [("6", "8"), ("8", "10"), ("10", "7"), ("7", "9"), ("9", "6")]
    return build_graph([str(i) for i in range(1, 11)], outer + spokes + inner)


def standard_petersen() -> Graph:
    """The textbook Petersen drawing: outer 5-cycle, spokes, pentagram."""
    outer = [f"o{i}" for i in range(1, 6)]
    inner = [f"i{i}" for i in range(1, 6)]
    edges = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(outer[i], inner[i]) for i in range(5)]
    edges += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    return build_graph(outer + inner, edges)


_NAMED_BUILDERS = {
    "K6": k6,
    "P7": p7,
    "K331": k331,
    "P8": p8,
    "K44_MINUS_E": k44_minus_e,
    "P9": p9,
    "P10": p10,
}


def named_graph(name: str) -> Graph:
    """The conventional labelled construction of a family member by name."""
    try:
        return _NAMED_BUILDERS[name]()
    except KeyError:
        raise GraphError(f"unknown family member {name!r}") from None


@lru_cache(maxsize=1)
def _named_canonical() -> dict[CanonicalLabel, str]:
    return {canonical_form(named_graph(name)): name for name in FAMILY_NAMES}


def identify_family_member(G: Graph) -> str | None:
    """Name of the family member isomorphic to ``G``, or ``None``."""
    if len(G.vertices) > MAX_CANONICAL_VERTICES:
        return None
    return _named_canonical().get(canonical_form(G))


def _fresh_label(G: Graph) -> str:
    k = 0
    while f"w{k}" in G.vertices:
        k += 1
    return f"w{k}"


def _exchange_products(G: Graph):
    """All single-exchange products of ``G`` with a description of the step."""
    for tri in G.triangles():
        lab = _fresh_label(G)
        yield delta_y(G, tri, lab), f"delta_y{tri!r}->{lab}"
    for v in G.vertices:
        if G.degree(v) == 3:
            nbrs = G.neighbors(v)
            if any(G.has_edge(u, w) for u, w in combinations(nbrs, 2)):
                continue
            yield y_delta(G, v), f"y_delta({v!r})"


def generate_petersen_family() -> list[FamilyMember]:
    """Close {K6} under both exchanges and return the seven family members.

    The closure is computed with throwaway labels and deduplicated by
    canonical form; the returned members carry the conventional labelled
    graphs.  Order is by vertex count, then canonical label.
    """
    start = k6()
    start_label = canonical_form(start)
    reached: dict[CanonicalLabel, tuple[Graph, tuple[str, ...]]] = {
        start_label: (start, ())
    }
    frontier = [start_label]
    while frontier:
        next_frontier = []
        for lab in frontier:
            G, steps = reached[lab]
            for product, step in _exchange_products(G):
                plab = canonical_form(product)
                if plab not in reached:
                    reached[plab] = (product, steps + (step,))
                    next_frontier.append(plab)
        frontier = next_frontier

    by_name = _named_canonical()
    members = []
    for lab, (_, steps) in sorted(
        reached.items(), key=lambda kv: (len(kv[1][0].vertices), kv[0])
    ):
        name = by_name.get(lab)
        if name is None:
            raise GraphError("exchange closure produced a graph outside the family")
        members.append(FamilyMember(name, named_graph(name), steps))
    if len(members) != 7:
        raise GraphError(f"closure found {len(members)} classes, expected 7")
    return members


def relabel_graph(G: Graph, mapping: dict[str, str]) -> Graph:
    """Apply a vertex bijection; the image must again have unique labels."""
    image = [mapping[v] for v in G.vertices]
    if len(set(image)) != len(image):
        raise GraphError("relabelling is not injective")
    edges = frozenset(edge_key(mapping[u], mapping[v]) for u, v in G.edges)
    return Graph(tuple(sorted(image)), edges)


# ---------------------------------------------------------------------------
# Serialisation.
# ---------------------------------------------------------------------------


def graph_to_json(G: Graph) -> dict:
    """Plain-dict form: sorted vertex list, sorted list of sorted edge pairs."""
    return {
        "vertices": list(G.vertices),
        "edges": [list(e) for e in G.sorted_edges()],
    }


def graph_from_json(data: dict) -> Graph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphError("graph JSON needs 'vertices' and 'edges' fields")
    vertices = data["vertices"]
    edges = data["edges"]
    if not all(isinstance(v, str) for v in vertices):
        raise GraphError("graph JSON vertices must be strings")
    pairs = []
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise GraphError(f"malformed edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return build_graph(list(vertices), pairs)


def graph_to_dot(G: Graph, name: str = "G") -> str:
    """Graphviz DOT text for an undirected graph, vertex labels as node ids."""
    lines = [f"graph {name} {{"]
    isolated = [v for v in G.vertices if G.degree(v) == 0]
    for v in isolated:
        lines.append(f'  "{v}";')
    for u, v in G.sorted_edges():
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
