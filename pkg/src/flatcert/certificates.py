"""Non-flatness certificates: encoding, verification, and search.

A certificate packages the combinatorial skeleton of one nesting argument:
a shared base (a cycle, or a Y), three cycle systems that each panel into
a combinatorial sphere containing the base, the exact overlaps the three
sphere carriers are allowed to share, and connector paths joining the
off-base parts of the spheres.  :func:`verify_certificate` checks every
hypothesis mechanically; the topological conclusion (no flat embedding)
is not re-proved here.

Four certificate shapes are supported, frozen in
``docs/certificate_schema.md``:

``TRIANGLE_CONNECTOR``
    cycle base, three single-edge connectors, one per pair of spheres.
``Y_CONNECTOR``
    cycle base, three two-edge connectors through one shared hub vertex.
``Y_BASE``
    base is a Y (a 3-spoke star); connectors are single edges or two-edge
    paths through a shared hub.
``P10_PATTERN``
    cycle base; a pair of spheres may share a declared extra overlap
    beyond the base, and the remaining pairs are joined by edge connectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations, product

from .cycles import (
    Cycle,
    SubgraphPiece,
    cycle_set_to_json,
    enumerate_cycles,
    is_bohme_system,
    is_valid_cycle,
)
from .graphs import (
    FAMILY_NAMES,
    Edge,
    Graph,
    edge_key,
    identify_family_member,
    induced_subgraph,
    standard_petersen,
)
from .spheres import carrier, cycle_system, is_combinatorial_sphere, system_pair_intersection

SCHEMA_TRIANGLE_CONNECTOR = "TRIANGLE_CONNECTOR"
SCHEMA_Y_CONNECTOR = "Y_CONNECTOR"
SCHEMA_Y_BASE = "Y_BASE"
SCHEMA_P10_PATTERN = "P10_PATTERN"
SCHEMAS = (
    SCHEMA_TRIANGLE_CONNECTOR,
    SCHEMA_Y_CONNECTOR,
    SCHEMA_Y_BASE,
    SCHEMA_P10_PATTERN,
)

CERTIFICATE_FORMAT = 1

CHECK_NAMES = (
    "cycles-valid",
    "bohme-system",
    "each-system-sphere",
    "base-shared",
    "pairwise-overlap-exact",
    "connector-disjointness",
    "connector-connectivity",
)

SYSTEM_PAIRS = ((1, 2), (1, 3), (2, 3))

MAX_SEARCH_VERTICES = 12


class MalformedCertificateError(ValueError):
    """The certificate itself violates a structural invariant."""


class SearchBoundsError(ValueError):
    """Certificate search was asked to run outside its supported bounds."""


@dataclass(frozen=True)
class Base:
    """The shared core of a certificate: either a cycle or a Y.

    For a cycle the vertices are stored in canonical cycle order; for a Y
    they are stored as (center, leaf, leaf, leaf) with sorted leaves.  The
    edge set is stored explicitly so that a damaged base is detectable.
    """

    kind: str  # "cycle" | "y"
    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    def piece(self) -> SubgraphPiece:
        return SubgraphPiece(frozenset(self.vertices), self.edges)


def base_cycle(c: Cycle) -> Base:
    return Base("cycle", c.seq, c.edges())


def base_y(center: str, leaves: tuple[str, str, str]) -> Base:
    ordered = tuple(sorted(leaves))
    edges = frozenset(edge_key(center, leaf) for leaf in ordered)
    return Base("y", (center,) + ordered, edges)


@dataclass(frozen=True)
class ExtraOverlap:
    """Declared carrier overlap beyond the base for one pair of systems."""

    pair: tuple[int, int]  # 1-based system indices, increasing
    vertices: frozenset[str]
    edges: frozenset[Edge]


@dataclass(frozen=True)
class Certificate:
    graph_name: str
    schema: str
    base: Base
    systems: tuple[tuple[Cycle, ...], ...]
    extra_overlaps: tuple[ExtraOverlap, ...] = ()
    connectors: tuple[tuple[str, ...], ...] = ()


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checks: tuple[CheckResult, ...]

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _canonical_path(path: tuple[str, ...]) -> tuple[str, ...]:
    rev = tuple(reversed(path))
    return path if path <= rev else rev


def make_certificate(
    graph_name: str,
    schema: str,
    base: Base,
    systems,
    extra_overlaps=(),
    connectors=(),
) -> Certificate:
    """Normalise orders: faces sorted per system, connectors canonical."""
    sys_tuple = tuple(tuple(sorted(set(faces), key=Cycle.sort_key)) for faces in systems)
    conn = tuple(sorted(_canonical_path(tuple(p)) for p in connectors))
    overlaps = tuple(sorted(extra_overlaps, key=lambda o: o.pair))
    return Certificate(graph_name, schema, base, sys_tuple, overlaps, conn)


# ---------------------------------------------------------------------------
# Structural validation (certificate invariants, distinct from check failures)
# ---------------------------------------------------------------------------


def _validate_structure(G: Graph, cert: Certificate) -> None:
    if cert.schema not in SCHEMAS:
        raise MalformedCertificateError(f"unknown schema {cert.schema!r}")
    if len(cert.systems) != 3:
        raise MalformedCertificateError(
            f"certificate needs exactly 3 systems, got {len(cert.systems)}"
        )
    if any(not faces for faces in cert.systems):
        raise MalformedCertificateError("empty cycle system")

    b = cert.base
    if any(not G.has_vertex(v) for v in b.vertices):
        raise MalformedCertificateError("base references a vertex outside the graph")
    if any(e not in G.edges for e in b.edges):
        raise MalformedCertificateError("base references an edge outside the graph")
    if b.kind == "cycle":
        if len(b.vertices) < 3 or len(set(b.vertices)) != len(b.vertices):
            raise MalformedCertificateError(f"base cycle ill-formed: {b.vertices!r}")
        ring = frozenset(
            edge_key(b.vertices[i], b.vertices[(i + 1) % len(b.vertices)])
            for i in range(len(b.vertices))
        )
        if b.edges != ring:
            raise MalformedCertificateError("base edges do not form the stated cycle")
    elif b.kind == "y":
        if len(b.vertices) != 4 or len(set(b.vertices)) != 4:
            raise MalformedCertificateError(f"base Y ill-formed: {b.vertices!r}")
        center = b.vertices[0]
        spokes = frozenset(edge_key(center, leaf) for leaf in b.vertices[1:])
        if b.edges != spokes:
            raise MalformedCertificateError("base edges do not form the stated Y")
    else:
        raise MalformedCertificateError(f"unknown base kind {b.kind!r}")

    if cert.schema == SCHEMA_Y_BASE:
        if b.kind != "y":
            raise MalformedCertificateError("Y_BASE certificates need a Y base")
    elif b.kind != "cycle":
        raise MalformedCertificateError(f"{cert.schema} certificates need a cycle base")

    if cert.extra_overlaps and cert.schema != SCHEMA_P10_PATTERN:
        raise MalformedCertificateError(
            f"extra overlaps are only allowed for {SCHEMA_P10_PATTERN}"
        )
    seen_pairs = set()
    for ov in cert.extra_overlaps:
        if ov.pair not in SYSTEM_PAIRS:
            raise MalformedCertificateError(f"overlap pair {ov.pair!r} out of range")
        if ov.pair in seen_pairs:
            raise MalformedCertificateError(f"duplicate overlap for pair {ov.pair!r}")
        seen_pairs.add(ov.pair)
        if any(not G.has_vertex(v) for v in ov.vertices):
            raise MalformedCertificateError("overlap references a vertex outside the graph")
        if any(e not in G.edges for e in ov.edges):
            raise MalformedCertificateError("overlap references an edge outside the graph")
        allowed = set(b.vertices) | set(ov.vertices)
        for u, v in ov.edges:
            if u not in allowed or v not in allowed:
                raise MalformedCertificateError(
                    f"overlap edge ({u!r}, {v!r}) has an endpoint outside base and overlap"
                )

    for path in cert.connectors:
        if len(path) < 2 or len(set(path)) != len(path):
            raise MalformedCertificateError(f"connector {path!r} is not a simple path")
        for u, v in zip(path, path[1:]):
            if not (G.has_vertex(u) and G.has_vertex(v) and G.has_edge(u, v)):
                raise MalformedCertificateError(
                    f"connector {path!r} uses a non-edge ({u!r}, {v!r})"
                )


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _overlap_piece(base_piece: SubgraphPiece, overlaps, pair) -> SubgraphPiece:
    vertices = set(base_piece.vertices)
    edges = set(base_piece.edges)
    for ov in overlaps:
        if ov.pair == pair:
            vertices |= ov.vertices
            edges |= ov.edges
    return SubgraphPiece(frozenset(vertices), frozenset(edges))


def _piece_diff(actual: SubgraphPiece, expected: SubgraphPiece) -> str:
    bits = []
    if actual.vertices - expected.vertices:
        bits.append(f"unexpected vertices {sorted(actual.vertices - expected.vertices)}")
    if expected.vertices - actual.vertices:
        bits.append(f"missing vertices {sorted(expected.vertices - actual.vertices)}")
    if actual.edges - expected.edges:
        bits.append(f"unexpected edges {sorted(actual.edges - expected.edges)}")
    if expected.edges - actual.edges:
        bits.append(f"missing edges {sorted(expected.edges - actual.edges)}")
    return "; ".join(bits)


def verify_certificate(G: Graph, cert: Certificate) -> VerificationReport:
    """Run all certificate checks and report each with a witness on failure.

    Checks, in order: every face is a cycle of the graph; the union of all
    faces has pairwise connected-or-empty intersections; each of the three
    systems panels into a combinatorial sphere; every sphere carrier
    contains the base; carrier pairwise intersections equal the base plus
    the declared overlaps, exactly; connector paths stay clear of the
    carriers except at their endpoints, which must lie in off-base parts of
    distinct spheres; and the connectors (or a declared shared overlap)
    join every pair of spheres.

    Structural damage to the certificate itself raises
    :class:`MalformedCertificateError` instead of producing a report.
    """
    _validate_structure(G, cert)

    checks: list[CheckResult] = []

    # 1. cycles-valid
    bad = None
    for i, faces in enumerate(cert.systems, start=1):
        for c in faces:
            if not is_valid_cycle(c, G):
                bad = f"system {i} face {c.seq!r} is not a cycle of the graph"
                break
        if bad:
            break
    checks.append(CheckResult("cycles-valid", bad is None, bad))
    faces_ok = bad is None

    all_faces = sorted({c for faces in cert.systems for c in faces}, key=Cycle.sort_key)

    # 2. bohme-system
    if faces_ok:
        verdict = is_bohme_system(all_faces, G)
        witness = None
        if not verdict.ok:
            c1, c2 = verdict.witness
            witness = f"cycles {c1.seq!r} and {c2.seq!r} intersect in >= 2 components"
        checks.append(CheckResult("bohme-system", verdict.ok, witness))
    else:
        checks.append(CheckResult("bohme-system", False, "not evaluated: invalid faces"))

    systems = None
    carriers = None
    if faces_ok:
        systems = [cycle_system(G, faces) for faces in cert.systems]
        carriers = [carrier(s) for s in systems]

    # 3. each-system-sphere
    if faces_ok:
        witness = None
        for i, s in enumerate(systems, start=1):
            verdict = is_combinatorial_sphere(s)
            if not verdict.is_sphere:
                reasons = ", ".join(f"{f.kind}: {f.detail}" for f in verdict.failures)
                witness = f"system {i} is not a sphere ({reasons})"
                break
        checks.append(CheckResult("each-system-sphere", witness is None, witness))
    else:
        checks.append(
            CheckResult("each-system-sphere", False, "not evaluated: invalid faces")
        )

    base_piece = cert.base.piece()

    # 4. base-shared
    if faces_ok:
        witness = None
        for i, skel in enumerate(carriers, start=1):
            if not skel.contains(base_piece):
                witness = f"system {i} carrier does not contain the base"
                break
        checks.append(CheckResult("base-shared", witness is None, witness))
    else:
        checks.append(CheckResult("base-shared", False, "not evaluated: invalid faces"))

    # 5. pairwise-overlap-exact
    if faces_ok:
        witness = None
        for i, j in SYSTEM_PAIRS:
            actual = system_pair_intersection(systems[i - 1], systems[j - 1])
            expected = _overlap_piece(base_piece, cert.extra_overlaps, (i, j))
            if actual != expected:
                witness = f"carriers {i} and {j}: {_piece_diff(actual, expected)}"
                break
        checks.append(CheckResult("pairwise-overlap-exact", witness is None, witness))
    else:
        checks.append(
            CheckResult("pairwise-overlap-exact", False, "not evaluated: invalid faces")
        )

    # 6 and 7 need the off-base parts of the carriers.
    if faces_ok:
        off_base = [skel.vertices - base_piece.vertices for skel in carriers]
        carrier_vertices = frozenset().union(*(skel.vertices for skel in carriers))
        carrier_edges = frozenset().union(*(skel.edges for skel in carriers))

        # 6. connector-disjointness
        witness = None
        connector_pairs: set[tuple[int, int]] = set()
        for path in cert.connectors:
            if cert.schema in (SCHEMA_TRIANGLE_CONNECTOR, SCHEMA_P10_PATTERN):
                if len(path) != 2:
                    witness = f"connector {path!r}: schema requires a single edge"
                    break
            elif cert.schema == SCHEMA_Y_CONNECTOR:
                if len(path) != 3:
                    witness = f"connector {path!r}: schema requires a two-edge path"
                    break
            else:  # Y_BASE
                if len(path) not in (2, 3):
                    witness = f"connector {path!r}: schema requires length 2 or 3"
                    break
            interior = path[1:-1]
            hit = next((v for v in interior if v in carrier_vertices), None)
            if hit is not None:
                witness = f"connector {path!r} passes through carrier vertex {hit!r}"
                break
            edge_hit = next(
                (e for e in (edge_key(u, v) for u, v in zip(path, path[1:])) if e in carrier_edges),
                None,
            )
            if edge_hit is not None:
                witness = f"connector {path!r} runs along carrier edge {edge_hit!r}"
                break
            ends_a = {k + 1 for k, off in enumerate(off_base) if path[0] in off}
            ends_b = {k + 1 for k, off in enumerate(off_base) if path[-1] in off}
            served = {
                (min(i, j), max(i, j)) for i in ends_a for j in ends_b if i != j
            }
            if not served:
                witness = (
                    f"connector {path!r} endpoints do not reach off-base parts "
                    "of two distinct spheres"
                )
                break
            connector_pairs |= served
        checks.append(CheckResult("connector-disjointness", witness is None, witness))
        disjoint_ok = witness is None

        # 7. connector-connectivity
        witness = None
        if cert.schema == SCHEMA_Y_CONNECTOR:
            hubs = {path[1] for path in cert.connectors if len(path) == 3}
            if len(cert.connectors) == 0 or len(hubs) != 1:
                witness = f"connectors do not form a Y through one hub (hubs {sorted(hubs)})"
        if witness is None and disjoint_ok:
            for i, j in SYSTEM_PAIRS:
                if (i, j) in connector_pairs:
                    continue
                if off_base[i - 1] & off_base[j - 1]:
                    continue  # spheres meet beyond the base; exactness is check 5
                witness = f"spheres {i} and {j} are not joined by any connector"
                break
        elif witness is None:
            witness = "not evaluated: connector-disjointness failed"
        checks.append(CheckResult("connector-connectivity", witness is None, witness))
    else:
        checks.append(
            CheckResult("connector-disjointness", False, "not evaluated: invalid faces")
        )
        checks.append(
            CheckResult("connector-connectivity", False, "not evaluated: invalid faces")
        )

    return VerificationReport(all(c.passed for c in checks), tuple(checks))


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "format": CERTIFICATE_FORMAT,
        "graph_name": cert.graph_name,
        "schema": cert.schema,
        "base": {
            "kind": cert.base.kind,
            "vertices": list(cert.base.vertices),
            "edges": [list(e) for e in sorted(cert.base.edges)],
        },
        "systems": [{"faces": cycle_set_to_json(faces)} for faces in cert.systems],
        "extra_overlaps": [
            {
                "pair": list(ov.pair),
                "vertices": sorted(ov.vertices),
                "edges": [list(e) for e in sorted(ov.edges)],
            }
            for ov in cert.extra_overlaps
        ],
        "connectors": [list(p) for p in cert.connectors],
    }


def certificate_from_json(data: dict) -> Certificate:
    if not isinstance(data, dict):
        raise MalformedCertificateError("certificate JSON must be an object")
    if data.get("format") != CERTIFICATE_FORMAT:
        raise MalformedCertificateError(
            f"unsupported certificate format {data.get('format')!r}"
        )
    try:
        base_data = data["base"]
        base = Base(
            base_data["kind"],
            tuple(base_data["vertices"]),
            frozenset(edge_key(u, v) for u, v in base_data["edges"]),
        )
        systems = [
            tuple(Cycle(tuple(f)) for f in sys_data["faces"])
            for sys_data in data["systems"]
        ]
        overlaps = [
            ExtraOverlap(
                tuple(ov["pair"]),
                frozenset(ov["vertices"]),
                frozenset(edge_key(u, v) for u, v in ov["edges"]),
            )
            for ov in data.get("extra_overlaps", [])
        ]
        connectors = [tuple(p) for p in data.get("connectors", [])]
        return make_certificate(
            data["graph_name"], data["schema"], base, systems, overlaps, connectors
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MalformedCertificateError):
            raise
        raise MalformedCertificateError(f"certificate JSON malformed: {exc}") from exc


def report_to_json(report: VerificationReport) -> dict:
    return {
        "pass": report.passed,
        "checks": [
            {"name": c.name, "pass": c.passed, "witness": c.witness}
            for c in report.checks
        ],
    }


def bundled_certificates() -> dict[str, Certificate]:
    """The seven shipped certificates, one per family member, keyed by name."""
    out: dict[str, Certificate] = {}
    root = resources.files("flatcert").joinpath("data/certificates")
    for name in FAMILY_NAMES:
        payload = json.loads(root.joinpath(f"{name}.json").read_text("utf-8"))
        out[name] = certificate_from_json(payload)
    return out


def bundled_certificate(name: str) -> Certificate:
    certs = bundled_certificates()
    if name not in certs:
        raise MalformedCertificateError(f"no bundled certificate named {name!r}")
    return certs[name]


def relabel_certificate(cert: Certificate, mapping: dict[str, str]) -> Certificate:
    """Apply a vertex bijection to every vertex reference in the certificate."""

    def m(v: str) -> str:
        return mapping[v]

    base = Base(
        cert.base.kind,
        tuple(m(v) for v in cert.base.vertices),
        frozenset(edge_key(m(u), m(v)) for u, v in cert.base.edges),
    )
    if base.kind == "cycle":
        base = base_cycle(Cycle(base.vertices))
    else:
        base = base_y(base.vertices[0], tuple(base.vertices[1:]))
    systems = [
        [Cycle(tuple(m(v) for v in c.seq)) for c in faces] for faces in cert.systems
    ]
    overlaps = [
        ExtraOverlap(
            ov.pair,
            frozenset(m(v) for v in ov.vertices),
            frozenset(edge_key(m(u), m(v)) for u, v in ov.edges),
        )
        for ov in cert.extra_overlaps
    ]
    connectors = [tuple(m(v) for v in p) for p in cert.connectors]
    return make_certificate(
        cert.graph_name, cert.schema, base, systems, overlaps, connectors
    )


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


def _system_for(G: Graph, base_piece: SubgraphPiece, extra: tuple[str, ...]):
    """Faces of the induced-cycle complex over base vertices plus ``extra``.

    Returns the face tuple when that complex is a combinatorial sphere whose
    carrier contains the base, else None.
    """
    sub = induced_subgraph(G, set(base_piece.vertices) | set(extra))
    faces = enumerate_cycles(sub, induced_only=True)
    if not faces:
        return None
    system = cycle_system(G, faces)
    if not is_combinatorial_sphere(system).is_sphere:
        return None
    if not carrier(system).contains(base_piece):
        return None
    return tuple(faces)


def _try(G: Graph, results: list[Certificate], cert: Certificate, max_results) -> bool:
    """Verify and collect; True when the result cap has been reached."""
    try:
        report = verify_certificate(G, cert)
    except MalformedCertificateError:
        return False
    if report.passed:
        results.append(cert)
    return max_results is not None and len(results) >= max_results


def _search_cycle_base(G, results, base, schemas, max_results) -> bool:
    bp = base_cycle(base)
    base_piece = bp.piece()
    rest = sorted(set(G.vertices) - set(base.seq))
    graph_name = identify_family_member(G) or "graph"

    singles = {}
    for v in rest:
        singles[v] = _system_for(G, base_piece, (v,))
    apexes = [v for v in rest if singles[v] is not None]

    for schema in sorted(set(schemas) & {SCHEMA_TRIANGLE_CONNECTOR, SCHEMA_Y_CONNECTOR}):
        for triple in combinations(apexes, 3):
            systems = [singles[v] for v in triple]
            if schema == SCHEMA_TRIANGLE_CONNECTOR:
                if not all(G.has_edge(u, v) for u, v in combinations(triple, 2)):
                    continue
                connectors = [edge_key(u, v) for u, v in combinations(triple, 2)]
                cert = make_certificate(graph_name, schema, bp, systems, (), connectors)
                if _try(G, results, cert, max_results):
                    return True
            else:
                for hub in sorted(set(rest) - set(triple)):
                    if not all(G.has_edge(hub, v) for v in triple):
                        continue
                    connectors = [(u, hub, v) for u, v in combinations(triple, 2)]
                    cert = make_certificate(graph_name, schema, bp, systems, (), connectors)
                    if _try(G, results, cert, max_results):
                        return True

    if SCHEMA_P10_PATTERN in schemas:
        attachments = []
        for size in (1, 2):
            for extra in combinations(rest, size):
                faces = _system_for(G, base_piece, extra)
                if faces is not None:
                    attachments.append((extra, faces))
        for chosen in combinations(attachments, 3):
            if _emit_p10_candidates(
                G, results, graph_name, bp, base_piece, chosen, max_results
            ):
                return True
    return False


def _emit_p10_candidates(
    G, results, graph_name, bp, base_piece, chosen, max_results
) -> bool:
    systems = [cycle_system(G, faces) for _, faces in chosen]
    carriers = [carrier(s) for s in systems]
    off = [c.vertices - base_piece.vertices for c in carriers]
    carrier_edges = frozenset().union(*(c.edges for c in carriers))

    overlaps = []
    uncovered = []
    for i, j in SYSTEM_PAIRS:
        inter = system_pair_intersection(systems[i - 1], systems[j - 1])
        extra_v = inter.vertices - base_piece.vertices
        extra_e = inter.edges - base_piece.edges
        if extra_v or extra_e:
            overlaps.append(ExtraOverlap((i, j), frozenset(extra_v), frozenset(extra_e)))
        if not (off[i - 1] & off[j - 1]):
            uncovered.append((i, j))

    candidate_edges = []
    for i, j in uncovered:
        options = [
            e
            for e in sorted(G.edges)
            if e not in carrier_edges
            and (
                (e[0] in off[i - 1] and e[1] in off[j - 1])
                or (e[0] in off[j - 1] and e[1] in off[i - 1])
            )
        ]
        if not options:
            return False
        candidate_edges.append(options)

    for combo in product(*candidate_edges):
        cert = make_certificate(
            graph_name,
            SCHEMA_P10_PATTERN,
            bp,
            [faces for _, faces in chosen],
            overlaps,
            combo,
        )
        if _try(G, results, cert, max_results):
            return True
    return False


def _search_y_base(G, results, schemas, max_results) -> bool:
    if SCHEMA_Y_BASE not in schemas:
        return False
    graph_name = identify_family_member(G) or "graph"
    for center in G.vertices:
        if G.degree(center) < 3:
            continue
        for leaves in combinations(G.neighbors(center), 3):
            bp = base_y(center, leaves)
            base_piece = bp.piece()
            rest = sorted(set(G.vertices) - set(bp.vertices))
            apexes = []
            faces_for = {}
            for v in rest:
                faces = _system_for(G, base_piece, (v,))
                if faces is not None:
                    apexes.append(v)
                    faces_for[v] = faces
            for triple in combinations(apexes, 3):
                systems = [faces_for[v] for v in triple]
                if all(G.has_edge(u, v) for u, v in combinations(triple, 2)):
                    connectors = [edge_key(u, v) for u, v in combinations(triple, 2)]
                    cert = make_certificate(
                        graph_name, SCHEMA_Y_BASE, bp, systems, (), connectors
                    )
                    if _try(G, results, cert, max_results):
                        return True
                for hub in sorted(set(rest) - set(triple)):
                    if not all(G.has_edge(hub, v) for v in triple):
                        continue
                    connectors = [(u, hub, v) for u, v in combinations(triple, 2)]
                    cert = make_certificate(
                        graph_name, SCHEMA_Y_BASE, bp, systems, (), connectors
                    )
                    if _try(G, results, cert, max_results):
                        return True
    return False


def search_certificates(
    G: Graph,
    max_base_len: int | None = None,
    schemas=None,
    max_results: int | None = None,
) -> list[Certificate]:
    """Enumerate and verify certificates over a small graph.

    Candidates are generated in a fixed canonical order (cycle bases sorted,
    then Y bases; schemas alphabetical within a base; apex and connector
    choices sorted), and only candidates that pass
    :func:`verify_certificate` are returned, so the output is reproducible
    and sound by construction.
    """
    if len(G.vertices) > MAX_SEARCH_VERTICES:
        raise SearchBoundsError(
            f"search supports at most {MAX_SEARCH_VERTICES} vertices, "
            f"got {len(G.vertices)}"
        )
    chosen = tuple(schemas) if schemas is not None else SCHEMAS
    for s in chosen:
        if s not in SCHEMAS:
            raise SearchBoundsError(f"unknown schema {s!r}")
    results: list[Certificate] = []
    for base in enumerate_cycles(G, max_len=max_base_len):
        if _search_cycle_base(G, results, base, chosen, max_results):
            return results
    _search_y_base(G, results, chosen, max_results)
    return results


# ---------------------------------------------------------------------------
# The P10 labelling problem
# ---------------------------------------------------------------------------

#: Adjacencies the P10 narrative pins down on labels 1..10: the base
#: pentagon, the connector edges 7-9 and 8-10, the inner adjacencies 7-10
#: and 6-8, the shared edge 5-6, and the pentagon (2,3,4,10,8).
P10_REQUIRED_EDGES = frozenset(
    edge_key(u, v)
    for u, v in [
        ("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1"),
        ("7", "10"), ("7", "9"), ("8", "10"), ("6", "8"),
        ("5", "6"),
        ("4", "10"), ("2", "8"),
    ]
)

P10_SYSTEM_SETS = (
    ("1", "2", "3", "4", "5", "6", "9"),
    ("1", "2", "3", "4", "5", "7", "10"),
    ("1", "2", "3", "4", "5", "6", "8"),
)


def _p10_labelled_ok(L: Graph) -> bool:
    """Full constraint check for a candidate labelling (graph on labels 1..10)."""
    if any(e not in L.edges for e in P10_REQUIRED_EDGES):
        return False
    base = Cycle(("1", "2", "3", "4", "5"))
    base_piece = SubgraphPiece(base.vertex_set, base.edges())
    systems = []
    for vertex_set in P10_SYSTEM_SETS:
        sub = induced_subgraph(L, vertex_set)
        faces = [c for c in enumerate_cycles(sub) if len(c) in (5, 6)]
        if base not in faces:
            return False
        system = cycle_system(L, faces)
        if not is_combinatorial_sphere(system).is_sphere:
            return False
        systems.append(system)
    for i, j in SYSTEM_PAIRS:
        inter = system_pair_intersection(systems[i - 1], systems[j - 1])
        extra_v = inter.vertices - base_piece.vertices
        extra_e = inter.edges - base_piece.edges
        if (i, j) == (1, 3):
            if extra_v != {"6"} or extra_e != {edge_key("5", "6")}:
                return False
        elif extra_v or extra_e:
            return False
    return True


def solve_p10_labeling() -> list[dict[str, str]]:
    """All relabellings of the standard Petersen graph onto labels 1..10
    that satisfy every adjacency fact used by the bundled P10 certificate.

    Returns bijections from the standard drawing's vertices (o1..o5,
    i1..i5) onto "1".."10", sorted deterministically.  The constraint set
    pins the labelled graph down uniquely, so the solutions are exactly the
    automorphisms' worth of relabellings (120 maps).
    """
    P = standard_petersen()
    labels = [str(i) for i in range(1, 11)]
    required: dict[str, set[str]] = {lab: set() for lab in labels}
    for u, v in P10_REQUIRED_EDGES:
        required[u].add(v)
        required[v].add(u)

    solutions: list[dict[str, str]] = []
    assignment: dict[str, str] = {}  # label -> petersen vertex

    def place(k: int) -> None:
        if k == len(labels):
            mapping = {pv: lab for lab, pv in assignment.items()}
            relabelled = Graph(
                tuple(sorted(labels)),
                frozenset(edge_key(mapping[u], mapping[v]) for u, v in P.edges),
            )
            if _p10_labelled_ok(relabelled):
                solutions.append(dict(sorted(mapping.items())))
            return
        lab = labels[k]
        used = set(assignment.values())
        for pv in P.vertices:
            if pv in used:
                continue
            ok = True
            for other in required[lab]:
                if other in assignment and not P.has_edge(pv, assignment[other]):
                    ok = False
                    break
            if ok:
                assignment[lab] = pv
                place(k + 1)
                del assignment[lab]

    place(0)
    solutions.sort(key=lambda m: tuple(sorted(m.items())))
    return solutions
