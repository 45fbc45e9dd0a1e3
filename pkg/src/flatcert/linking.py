"""Exact linking numbers of disjoint polygonal cycles in lattice embeddings.

Embeddings place vertices on integer points and draw each edge as one
straight segment.  Linking numbers are computed from signed crossings in a
generic projection obtained by an integer shear, with every predicate
evaluated in exact integer or rational arithmetic, so there is no epsilon
tuning anywhere.  A floating-point Gauss-integral estimator is included as
an independent numerical cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .cycles import Cycle, enumerate_cycles, is_valid_cycle
from .graphs import Graph

TRIANGLES_ONLY = "TRIANGLES_ONLY"
ALL_DISJOINT_CYCLES = "ALL_DISJOINT_CYCLES"
PAIR_MODES = (TRIANGLES_ONLY, ALL_DISJOINT_CYCLES)

RESAMPLE_BUDGET = 1000
SHEAR_BUDGET = 64

Point = tuple[int, int, int]


class EmbeddingError(ValueError):
    """An embedding violates general position or cannot be produced."""


class ProjectionError(ValueError):
    """No usable generic projection was found within the shear budget."""


@dataclass(frozen=True, eq=False)
class Embedding:
    """Vertex coordinates (integer 3-vectors) over a host graph."""

    host: Graph
    coords: dict[str, Point]

    def point(self, v: str) -> Point:
        return self.coords[v]


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross(a: Point, b: Point) -> Point:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a: Point, b: Point) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _orient3d(a: Point, b: Point, c: Point, d: Point) -> int:
    return _dot(_cross(_sub(b, a), _sub(c, a)), _sub(d, a))


def _orient2d(a, b, c) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _collinear(a: Point, b: Point, c: Point) -> bool:
    return _cross(_sub(b, a), _sub(c, a)) == (0, 0, 0)


def _on_segment_2d(p, a, b) -> bool:
    """p collinear with a-b assumed; is p within the closed segment?"""
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _segments_intersect_2d(p1, p2, p3, p4) -> bool:
    o1 = _orient2d(p3, p4, p1)
    o2 = _orient2d(p3, p4, p2)
    o3 = _orient2d(p1, p2, p3)
    o4 = _orient2d(p1, p2, p4)
    if (o1 > 0) != (o2 > 0) and o1 != 0 and o2 != 0 and (o3 > 0) != (o4 > 0) and o3 != 0 and o4 != 0:
        return True
    if o1 == 0 and _on_segment_2d(p1, p3, p4):
        return True
    if o2 == 0 and _on_segment_2d(p2, p3, p4):
        return True
    if o3 == 0 and _on_segment_2d(p3, p1, p2):
        return True
    if o4 == 0 and _on_segment_2d(p4, p1, p2):
        return True
    return False


def _segments_intersect_3d(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Exact test for segments with four distinct endpoints."""
    if _orient3d(p1, p2, p3, p4) != 0:
        return False  # not coplanar, so the lines are skew
    normal = _cross(_sub(p2, p1), _sub(p3, p1))
    if normal == (0, 0, 0):
        normal = _cross(_sub(p2, p1), _sub(p4, p1))
    if normal == (0, 0, 0):
        # all four points on one line: closed-interval overlap along it
        d = _sub(p2, p1)
        t = sorted((_dot(_sub(p, p1), d) for p in (p1, p2)))
        u = sorted((_dot(_sub(p, p1), d) for p in (p3, p4)))
        return max(t[0], u[0]) <= min(t[1], u[1])
    axis = max(range(3), key=lambda i: abs(normal[i]))
    keep = [i for i in range(3) if i != axis]

    def proj(p: Point):
        return (p[keep[0]], p[keep[1]])

    return _segments_intersect_2d(proj(p1), proj(p2), proj(p3), proj(p4))


@dataclass(frozen=True)
class EmbeddingVerdict:
    ok: bool
    violation: str | None = None


def validate_embedding(E: Embedding) -> EmbeddingVerdict:
    """Check general position and report the first violated invariant.

    In order: every vertex has integer coordinates, coordinates are
    pairwise distinct, no three vertices are collinear, and edge segments
    meet only at shared endpoints.
    """
    G = E.host
    for v in G.vertices:
        if v not in E.coords:
            return EmbeddingVerdict(False, f"vertex {v!r} has no coordinates")
        p = E.coords[v]
        if len(p) != 3 or not all(isinstance(x, int) for x in p):
            return EmbeddingVerdict(False, f"vertex {v!r} coordinates are not integer 3-vectors")
    seen: dict[Point, str] = {}
    for v in G.vertices:
        p = E.coords[v]
        if p in seen:
            return EmbeddingVerdict(False, f"vertices {seen[p]!r} and {v!r} coincide at {p}")
        seen[p] = v
    for a, b, c in combinations(G.vertices, 3):
        if _collinear(E.coords[a], E.coords[b], E.coords[c]):
            return EmbeddingVerdict(False, f"vertices {a!r}, {b!r}, {c!r} are collinear")
    edges = G.sorted_edges()
    for (u1, v1), (u2, v2) in combinations(edges, 2):
        if {u1, v1} & {u2, v2}:
            continue  # a shared endpoint is the only allowed contact,
            # and collinearity of the three points is already excluded
        if _segments_intersect_3d(
            E.coords[u1], E.coords[v1], E.coords[u2], E.coords[v2]
        ):
            return EmbeddingVerdict(
                False, f"edges ({u1},{v1}) and ({u2},{v2}) intersect away from endpoints"
            )
    return EmbeddingVerdict(True, None)


def random_embedding(G: Graph, seed: int, radius: int) -> Embedding:
    """Deterministic general-position embedding with coordinates in [-radius, radius]^3.

    Coordinates are drawn from a seeded generator and resampled wholesale
    until every general-position invariant holds.
    """
    if radius < len(G.vertices):
        raise EmbeddingError(
            f"radius {radius} too small for {len(G.vertices)} vertices"
        )
    rng = random.Random(seed)
    for _ in range(RESAMPLE_BUDGET):
        coords = {
            v: (
                rng.randint(-radius, radius),
                rng.randint(-radius, radius),
                rng.randint(-radius, radius),
            )
            for v in G.vertices
        }
        E = Embedding(G, coords)
        if validate_embedding(E).ok:
            return E
    raise EmbeddingError(
        f"no general-position embedding found in {RESAMPLE_BUDGET} attempts"
    )


def embedding_to_json(E: Embedding) -> dict:
    return {"coords": {v: list(E.coords[v]) for v in E.host.vertices}}


def embedding_from_json(host: Graph, data: dict) -> Embedding:
    if not isinstance(data, dict) or "coords" not in data:
        raise EmbeddingError("embedding JSON needs a 'coords' field")
    coords = {}
    for v, p in data["coords"].items():
        if not (isinstance(p, (list, tuple)) and len(p) == 3):
            raise EmbeddingError(f"coordinates for {v!r} are not a 3-vector")
        coords[v] = (int(p[0]), int(p[1]), int(p[2]))
    return Embedding(host, coords)


# ---------------------------------------------------------------------------
# Signed-crossing linking number under integer shear projections
# ---------------------------------------------------------------------------


def _shear_sequence(budget: int = SHEAR_BUDGET) -> list[tuple[int, int]]:
    out = [(0, 0)]
    ring = 1
    while len(out) < budget:
        for p in range(-ring, ring + 1):
            for q in range(-ring, ring + 1):
                if max(abs(p), abs(q)) == ring:
                    out.append((p, q))
        ring += 1
    return out[:budget]


_SHEARS = _shear_sequence()


def _as_oriented(c) -> tuple[str, ...]:
    """Vertex sequence of a cycle argument, preserving a caller's orientation.

    Accepts a :class:`Cycle` (canonical orientation) or a raw vertex
    sequence, which keeps its winding direction; the sign of a linking
    number depends on it.
    """
    if isinstance(c, Cycle):
        return c.seq
    seq = tuple(c)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise EmbeddingError(f"{seq!r} is not a simple cycle sequence")
    return seq


def _polygon(E: Embedding, seq: tuple[str, ...]) -> list[Point]:
    return [E.coords[v] for v in seq]


def _signed_crossing_sum(poly_a, poly_b, shear) -> int | None:
    """Twice the linking number for one projection, or None if degenerate.

    The projection maps (x, y, z) to (x + p z, y + q z) and keeps z for
    over/under decisions.  Any zero orientation test makes the shear
    unusable and returns None.
    """
    p, q = shear

    def flat(pt: Point):
        return (pt[0] + p * pt[2], pt[1] + q * pt[2])

    fa = [flat(pt) for pt in poly_a]
    fb = [flat(pt) for pt in poly_b]
    total = 0
    na, nb = len(poly_a), len(poly_b)
    for i in range(na):
        a1, a2 = fa[i], fa[(i + 1) % na]
        za1, za2 = poly_a[i][2], poly_a[(i + 1) % na][2]
        for j in range(nb):
            b1, b2 = fb[j], fb[(j + 1) % nb]
            zb1, zb2 = poly_b[j][2], poly_b[(j + 1) % nb][2]
            o1 = _orient2d(b1, b2, a1)
            o2 = _orient2d(b1, b2, a2)
            o3 = _orient2d(a1, a2, b1)
            o4 = _orient2d(a1, a2, b2)
            if o1 == 0 or o2 == 0 or o3 == 0 or o4 == 0:
                return None
            if (o1 > 0) == (o2 > 0) or (o3 > 0) == (o4 > 0):
                continue
            t = Fraction(o1, o1 - o2)
            u = Fraction(o3, o3 - o4)
            z_a = za1 + t * (za2 - za1)
            z_b = zb1 + u * (zb2 - zb1)
            if z_a == z_b:
                raise EmbeddingError(
                    "cycle segments intersect in space; embedding is degenerate"
                )
            da = (a2[0] - a1[0], a2[1] - a1[1])
            db = (b2[0] - b1[0], b2[1] - b1[1])
            turn = da[0] * db[1] - da[1] * db[0]
            sign = 1 if turn > 0 else -1
            total += sign if z_a > z_b else -sign
    return total


def linking_number(E: Embedding, a, b) -> int:
    """Exact linking number of two vertex-disjoint cycles.

    Half the signed crossing count in a generic shear projection; the value
    is recomputed under a second generic shear and the two must agree.
    Cycles may be given as :class:`Cycle` values or as oriented vertex
    sequences; reversing one orientation negates the result.
    """
    seq_a, seq_b = _as_oriented(a), _as_oriented(b)
    if set(seq_a) & set(seq_b):
        raise EmbeddingError(f"cycles share vertices {sorted(set(seq_a) & set(seq_b))}")
    for seq in (seq_a, seq_b):
        if not is_valid_cycle(Cycle(seq), E.host):
            raise EmbeddingError(f"{seq!r} is not a cycle of the host graph")
    poly_a, poly_b = _polygon(E, seq_a), _polygon(E, seq_b)
    values = []
    for shear in _SHEARS:
        doubled = _signed_crossing_sum(poly_a, poly_b, shear)
        if doubled is None:
            continue
        if doubled % 2 != 0:
            raise ProjectionError(
                f"odd signed crossing sum {doubled} under shear {shear}"
            )
        values.append(doubled // 2)
        if len(values) == 2:
            if values[0] != values[1]:
                raise ProjectionError(
                    f"projections disagree: {values[0]} vs {values[1]}"
                )
            return values[0]
    raise ProjectionError(
        f"fewer than two generic shears among {len(_SHEARS)} candidates"
    )


def disjoint_cycle_pairs(G: Graph, mode: str = ALL_DISJOINT_CYCLES):
    """All unordered pairs of vertex-disjoint cycles, canonically ordered.

    ``TRIANGLES_ONLY`` restricts both cycles to triangles.
    """
    if mode not in PAIR_MODES:
        raise ValueError(f"unknown pair mode {mode!r}")
    max_len = 3 if mode == TRIANGLES_ONLY else None
    cycles = enumerate_cycles(G, max_len=max_len)
    pairs = []
    for c1, c2 in combinations(cycles, 2):
        if not (c1.vertex_set & c2.vertex_set):
            pairs.append((c1, c2))
    return pairs


@dataclass(frozen=True)
class OmegaReport:
    """Linking numbers over all disjoint cycle pairs and their mod-2 sum."""

    pairs: tuple[tuple[Cycle, Cycle, int], ...]
    parity: int
    mode: str


def omega(G: Graph, E: Embedding, mode: str = ALL_DISJOINT_CYCLES) -> OmegaReport:
    results = []
    total = 0
    for c1, c2 in disjoint_cycle_pairs(G, mode):
        lk = linking_number(E, c1, c2)
        results.append((c1, c2, lk))
        total += lk
    return OmegaReport(tuple(results), total % 2, mode)


def omega_to_json(report: OmegaReport) -> dict:
    return {
        "mode": report.mode,
        "parity": report.parity,
        "pairs": [
            {"cycle_a": list(c1.seq), "cycle_b": list(c2.seq), "lk": lk}
            for c1, c2, lk in report.pairs
        ],
    }


# ---------------------------------------------------------------------------
# Gauss-integral estimator (independent floating-point cross-check)
# ---------------------------------------------------------------------------

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl_nodes(n: int):
    if n not in _GL_CACHE:
        x, w = np.polynomial.legendre.leggauss(n)
        _GL_CACHE[n] = ((x + 1.0) / 2.0, w / 2.0)
    return _GL_CACHE[n]


def _pair_quad(p1, p2, q1, q2, n: int) -> float:
    s, ws = _gl_nodes(n)
    v1 = p2 - p1
    v2 = q2 - q1
    c = np.cross(v1, v2)
    r1 = p1 + np.outer(s, v1)
    r2 = q1 + np.outer(s, v2)
    diff = r1[:, None, :] - r2[None, :, :]
    dist = np.sqrt((diff * diff).sum(axis=2))
    integrand = (diff @ c) / dist**3
    return float((ws[:, None] * ws[None, :] * integrand).sum())


def _pair_integral(p1, p2, q1, q2, tol: float, depth: int) -> float:
    coarse = _pair_quad(p1, p2, q1, q2, 8)
    fine = _pair_quad(p1, p2, q1, q2, 16)
    if abs(fine - coarse) <= tol or depth <= 0:
        return fine
    pm = (p1 + p2) / 2.0
    qm = (q1 + q2) / 2.0
    half = tol / 4.0
    return (
        _pair_integral(p1, pm, q1, qm, half, depth - 1)
        + _pair_integral(p1, pm, qm, q2, half, depth - 1)
        + _pair_integral(pm, p2, q1, qm, half, depth - 1)
        + _pair_integral(pm, p2, qm, q2, half, depth - 1)
    )


def gauss_linking_estimate(E: Embedding, a, b, tol: float = 1e-4) -> float:
    """Floating-point Gauss double integral over the two polygons.

    Independent of the signed-crossing route: adaptive Gauss-Legendre
    quadrature of the linking integrand over every segment pair.
    """
    seq_a, seq_b = _as_oriented(a), _as_oriented(b)
    if set(seq_a) & set(seq_b):
        raise EmbeddingError("cycles share vertices")
    poly_a = np.array(_polygon(E, seq_a), dtype=float)
    poly_b = np.array(_polygon(E, seq_b), dtype=float)
    total = 0.0
    na, nb = len(poly_a), len(poly_b)
    for i in range(na):
        p1, p2 = poly_a[i], poly_a[(i + 1) % na]
        for j in range(nb):
            q1, q2 = poly_b[j], poly_b[(j + 1) % nb]
            total += _pair_integral(p1, p2, q1, q2, tol, 12)
    return total / (4.0 * np.pi)
