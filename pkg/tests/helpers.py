"""Shared test utilities: independent oracles and certificate mutations."""

from __future__ import annotations

import random
from dataclasses import replace
from itertools import combinations, permutations

from flatcert.certificates import Base, Certificate, MalformedCertificateError, verify_certificate
from flatcert.graphs import Graph, build_graph


def brute_force_cycles(G: Graph) -> set[tuple[str, ...]]:
    """Every simple cycle by exhaustion over vertex subsets and circular orders.

    Anchors each subset at its smallest vertex and keeps only one direction
    (second element smaller than last), which is exactly the canonical form
    used by the library, so results are directly comparable.
    """
    out: set[tuple[str, ...]] = set()
    for k in range(3, len(G.vertices) + 1):
        for subset in combinations(G.vertices, k):  # vertices sorted, so subset[0] is min
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                if perm[0] > perm[-1]:
                    continue  # reflection duplicate
                seq = (first,) + perm
                if all(G.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                    out.add(seq)
    return out


def random_graph(rng: random.Random, max_vertices: int = 8) -> Graph:
    n = rng.randint(3, max_vertices)
    labels = [f"v{i}" for i in range(n)]
    pairs = list(combinations(labels, 2))
    edges = [e for e in pairs if rng.random() < rng.uniform(0.2, 0.9)]
    return build_graph(labels, edges)


def certificate_mutants(cert: Certificate):
    """All single deletions: one face, one connector, or one base edge."""
    for i, faces in enumerate(cert.systems):
        for f in faces:
            systems = list(cert.systems)
            systems[i] = tuple(x for x in faces if x != f)
            yield f"system {i + 1} minus face {f.seq}", replace(
                cert, systems=tuple(systems)
            )
    for path in cert.connectors:
        yield f"minus connector {path}", replace(
            cert, connectors=tuple(p for p in cert.connectors if p != path)
        )
    for e in sorted(cert.base.edges):
        damaged = Base(cert.base.kind, cert.base.vertices, cert.base.edges - {e})
        yield f"base minus edge {e}", replace(cert, base=damaged)


def mutant_fails(G: Graph, mutant: Certificate) -> bool:
    """A mutant fails if verification rejects it or reports failure."""
    try:
        return not verify_certificate(G, mutant).passed
    except MalformedCertificateError:
        return True
