import json
import random
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from flatcert.certificates import (
    SCHEMA_P10_PATTERN,
    SCHEMA_TRIANGLE_CONNECTOR,
    SCHEMA_Y_CONNECTOR,
    Base,
    ExtraOverlap,
    MalformedCertificateError,
    SearchBoundsError,
    bundled_certificate,
    bundled_certificates,
    certificate_from_json,
    certificate_to_json,
    make_certificate,
    relabel_certificate,
    search_certificates,
    solve_p10_labeling,
    verify_certificate,
)
from flatcert.cycles import Cycle, cycle, enumerate_cycles
from flatcert.graphs import (
    FAMILY_NAMES,
    build_graph,
    edge_key,
    induced_subgraph,
    k6,
    named_graph,
    p10,
    relabel_graph,
    standard_petersen,
)

from helpers import certificate_mutants, mutant_fails

P10_CONFLICT_PAIR = {cycle("1", "2", "3", "9", "6", "5"), cycle("2", "3", "4", "5", "6", "8")}


class TestBundled:
    def test_roster_and_order(self):
        certs = bundled_certificates()
        assert tuple(certs) == FAMILY_NAMES

    @pytest.mark.parametrize("name", ["K6", "P7", "K331", "P8", "K44_MINUS_E", "P9"])
    def test_six_members_verify(self, name):
        report = verify_certificate(named_graph(name), bundled_certificate(name))
        assert report.passed, [(c.name, c.witness) for c in report.checks if not c.passed]

    def test_p10_fails_only_the_pairwise_intersection_condition(self):
        """The P10 construction carries a real defect: the two 6-cycle faces
        of the first and third sphere share a base edge and the declared
        extra edge 5-6, a disconnected intersection.  Every other hypothesis
        holds, and the report pins the exact witness pair."""
        report = verify_certificate(p10(), bundled_certificate("P10"))
        assert not report.passed
        outcomes = {c.name: c.passed for c in report.checks}
        assert outcomes == {
            "cycles-valid": True,
            "bohme-system": False,
            "each-system-sphere": True,
            "base-shared": True,
            "pairwise-overlap-exact": True,
            "connector-disjointness": True,
            "connector-connectivity": True,
        }
        witness = report.check("bohme-system").witness
        assert all(str(tuple(c.seq)) in witness for c in P10_CONFLICT_PAIR)

    def test_p10_systems_match_induced_cycle_derivation(self):
        cert = bundled_certificate("P10")
        g = p10()
        expected_sets = (
            ("1", "2", "3", "4", "5", "6", "9"),
            ("1", "2", "3", "4", "5", "7", "10"),
            ("1", "2", "3", "4", "5", "6", "8"),
        )
        for faces, vertex_set in zip(cert.systems, expected_sets):
            sub = induced_subgraph(g, vertex_set)
            derived = [c for c in enumerate_cycles(sub) if len(c) in (5, 6)]
            assert sorted(faces, key=Cycle.sort_key) == derived

    def test_negative_control_missing_connector(self):
        cert = bundled_certificate("K6")
        damaged = replace(
            cert, connectors=tuple(p for p in cert.connectors if p != ("c", "d"))
        )
        report = verify_certificate(k6(), damaged)
        assert not report.passed
        assert not report.check("connector-connectivity").passed

    def test_json_round_trip(self):
        for name, cert in bundled_certificates().items():
            assert certificate_from_json(certificate_to_json(cert)) == cert


class TestMalformed:
    def test_base_edge_removed(self):
        cert = bundled_certificate("K6")
        damaged = replace(
            cert,
            base=Base(cert.base.kind, cert.base.vertices, cert.base.edges - {("b", "e")}),
        )
        with pytest.raises(MalformedCertificateError, match="stated cycle"):
            verify_certificate(k6(), damaged)

    def test_two_systems_rejected(self):
        cert = bundled_certificate("K6")
        with pytest.raises(MalformedCertificateError, match="exactly 3"):
            verify_certificate(k6(), replace(cert, systems=cert.systems[:2]))

    def test_overlap_needs_p10_schema(self):
        cert = bundled_certificate("K6")
        damaged = replace(
            cert,
            extra_overlaps=(ExtraOverlap((1, 2), frozenset({"a"}), frozenset()),),
        )
        with pytest.raises(MalformedCertificateError, match="only allowed"):
            verify_certificate(k6(), damaged)

    def test_connector_non_edge(self):
        cert = bundled_certificate("P7")
        damaged = replace(cert, connectors=cert.connectors + (("1", "2"),))
        with pytest.raises(MalformedCertificateError, match="non-edge"):
            verify_certificate(named_graph("P7"), damaged)

    def test_foreign_vertex(self):
        cert = bundled_certificate("K6")
        with pytest.raises(MalformedCertificateError):
            verify_certificate(named_graph("P7"), cert)  # base edges are not P7 edges


class TestMutations:
    @pytest.mark.parametrize("name", FAMILY_NAMES)
    def test_every_single_deletion_fails(self, name):
        g = named_graph(name)
        cert = bundled_certificate(name)
        mutants = list(certificate_mutants(cert))
        assert mutants
        for label, mutant in mutants:
            assert mutant_fails(g, mutant), f"{name}: {label} still verifies"


class TestEquivariance:
    @pytest.mark.parametrize("name", ["K331", "P9", "P10"])
    @given(seed=st.integers(0, 10**6))
    @settings(max_examples=10, deadline=None)
    def test_relabeling_preserves_outcomes(self, name, seed):
        g = named_graph(name)
        cert = bundled_certificate(name)
        shuffled = list(g.vertices)
        random.Random(seed).shuffle(shuffled)
        mapping = dict(zip(g.vertices, shuffled))
        before = verify_certificate(g, cert)
        after = verify_certificate(relabel_graph(g, mapping), relabel_certificate(cert, mapping))
        assert after.passed == before.passed
        assert [(c.name, c.passed) for c in after.checks] == [
            (c.name, c.passed) for c in before.checks
        ]


class TestSearch:
    def test_k6_triangle_bases(self):
        found = search_certificates(k6(), max_base_len=3, schemas=[SCHEMA_TRIANGLE_CONNECTOR])
        assert len(found) == 20
        assert len({c.base.vertices for c in found}) == 20

    def test_k6_search_contains_the_bundled_certificate(self):
        found = search_certificates(k6(), max_base_len=3, schemas=[SCHEMA_TRIANGLE_CONNECTOR])
        bundled = bundled_certificate("K6")
        matches = [c for c in found if c.base.vertices == ("b", "e", "f")]
        assert len(matches) == 1
        assert {frozenset(s) for s in matches[0].systems} == {
            frozenset(s) for s in bundled.systems
        }
        assert matches[0].connectors == bundled.connectors

    def test_search_results_verify(self):
        for cert in search_certificates(k6(), max_base_len=3, schemas=[SCHEMA_TRIANGLE_CONNECTOR], max_results=5):
            assert verify_certificate(k6(), cert).passed

    def test_hexagon_has_no_certificates(self):
        c6 = build_graph(
            list("abcdef"),
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("a", "f")],
        )
        assert search_certificates(c6) == []

    def test_p10_pattern_never_verifies_on_the_petersen_graph(self):
        # mechanised counterpart of the bundled-P10 failure: no assignment of
        # this shape passes the pairwise-intersection condition
        assert search_certificates(p10(), max_base_len=5, schemas=[SCHEMA_P10_PATTERN]) == []

    def test_p10_has_a_fully_verified_hexagon_certificate(self):
        found = search_certificates(p10(), max_base_len=6, schemas=[SCHEMA_Y_CONNECTOR], max_results=1)
        assert found and verify_certificate(p10(), found[0]).passed

    def test_size_bound(self):
        labels = [f"v{i}" for i in range(13)]
        with pytest.raises(SearchBoundsError, match="at most 12"):
            search_certificates(build_graph(labels, []))

    def test_unknown_schema(self):
        with pytest.raises(SearchBoundsError, match="unknown schema"):
            search_certificates(k6(), schemas=["NOPE"])

    def test_determinism(self):
        a = search_certificates(k6(), max_base_len=3)
        b = search_certificates(k6(), max_base_len=3)
        assert a == b

    def test_max_results_cuts_off(self):
        found = search_certificates(k6(), max_base_len=3, schemas=[SCHEMA_TRIANGLE_CONNECTOR], max_results=3)
        assert len(found) == 3


class TestP10Labeling:
    def test_solutions_exist_and_are_the_symmetry_orbit(self):
        solutions = solve_p10_labeling()
        assert len(solutions) == 120  # one per automorphism of the Petersen graph
        assert all(sorted(m.values()) == sorted(str(i) for i in range(1, 11)) for m in solutions)

    def test_every_solution_reproduces_the_bundled_labelling(self):
        P = standard_petersen()
        target = p10().edges
        for mapping in solve_p10_labeling():
            image = frozenset(edge_key(mapping[u], mapping[v]) for u, v in P.edges)
            assert image == target

    def test_solutions_are_bijections_from_the_standard_drawing(self):
        P = standard_petersen()
        for mapping in solve_p10_labeling()[:5]:
            assert set(mapping) == set(P.vertices)
