import random

import pytest
from hypothesis import given, settings, strategies as st

from flatcert.certificates import bundled_certificates
from flatcert.cycles import CycleError, cycle
from flatcert.graphs import build_graph, k331, k44_minus_e, k6, named_graph, relabel_graph
from flatcert.spheres import (
    carrier,
    cycle_system,
    euler_characteristic,
    is_combinatorial_sphere,
    system_from_json,
    system_pair_intersection,
    system_to_json,
)

TETRAHEDRON = [cycle("b", "e", "f"), cycle("b", "c", "e"), cycle("c", "e", "f"), cycle("b", "c", "f")]

PYRAMID = [  # quadrilateral base plus four triangles through the apex v
    cycle("a", "2", "c", "3"),
    cycle("c", "2", "v"),
    cycle("c", "v", "3"),
    cycle("3", "v", "a"),
    cycle("a", "v", "2"),
]

THREE_QUADS = [  # the K2,3 pillow: three quadrilaterals through 1 and 4
    cycle("1", "b", "4", "c"),
    cycle("1", "c", "4", "d"),
    cycle("1", "b", "4", "d"),
]


def fan_of_three():
    """Three triangles sharing one common edge: not a surface."""
    g = build_graph(list("abcde"), [("a", "b"), ("a", "c"), ("b", "c"),
                                    ("a", "d"), ("b", "d"), ("a", "e"), ("b", "e")])
    return cycle_system(g, [cycle("a", "b", "c"), cycle("a", "b", "d"), cycle("a", "b", "e")])


class TestCarrierAndChi:
    def test_tetrahedron_carrier_is_k4(self):
        sys = cycle_system(k6(), TETRAHEDRON)
        skel = carrier(sys)
        assert skel.vertices == {"b", "c", "e", "f"}
        assert len(skel.edges) == 6
        assert euler_characteristic(sys) == 2

    def test_single_triangle(self):
        sys = cycle_system(k6(), [cycle("a", "b", "c")])
        skel = carrier(sys)
        assert skel.vertices == {"a", "b", "c"} and len(skel.edges) == 3
        assert euler_characteristic(sys) == 1

    def test_pyramid_chi(self):
        assert euler_characteristic(cycle_system(k331(), PYRAMID)) == 2

    def test_three_quads_carrier(self):
        sys = cycle_system(k44_minus_e(), THREE_QUADS)
        skel = carrier(sys)
        assert skel.vertices == {"1", "4", "b", "c", "d"}
        assert skel.edges == {("1", "b"), ("1", "c"), ("1", "d"), ("4", "b"), ("4", "c"), ("4", "d")}
        assert euler_characteristic(sys) == 2

    def test_shared_edge_fan_chi(self):
        assert euler_characteristic(fan_of_three()) == 1

    def test_invalid_face_rejected(self):
        with pytest.raises(CycleError, match="not a cycle"):
            cycle_system(k6(), [cycle("a", "b", "zz")])


class TestSphereVerdicts:
    def test_tetrahedron_is_sphere(self):
        verdict = is_combinatorial_sphere(cycle_system(k6(), TETRAHEDRON))
        assert verdict.is_closed_surface and verdict.is_sphere
        assert verdict.euler_characteristic == 2
        assert verdict.failures == ()

    def test_three_quads_is_sphere(self):
        assert is_combinatorial_sphere(cycle_system(k44_minus_e(), THREE_QUADS)).is_sphere

    def test_pyramid_is_sphere(self):
        assert is_combinatorial_sphere(cycle_system(k331(), PYRAMID)).is_sphere

    def test_shared_edge_fan_fails_edge_degree(self):
        verdict = is_combinatorial_sphere(fan_of_three())
        assert not verdict.is_closed_surface and not verdict.is_sphere
        assert any(f.kind == "edge-degree" and "3 face" in f.detail for f in verdict.failures)

    def test_pinched_complex_fails_vertex_link(self):
        # two tetrahedra sharing exactly one vertex: chi is 3, and the link
        # of the shared vertex splits into two fans
        edges = [(u, v) for u, v in
                 [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"),
                  ("a", "e"), ("a", "f"), ("a", "g"), ("e", "f"), ("e", "g"), ("f", "g")]]
        g = build_graph(list("abcdefg"), edges)
        faces = [cycle("a", "b", "c"), cycle("a", "b", "d"), cycle("a", "c", "d"), cycle("b", "c", "d"),
                 cycle("a", "e", "f"), cycle("a", "e", "g"), cycle("a", "f", "g"), cycle("e", "f", "g")]
        verdict = is_combinatorial_sphere(cycle_system(g, faces))
        assert not verdict.is_sphere
        kinds = {f.kind for f in verdict.failures}
        assert "vertex-link" in kinds and "chi" in kinds

    def test_two_components_fail(self):
        edges = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"),
                 ("e", "f"), ("e", "g"), ("e", "h"), ("f", "g"), ("f", "h"), ("g", "h")]
        g = build_graph(list("abcdefgh"), edges)
        faces = [cycle("a", "b", "c"), cycle("a", "b", "d"), cycle("a", "c", "d"), cycle("b", "c", "d"),
                 cycle("e", "f", "g"), cycle("e", "f", "h"), cycle("e", "g", "h"), cycle("f", "g", "h")]
        verdict = is_combinatorial_sphere(cycle_system(g, faces))
        assert not verdict.is_sphere
        assert any(f.kind == "disconnected" for f in verdict.failures)
        assert verdict.euler_characteristic == 4

    def test_empty_system(self):
        verdict = is_combinatorial_sphere(cycle_system(k6(), []))
        assert not verdict.is_closed_surface and not verdict.is_sphere


class TestPairIntersections:
    def test_y_intersection(self):
        g = k44_minus_e()
        a1 = cycle_system(g, THREE_QUADS)
        a2 = cycle_system(g, [cycle("2", "b", "4", "c"), cycle("2", "c", "4", "d"), cycle("2", "b", "4", "d")])
        piece = system_pair_intersection(a1, a2)
        assert piece.vertices == {"4", "b", "c", "d"}
        assert piece.edges == {("4", "b"), ("4", "c"), ("4", "d")}

    def test_hexagon_intersection(self):
        g = named_graph("P9")
        s1 = cycle_system(g, [cycle("1", "2", "3", "4", "5", "6"), cycle("6", "7", "3", "4", "5"), cycle("6", "7", "3", "2", "1")])
        s2 = cycle_system(g, [cycle("1", "2", "3", "4", "5", "6"), cycle("2", "8", "5", "4", "3"), cycle("2", "8", "5", "6", "1")])
        piece = system_pair_intersection(s1, s2)
        assert piece.vertices == set("123456")
        assert piece.edges == cycle("1", "2", "3", "4", "5", "6").edges()

    def test_identical_systems(self):
        sys = cycle_system(k6(), TETRAHEDRON)
        assert system_pair_intersection(sys, sys) == carrier(sys)

    def test_host_mismatch(self):
        with pytest.raises(CycleError, match="different host"):
            system_pair_intersection(
                cycle_system(k6(), TETRAHEDRON),
                cycle_system(k331(), PYRAMID),
            )


def bundled_systems():
    out = []
    for name, cert in bundled_certificates().items():
        g = named_graph(name)
        for i, faces in enumerate(cert.systems):
            out.append((f"{name}[{i}]", cycle_system(g, faces)))
    return out


class TestBundledSystems:
    def test_all_bundled_systems_are_spheres(self):
        for label, sys in bundled_systems():
            verdict = is_combinatorial_sphere(sys)
            assert verdict.is_sphere, (label, verdict.failures)

    def test_removing_any_face_breaks_closure(self):
        for label, sys in bundled_systems():
            for face in sys.sorted_faces():
                pruned = cycle_system(sys.host, sys.faces - {face})
                verdict = is_combinatorial_sphere(pruned)
                assert not verdict.is_closed_surface, (label, face.seq)
                assert any(f.kind in ("edge-degree", "disconnected") for f in verdict.failures)

    @given(st.integers(0, 10**6))
    @settings(max_examples=20, deadline=None)
    def test_chi_relabeling_invariant(self, seed):
        rng = random.Random(seed)
        sys = cycle_system(k6(), TETRAHEDRON)
        shuffled = list("uvwxyz")
        rng.shuffle(shuffled)
        mapping = dict(zip("abcdef", shuffled))
        host = relabel_graph(k6(), mapping)
        moved = cycle_system(host, [cycle(*(mapping[v] for v in c.seq)) for c in TETRAHEDRON])
        assert euler_characteristic(moved) == euler_characteristic(sys)


class TestJson:
    def test_round_trip(self):
        sys = cycle_system(k6(), TETRAHEDRON)
        data = system_to_json(sys)
        assert system_from_json(k6(), data) == sys
        assert data["faces"] == sorted(data["faces"], key=lambda f: (len(f), f))

    def test_rejects_garbage(self):
        with pytest.raises(CycleError):
            system_from_json(k6(), {"nope": []})
