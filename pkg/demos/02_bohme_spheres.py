"""Böhme systems and combinatorial spheres, on the K6 configuration.

Ten triangles of K6 arranged as three tetrahedra sharing the face (b,e,f)
have pairwise connected intersections, and each tetrahedron passes the
closed-surface and Euler-characteristic tests.  Damaging a system shows
what the verdicts report.
"""

from flatcert import (
    carrier,
    cycle,
    cycle_system,
    euler_characteristic,
    is_bohme_system,
    is_combinatorial_sphere,
    named_graph,
)

k6 = named_graph("K6")

tetrahedra = {
    "apex c": [cycle("b", "e", "f"), cycle("b", "c", "e"), cycle("c", "e", "f"), cycle("b", "c", "f")],
    "apex a": [cycle("b", "e", "f"), cycle("a", "b", "e"), cycle("a", "e", "f"), cycle("a", "b", "f")],
    "apex d": [cycle("b", "e", "f"), cycle("b", "d", "e"), cycle("d", "e", "f"), cycle("b", "d", "f")],
}

union = sorted({c for faces in tetrahedra.values() for c in faces}, key=lambda c: c.seq)
verdict = is_bohme_system(union, k6)
print(f"{len(union)} triangles over the shared face (b,e,f)")
print(f"pairwise intersections connected or empty: {verdict.ok}\n")

for label, faces in tetrahedra.items():
    system = cycle_system(k6, faces)
    skel = carrier(system)
    sphere = is_combinatorial_sphere(system)
    print(
        f"{label}: carrier {sorted(skel.vertices)} "
        f"chi={euler_characteristic(system)} sphere={sphere.is_sphere}"
    )

print("\ndropping one face of the first tetrahedron:")
damaged = cycle_system(k6, list(tetrahedra["apex c"])[1:])
verdict = is_combinatorial_sphere(damaged)
print(f"  closed surface: {verdict.is_closed_surface}, chi={verdict.euler_characteristic}")
for failure in verdict.failures:
    print(f"  failure[{failure.kind}]: {failure.detail}")

print("\na pair with disconnected intersection (the two K4 quadrilaterals):")
bad = is_bohme_system([cycle("a", "b", "c", "d"), cycle("a", "c", "b", "d")],
                      named_graph("K6"))
print(f"  ok={bad.ok}, witness={[c.seq for c in bad.witness]}")
