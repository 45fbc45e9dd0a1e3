"""Verifying the bundled certificates and searching for new ones.

Six of the seven shipped certificates verify outright.  The P10 one fails
exactly one hypothesis, with a two-cycle witness: its first and third
spheres' 6-cycle faces share a base edge plus the declared extra edge
(5,6), so their intersection is disconnected.  The search then shows P10
still carries fully verified certificates of a different shape (hexagon
base, connectors through a hub), and that K6 has one certificate per
triangle.
"""

from flatcert import (
    bundled_certificates,
    named_graph,
    search_certificates,
    solve_p10_labeling,
    verify_certificate,
)
from flatcert.certificates import SCHEMA_TRIANGLE_CONNECTOR, SCHEMA_Y_CONNECTOR

print("bundled certificates:")
for name, cert in bundled_certificates().items():
    report = verify_certificate(named_graph(name), cert)
    status = "PASS" if report.passed else "FAIL"
    print(f"  {name:12s} schema={cert.schema:19s} base={'-'.join(cert.base.vertices):14s} {status}")
    for check in report.checks:
        if not check.passed:
            print(f"      {check.name}: {check.witness}")

print("\nsearch on K6 (triangle bases):")
found = search_certificates(named_graph("K6"), max_base_len=3,
                            schemas=[SCHEMA_TRIANGLE_CONNECTOR])
print(f"  {len(found)} verified certificates, one per triangle")

print("\nsearch on P10 (hexagon bases, hub connectors):")
found = search_certificates(named_graph("P10"), max_base_len=6,
                            schemas=[SCHEMA_Y_CONNECTOR], max_results=3)
for cert in found:
    print(f"  base {'-'.join(cert.base.vertices)}  connectors "
          f"{['-'.join(p) for p in cert.connectors]}")

print("\nthe P10 labelling problem:")
solutions = solve_p10_labeling()
print(f"  {len(solutions)} relabellings of the standard drawing satisfy the")
print("  stated adjacencies; all of them produce the same labelled graph.")
first = solutions[0]
print(f"  one of them: {first}")
