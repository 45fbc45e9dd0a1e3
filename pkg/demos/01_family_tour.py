"""Tour of the Petersen family: exchanges, closure, and identification.

Starting from K6, delta-wye and wye-delta exchanges generate exactly seven
graphs up to isomorphism, all with fifteen edges.  This script generates
the closure, shows how each member is reached, and identifies a few
hand-built graphs against the family roster.
"""

from flatcert import (
    build_graph,
    delta_y,
    generate_petersen_family,
    graph_to_dot,
    identify_family_member,
    named_graph,
    standard_petersen,
    y_delta,
)

members = generate_petersen_family()
print(f"closure of K6 under both exchanges: {len(members)} isomorphism classes\n")
for m in members:
    route = " -> ".join(("K6",) + m.provenance) if m.provenance else "seed graph"
    print(f"  {m.name:12s} |V|={len(m.graph.vertices):2d} |E|={len(m.graph.edges)}   {route}")

print("\nA delta-wye exchange on any triangle of K6 lands on P7:")
k6 = named_graph("K6")
product = delta_y(k6, ("a", "b", "c"), "y")
print(f"  K6 + delta_y(a,b,c) -> {identify_family_member(product)}")
print(f"  undoing it:            {identify_family_member(y_delta(product, 'y'))}")

print("\nThe textbook Petersen drawing (outer pentagon, spokes, pentagram):")
print(f"  identify_family_member -> {identify_family_member(standard_petersen())}")

print("\nA graph outside the family identifies as None:")
c5 = build_graph(list("abcde"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "e")])
print(f"  pentagon -> {identify_family_member(c5)}")

print("\nDOT export of K3,3,1 (first lines):")
print("\n".join(graph_to_dot(named_graph("K331")).splitlines()[:6]))
print("  ...")
