"""Combinatorial certificates that no Petersen-family graph is flatly embeddable.

The library has five parts: simple graphs and delta-wye exchanges
(:mod:`flatcert.graphs`), cycle enumeration and the Böhme pairwise
condition (:mod:`flatcert.cycles`), combinatorial 2-sphere checks
(:mod:`flatcert.spheres`), non-flatness certificates with a verifier and
a searcher (:mod:`flatcert.certificates`), and exact linking numbers of
straight-line spatial embeddings as an independent cross-check
(:mod:`flatcert.linking`).
"""

from .graphs import (
    CanonicalLabel,
    FamilyMember,
    FAMILY_NAMES,
    Graph,
    GraphError,
    are_isomorphic,
    build_graph,
    canonical_form,
    delta_y,
    generate_petersen_family,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    identify_family_member,
    induced_subgraph,
    named_graph,
    relabel_graph,
    standard_petersen,
    y_delta,
)
from .cycles import (
    BohmeVerdict,
    Cycle,
    CycleError,
    SubgraphPiece,
    cycle,
    cycle_intersection,
    enumerate_cycles,
    is_bohme_system,
    is_induced_cycle,
    is_valid_cycle,
    piece_components,
)
from .spheres import (
    CycleSystem,
    SurfaceVerdict,
    carrier,
    cycle_system,
    euler_characteristic,
    is_combinatorial_sphere,
    system_pair_intersection,
)
from .certificates import (
    Certificate,
    MalformedCertificateError,
    SCHEMAS,
    SearchBoundsError,
    VerificationReport,
    bundled_certificate,
    bundled_certificates,
    certificate_from_json,
    certificate_to_json,
    search_certificates,
    solve_p10_labeling,
    verify_certificate,
)
from .linking import (
    Embedding,
    EmbeddingError,
    OmegaReport,
    ProjectionError,
    ALL_DISJOINT_CYCLES,
    TRIANGLES_ONLY,
    disjoint_cycle_pairs,
    gauss_linking_estimate,
    linking_number,
    omega,
    random_embedding,
    validate_embedding,
)

__version__ = "0.1.0"
