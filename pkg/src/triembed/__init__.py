"""Oriented upper embeddings of triple systems.

Given a Steiner triple system or an odd-order Latin square together with a
prescribed cyclic orientation for every triple, construct an embedding of the
design in an orientable surface with one triangular face per triple and a
single outer face, realizing every prescribed orientation.  Verification is
by face tracing, Euler-characteristic accounting, and brute-force rotation
system enumeration on small instances.
"""

from triembed.designs import (
    LatinSquare,
    OrientationAssignment,
    TripleSystem,
    ValidationReport,
    gen_cayley_latin,
    gen_sts,
    latin_from_triple_system,
    latin_to_triple_system,
    validate_latin_square,
    validate_sts,
    validate_triple_system,
)
from triembed.incidence import (
    DartGraph,
    IncidenceGraph,
    Vertex,
    betti_number,
    build_incidence_graph,
    is_connected,
)
from triembed.spanning import (
    CotreeParityReport,
    PathDecomposition,
    SpanningTree,
    TriplePath,
    build_initial_sts_tree,
    build_ls_tree,
    cotree_parity,
    decompose_cotree_paths,
    repair_odd_points,
)
from triembed.rotation import (
    Embedding,
    FaceWalk,
    RotationSystem,
    add_path,
    embed_spanning_tree,
    genus_of,
    induced_orientation,
    inflate_blocks,
    reversed_system,
    trace_faces,
    upper_embed,
    verify_upper_embedding,
)
from triembed.oracle import (
    CapExceededError,
    OracleReport,
    SweepMode,
    SweepReport,
    brute_force_single_face,
    cross_check_single_face,
    enumerate_rotation_systems,
    rotation_system_count,
    sweep_orientations,
)

__version__ = "0.1.0"
