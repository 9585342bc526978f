"""Rigidity, sparsity and reduction calculus for torus graphs with one hole.

The toolkit constructs torus graphs with a single hole, decides
(3,6)-tightness and generic minimal 3-rigidity, classifies hole boundaries
into the seventeen detachment forms, and runs the contraction/fission
reduction down to the two uncontractible graphs, emitting vertex-splitting
construction certificates rooted at K3.
"""

from .complexes import (ClosedWalk, DiscMap, SurfaceComplex, TorusComplex,
                        TorusWithHole, boundary_graph, build_complex,
                        cut_hole, cut_holes, detachment_walk,
                        identify_face_graph, rectangular_torus)
from .graphs import Graph, double_banana, freedom, is_isomorphic
from .catalog import (Classification, DetachmentWord, build_H, classify,
                      parse_word, the_17)
from .homology import crossover_class, standard_cochain, walk_class
from .reduction import (Certificate, EdgeClass, ReductionTree, SeparatingCycle,
                        certify, classify_edge, contract, divide, fission,
                        find_critical_cycle_through, is_uncontractible,
                        reduce_greedy, reduction_tree, verify_certificate,
                        vertex_split)
from .rigidity import (RigidityReport, generic_rank, is_min_3_rigid,
                       rigidity_matrix, rigidity_report, random_placement)
from .sparsity import (SparsityVerdict, Status, brute_force_3_6, check_3_6,
                       is_in_T)

__version__ = "0.1.0"

__all__ = [
    "ClosedWalk", "DiscMap", "SurfaceComplex", "TorusComplex", "TorusWithHole",
    "boundary_graph", "build_complex", "cut_hole", "cut_holes",
    "detachment_walk", "identify_face_graph", "rectangular_torus",
    "Graph", "double_banana", "freedom", "is_isomorphic",
    "Classification", "DetachmentWord", "build_H", "classify", "parse_word",
    "the_17",
    "crossover_class", "standard_cochain", "walk_class",
    "Certificate", "EdgeClass", "ReductionTree", "SeparatingCycle", "certify",
    "classify_edge", "contract", "divide", "fission",
    "find_critical_cycle_through", "is_uncontractible", "reduce_greedy",
    "reduction_tree", "verify_certificate", "vertex_split",
    "RigidityReport", "generic_rank", "is_min_3_rigid", "rigidity_matrix",
    "rigidity_report", "random_placement",
    "SparsityVerdict", "Status", "brute_force_3_6", "check_3_6", "is_in_T",
]
