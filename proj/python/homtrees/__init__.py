"""Exact graph homomorphism counting and star extremality checks."""

try:
    from . import _homtrees as _impl  # installed layout
except ImportError:  # development layout: extension built next to the sources
    import _homtrees as _impl

Graph = _impl.Graph
GraphError = _impl.GraphError
GuardExceeded = _impl.GuardExceeded
MatrixError = _impl.MatrixError
Tree = _impl.Tree
as_tree = _impl.as_tree
broom_chain = _impl.broom_chain
canonical_code = _impl.canonical_code
check_certificate = _impl.check_certificate
complete_graph = _impl.complete_graph
cycle_graph = _impl.cycle_graph
empirical_order = _impl.empirical_order
enumerate_free_trees = _impl.enumerate_free_trees
hoffman_check = _impl.hoffman_check
hom_bruteforce = _impl.hom_bruteforce
hom_count = _impl.hom_count
hom_tree = _impl.hom_tree
parse_graph = _impl.parse_graph
path_graph = _impl.path_graph
phi_profile = _impl.phi_profile
remove_edge = _impl.remove_edge
row_power_sum = _impl.row_power_sum
serialize_graph = _impl.serialize_graph
spanning_tree = _impl.spanning_tree
star_count = _impl.star_count
star_graph = _impl.star_graph
transform_chain = _impl.transform_chain
verify_theorem = _impl.verify_theorem
walk_sum = _impl.walk_sum

__all__ = [
    "Graph",
    "GraphError",
    "GuardExceeded",
    "MatrixError",
    "Tree",
    "as_tree",
    "broom_chain",
    "canonical_code",
    "check_certificate",
    "complete_graph",
    "cycle_graph",
    "empirical_order",
    "enumerate_free_trees",
    "hoffman_check",
    "hom_bruteforce",
    "hom_count",
    "hom_tree",
    "parse_graph",
    "path_graph",
    "phi_profile",
    "remove_edge",
    "row_power_sum",
    "serialize_graph",
    "spanning_tree",
    "star_count",
    "star_graph",
    "transform_chain",
    "verify_theorem",
    "walk_sum",
]
