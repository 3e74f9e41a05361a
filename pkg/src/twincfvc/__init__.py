"""Twin-cover kernelization and exact tools for strong conflict-free
vertex-connection colorings."""

__version__ = "0.1.0"

from .coloring import (
    Coloring,
    ExtensionReport,
    chi_via_twin_cover,
    chromatic_number_exact,
    extension_number,
    is_proper,
    svcfc_upper_coloring,
)
from .errors import BudgetError, CfvcError, InputError, ParseError, StructuralError, ValidityError
from .graph import Graph, delete_vertices, distance, enumerate_shortest_paths, is_connected
from .kernel import AnnotatedInstance, KernelReport, kernel_bound, kernelize, kernelize_annotated
from .svcfc import (
    CfvcVerdict,
    is_strong_cfvc_coloring,
    path_is_conflict_free,
    svcfc_decide,
    svcfc_exact,
)
from .twins import (
    TwinClique,
    approx_twin_cover,
    are_true_twins,
    decompose_twin_cliques,
    exact_twin_cover,
    is_twin_cover,
    m_of_S,
    twin_core_graph,
)

__all__ = [
    "AnnotatedInstance",
    "approx_twin_cover",
    "are_true_twins",
    "BudgetError",
    "CfvcError",
    "CfvcVerdict",
    "chi_via_twin_cover",
    "chromatic_number_exact",
    "Coloring",
    "decompose_twin_cliques",
    "delete_vertices",
    "distance",
    "enumerate_shortest_paths",
    "exact_twin_cover",
    "extension_number",
    "ExtensionReport",
    "Graph",
    "InputError",
    "is_connected",
    "is_proper",
    "is_strong_cfvc_coloring",
    "is_twin_cover",
    "kernel_bound",
    "kernelize",
    "kernelize_annotated",
    "KernelReport",
    "m_of_S",
    "ParseError",
    "path_is_conflict_free",
    "StructuralError",
    "svcfc_decide",
    "svcfc_exact",
    "svcfc_upper_coloring",
    "twin_core_graph",
    "TwinClique",
    "ValidityError",
]
