"""k-proper colorings of complete bipartite and multipartite graphs.

Build the explicit colorings, certify them by exhaustive proper-tree
search, and compute small k-proper indices exactly.
"""

__version__ = "0.1.0"

from .constructions import (
    Construction,
    NotCoveredError,
    color_bipartite,
    color_dominating,
    color_k2t,
    color_k3t,
    color_kst_alternating,
    color_kst_dominating,
    color_multipartite,
    color_star,
    color_traceable,
    hamiltonian_path_multipartite,
)
from .graph import (
    ColorCode,
    EdgeColoring,
    FamilySpec,
    FormatError,
    Graph,
    codes_from_coloring,
    coloring_from_codes,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    deserialize,
    path_graph,
    serialize,
)
from .search import (
    ProperTreeSearch,
    TreeWitness,
    VerifyReport,
    find_proper_s_tree,
    is_k_proper,
    is_proper_tree,
)
from .solver import (
    CodeMultiset,
    PxResult,
    enumerate_code_multisets,
    enumerate_colorings,
    exact_px_k,
    exists_k_proper_coloring,
    pigeonhole_lower_bound_k2t,
    px3_formula,
    pxk_bounds,
)
