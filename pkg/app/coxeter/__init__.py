from .matrix import (
    INFINITY,
    CoxeterMatrix,
    ParabolicSubset,
    WeylType,
    all_parabolics,
    build_weyl,
    connected_components,
    irreducible_weyl_types,
    is_simple,
    nontrivial_components,
    pair_name,
    product,
    type_name,
    weyl_matrix,
    weyl_type_of,
)
from .bw_graph import (
    BLACK,
    WHITE,
    BWGraph,
    bu_expand,
    bw_graph,
    bwgraph_isomorphic,
    invert_bu,
    pairs_isomorphic,
)
