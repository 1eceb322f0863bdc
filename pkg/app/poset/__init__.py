from .pointed import PointedPoset, grade_abstract, length, rank_sizes
from .bruhat import bruhat_order
from .io import export_poset, import_poset, poset_to_dict, poset_to_dot
from .invariants import (
    ReconTriple,
    SimClasses,
    factor_posets,
    g_of,
    leads_to,
    mu,
    nu,
    sim_classes,
    triple,
    vx,
    x0_of,
    x2_of,
    xinf_of,
)
