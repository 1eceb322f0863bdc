from .fingerprint import Fingerprint, fingerprint, refine_colours
from .isomorphism import matching_factors, poset_isomorphic
from .patterns import (
    FamilyInstance,
    dedupe_pairs,
    expected_coincidences,
    family_instances,
    irreducible_pairs,
    make_pair,
    product_pairs,
    weyl_products,
)
from .classify import CoincidenceClass, CoincidenceReport, PairResult, classify
from .verify import (
    SUITE_ALIASES,
    SUITES,
    CheckResult,
    families_check,
    reconstruct_pair,
    run_suite,
    verify_readback,
)
