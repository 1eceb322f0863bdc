# app/classification/verify.py
"""Verification suites.

Each check compares what the abstract poset operators read off (W^J, <=)
with the Coxeter data the pair was built from, or with the brute-force
oracle. Checks return CheckResult rows; suites are lists of them.
"""
import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, List, Optional

from ..coxeter.bw_graph import (
    BWGraph,
    bu_expand,
    bw_graph,
    bwgraph_isomorphic,
    drop_unattached_white,
    invert_bu,
)
from ..coxeter.matrix import (
    ParabolicSubset,
    WeylType,
    build_weyl,
    connected_components,
    is_simple,
    pair_name,
)
from ..engine.quotient import QuotientTable, apply_word, enumerate_quotient, generator_elements, quotient_length
from ..engine.roots import longest_length, matrix_order
from ..errors import BUPreconditionError, EnumerationOverflow, NotInImage
from ..oracle.brute_force import DEFAULT_CAP, enumerate_group, oracle_poset, unique_expression_set
from ..poset.bruhat import bruhat_order
from ..poset.invariants import (
    g_of,
    leads_to,
    sim_classes,
    triple,
    vx,
    x0_elements,
    x2_of,
    xinf_elements,
    xinf_of,
)
from ..poset.pointed import PointedPoset
from .isomorphism import poset_isomorphic
from .patterns import FamilyInstance, irreducible_pairs, family_instances, make_pair, product_pairs

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    suite: str
    case: str
    passed: bool
    failures: List[str] = field(default_factory=list)
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if 'skipped' in self.details:
            return 'skipped'
        return 'pass' if self.passed else 'fail'

    def to_dict(self) -> Dict[str, object]:
        return {
            'suite': self.suite,
            'case': self.case,
            'status': self.status,
            'failures': self.failures,
            'details': self.details,
        }


def _result(suite: str, J: ParabolicSubset, failures: List[str], **details) -> CheckResult:
    return CheckResult(suite, pair_name(J), not failures, failures, details)


def _poset_of(J: ParabolicSubset, cap: Optional[int] = None):
    q = enumerate_quotient(J.matrix, J, cap)
    return q, bruhat_order(q)


def verify_readback(J: ParabolicSubset, cap: Optional[int] = None) -> CheckResult:
    """X_1, mu and nu against S minus J, the bonds and the J-neighbour counts.

    When no generator outside J has a neighbour in J the quotient must be
    isomorphic to the full group on S minus J.
    """
    m = J.matrix
    q, p = _poset_of(J, cap)
    t = triple(p)
    element = generator_elements(q)
    failures = []
    if sorted(t.x1) != sorted(element.values()):
        failures.append(f'X1 = {sorted(t.x1)} but generators outside J give {sorted(element.values())}')
    else:
        black = sorted(element)
        for i, s in enumerate(black):
            if t.nu[element[s]] != len(J.white_neighbours(s)):
                failures.append(f'nu(s{s}) = {t.nu[element[s]]}, expected {len(J.white_neighbours(s))}')
            for u in black[i + 1:]:
                got = t.mu_of(element[s], element[u])
                if got != m.bond(s, u):
                    failures.append(f'mu(s{s}, s{u}) = {got}, expected {m.bond(s, u)}')

    separated = all(not J.white_neighbours(s) for s in J.complement)
    if separated and J.members and J.complement:
        K = ParabolicSubset.of(m.submatrix(J.complement))
        _, full = _poset_of(K, cap)
        if poset_isomorphic(p, full) is None:
            failures.append('quotient is not isomorphic to the group on S minus J')
    return _result('readback', J, failures, x1=len(t.x1))


def reconstruct_pair(p: PointedPoset) -> Optional[BWGraph]:
    """bw-graph of a pair whose quotient is p, or None when undecided."""
    try:
        return invert_bu(g_of(p))
    except (NotInImage, BUPreconditionError) as e:
        logger.debug('reconstruction undecided: %s', e)
        return None


def label_free(J: ParabolicSubset) -> bool:
    """Simple graph whose labelled edges avoid J."""
    if not is_simple(J.matrix):
        return False
    return all(bond == 3 or (s not in J and t not in J) for s, t, bond in J.matrix.edges())


def verify_graph(J: ParabolicSubset, cap: Optional[int] = None) -> CheckResult:
    """G(W^J) against the expansion of the bw-graph, and reconstruction back.

    Reconstruction can only recover white components attached to a black
    vertex, so with J = S it gives back the empty graph.
    """
    _, p = _poset_of(J, cap)
    original = bw_graph(J.matrix, J)
    g = g_of(p)
    failures = []
    expanded = bu_expand(original)
    if bwgraph_isomorphic(g, expanded) is None:
        failures.append(f'G(W^J) {g!r} is not the expansion {expanded!r}')
    recovered = reconstruct_pair(p)
    if recovered is None or bwgraph_isomorphic(recovered, drop_unattached_white(original)) is None:
        failures.append('reconstruction does not give back the bw-graph')
    return _result('graph', J, failures, black=len(g.black), white=len(g.white))


def verify_components(J: ParabolicSubset, cap: Optional[int] = None) -> CheckResult:
    """Equivalence classes on X_1 against the Coxeter components, factor by factor."""
    m = J.matrix
    q, p = _poset_of(J, cap)
    element = generator_elements(q)
    generator_of = {x: s for s, x in element.items()}
    failures = []

    x1 = p.of_rank(1)
    for i, a in enumerate(x1):
        for b in x1[i + 1:]:
            if leads_to(p, a, b) != leads_to(p, b, a):
                failures.append(f'leads_to not symmetric on s{generator_of[a]}, s{generator_of[b]}')

    blocks = {frozenset(generator_of[x] for x in block) for block in sim_classes(p).blocks}
    components = {c for c in connected_components(m) if not c <= J.members}
    expected = {frozenset(c - J.members) for c in components}
    if blocks != expected:
        failures.append(f'classes {sorted(map(sorted, blocks))} != components {sorted(map(sorted, expected))}')

    for block in sim_classes(p).blocks:
        if set(x for x in xinf_elements(p, block) if p.rank(x) == 1) != set(block):
            failures.append(f'X^inf({list(block)}) meets X1 outside the block')
        if not set(x0_elements(p, block)) <= set(xinf_elements(p, block)):
            failures.append(f'X0({list(block)}) is not inside X^inf')
        if set(x for x in x0_elements(p, block) if p.rank(x) == 2) != set(x2_of(p, block)):
            failures.append(f'X0({list(block)}) and X2 disagree')
        gens = {generator_of[x] for x in block}
        component = next(c for c in components if gens <= c)
        sub = m.submatrix(component)
        K = ParabolicSubset.of(sub, component & J.members)
        _, factor = _poset_of(K, cap)
        restricted, _ = xinf_of(p, block)
        if poset_isomorphic(restricted, factor) is None:
            failures.append(f'X^inf of {sorted(gens)} is not the quotient of its component')
    return _result('components', J, failures, classes=len(blocks))


def _engine_index(q: QuotientTable, word) -> int:
    return q.by_weight[apply_word(q.cartan, word, q.seed.weight)]


def verify_unique_words(J: ParabolicSubset, cap: Optional[int] = None, oracle_cap: int = DEFAULT_CAP) -> CheckResult:
    """VX against the elements with unique reduced words below and one outside letter."""
    q, p = _poset_of(J, cap)
    group = enumerate_group(J.matrix, oracle_cap)
    from_oracle = sorted(_engine_index(q, group.elements[w].word) for w in unique_expression_set(group, J))
    from_poset = vx(p)
    failures = [] if from_oracle == from_poset else [f'VX = {from_poset}, oracle gives {from_oracle}']
    return _result('unique', J, failures, size=len(from_poset))


def verify_oracle(J: ParabolicSubset, cap: Optional[int] = None, oracle_cap: int = DEFAULT_CAP) -> CheckResult:
    """Engine poset against the subword order on minimal representatives, element by element."""
    q, p = _poset_of(J, cap)
    o, group = oracle_poset(J.matrix, J, oracle_cap)
    failures = []
    mapping = {x: _engine_index(q, group.elements[o.labels[x]].word) for x in range(o.size)}
    if sorted(mapping.values()) != list(range(p.size)):
        failures.append(f'{o.size} oracle representatives do not match {p.size} orbit points')
    else:
        if any(o.rank(x) != p.rank(mapping[x]) for x in range(o.size)):
            failures.append('lengths differ')
        if {(mapping[a], mapping[b]) for a, b in o.covers} != set(p.covers):
            failures.append('cover relations differ')
    return _result('oracle', J, failures, size=p.size)


def verify_family(instance: FamilyInstance, cap: Optional[int] = None) -> CheckResult:
    """G graphs as recorded on the instance, posets told apart by their length."""
    failures = []
    gl = g_of(_poset_of(instance.left, cap)[1])
    gr = g_of(_poset_of(instance.right, cap)[1])
    graphs_match = bwgraph_isomorphic(gl, gr) is not None
    if graphs_match and not instance.graphs_match:
        failures.append(f'G graphs unexpectedly agree: {gl!r}')
    elif not graphs_match and instance.graphs_match:
        failures.append(f'G graphs differ: {gl!r} vs {gr!r}')
    difference = quotient_length(instance.left.matrix, instance.left) - quotient_length(
        instance.right.matrix, instance.right
    )
    if difference != instance.expected_difference:
        failures.append(f'length difference {difference}, expected {instance.expected_difference}')
    return CheckResult(
        'families', instance.name, not failures, failures, {'difference': difference, 'graphs_match': graphs_match}
    )


def verify_not_in_image(J: ParabolicSubset, cap: Optional[int] = None) -> CheckResult:
    _, p = _poset_of(J, cap)
    recovered = reconstruct_pair(p)
    failures = [] if recovered is None else [f'unexpectedly reconstructed {recovered!r}']
    return _result('families', J, failures)


def families_check(max_total: int = 5, cap: Optional[int] = None) -> List[CheckResult]:
    results = [verify_family(instance, cap) for instance in family_instances(max_total)]
    results.append(verify_not_in_image(make_pair('F4', [2, 3]), cap))
    return results


# (family, ranks) covered by the longest-element regression
APPENDIX_RANKS = {
    'A': range(1, 8),
    'B': range(2, 8),
    'D': range(4, 8),
    'E': [6, 7, 8],
    'F': [4],
    'G': [2],
}


def _appendix_formula(t: WeylType) -> int:
    n = t.rank
    if t.family == 'A':
        return n * (n + 1) // 2
    if t.family == 'B':
        return n * n
    if t.family == 'D':
        return n * n - n
    return {'E6': 36, 'E7': 63, 'E8': 120, 'F4': 24, 'G2': 6}[t.name]


def appendix_check() -> List[CheckResult]:
    results = []
    for family, ranks in APPENDIX_RANKS.items():
        for n in ranks:
            t = WeylType(family, n)
            got = longest_length(build_weyl(t))
            want = _appendix_formula(t)
            failures = [] if got == want else [f'l(w0) = {got}, expected {want}']
            results.append(CheckResult('appendix', t.name, not failures, failures, {'length': got}))
    return results


def _run(suite: str, check: Callable, pairs: List[ParabolicSubset], cap: Optional[int]) -> List[CheckResult]:
    results = []
    for J in pairs:
        try:
            results.append(check(J, cap))
        except EnumerationOverflow as e:
            logger.warning('%s: skipping %s: %s', suite, pair_name(J), e)
            results.append(CheckResult(suite, pair_name(J), True, [], {'skipped': str(e)}))
    return results


def run_suite(
    suite: str, max_rank: Optional[int] = None, cap: Optional[int] = None, oracle_cap: int = DEFAULT_CAP
) -> List[CheckResult]:
    """Run a named suite over its default range, or up to ``max_rank``.

    ``cap`` bounds quotient enumeration, ``oracle_cap`` the brute-force group.
    """
    suite = SUITE_ALIASES.get(suite, suite)
    if suite == 'readback':
        return _run(suite, verify_readback, product_pairs(max_rank or 4), cap)
    if suite == 'graph':
        pairs = [J for J in irreducible_pairs(max_rank or 5) if label_free(J)]
        pairs.append(make_pair('E6', [2, 3, 5, 6]))
        return _run(suite, verify_graph, pairs, cap)
    if suite == 'components':
        return _run(suite, verify_components, product_pairs(max_rank or 5, factors=2), cap)
    if suite == 'unique':
        pairs = [J for J in product_pairs(max_rank or 5, factors=1) if is_simple(J.matrix) and _order_at_most(J, 120)]
        return _run(suite, partial(verify_unique_words, oracle_cap=oracle_cap), pairs, cap)
    if suite == 'oracle':
        pairs = [J for J in product_pairs(max_rank or 4) if _order_at_most(J, 48)]
        pairs += [make_pair('A5', [1, 2, 3, 4]), make_pair('D4', [1, 2, 3])]
        return _run(suite, partial(verify_oracle, oracle_cap=oracle_cap), pairs, cap)
    if suite == 'families':
        return families_check(max_rank or 5, cap)
    if suite == 'appendix':
        return appendix_check()
    raise ValueError(f'unknown suite {suite!r}')


def _order_at_most(J: ParabolicSubset, bound: int) -> bool:
    return matrix_order(J.matrix) <= bound


SUITES = ('readback', 'graph', 'components', 'families', 'unique', 'oracle', 'appendix')

# older names for the first five suites
SUITE_ALIASES = {
    'thm1': 'readback',
    'thmnew': 'graph',
    'propirr': 'components',
    'lemnew': 'families',
    'lemunique': 'unique',
}
