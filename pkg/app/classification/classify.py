# app/classification/classify.py
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from ..coxeter.bw_graph import pairs_isomorphic
from ..coxeter.matrix import ParabolicSubset, pair_name
from ..engine.quotient import enumerate_quotient
from ..errors import EnumerationOverflow
from ..poset.bruhat import bruhat_order
from ..poset.pointed import PointedPoset
from .fingerprint import Fingerprint, fingerprint
from .isomorphism import Witness, poset_isomorphic
from .patterns import dedupe_pairs

logger = logging.getLogger(__name__)


@dataclass
class PairResult:
    name: str
    pair: ParabolicSubset
    aliases: List[str] = field(default_factory=list)
    poset: Optional[PointedPoset] = None
    fingerprint: Optional[Fingerprint] = None
    skipped: Optional[str] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            'name': self.name,
            'aliases': self.aliases,
            'size': self.poset.size if self.poset else None,
            'length': self.poset.length if self.poset else None,
            'fingerprint': self.fingerprint.digest if self.fingerprint else None,
            'skipped': self.skipped,
        }


@dataclass
class CoincidenceClass:
    members: List[str]
    # member name -> bijection from the first member's poset onto it
    witnesses: Dict[str, Witness]

    def to_dict(self) -> Dict[str, object]:
        return {
            'members': self.members,
            'witnesses': {
                name: [[a, b] for a, b in sorted(w.items())] for name, w in sorted(self.witnesses.items())
            },
        }


@dataclass
class CoincidenceReport:
    pairs: List[PairResult]
    classes: List[CoincidenceClass]
    expected: Optional[List[List[str]]] = None
    discrepancies: List[str] = field(default_factory=list)

    @property
    def skipped(self) -> List[PairResult]:
        return [p for p in self.pairs if p.skipped]

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> Dict[str, object]:
        return {
            'pairs': [p.to_dict() for p in self.pairs],
            'classes': [c.to_dict() for c in self.classes],
            'expected': self.expected,
            'skipped': [p.name for p in self.skipped],
            'discrepancies': self.discrepancies,
            'ok': self.ok,
        }

    def to_table(self) -> str:
        lines = [f'{len(self.pairs)} pairs, {len(self.skipped)} skipped, {len(self.classes)} coincidence classes']
        for i, c in enumerate(self.classes, 1):
            lines.append(f'  [{i}] ' + '  <->  '.join(c.members))
        for p in self.skipped:
            lines.append(f'  skipped {p.name}: {p.skipped}')
        for d in self.discrepancies:
            lines.append(f'  DISCREPANCY {d}')
        lines.append('OK' if self.ok else 'MISMATCH')
        return '\n'.join(lines) + '\n'


def analyse_pair(J: ParabolicSubset, cap: Optional[int]) -> Tuple[Optional[PointedPoset], Optional[Fingerprint], Optional[str]]:
    try:
        poset = bruhat_order(enumerate_quotient(J.matrix, J, cap))
    except EnumerationOverflow as e:
        return None, None, str(e)
    return poset, fingerprint(poset), None


def _analyse_all(reps: List[ParabolicSubset], cap: Optional[int], jobs: int):
    if jobs <= 1:
        return [analyse_pair(J, cap) for J in reps]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(analyse_pair, reps, [cap] * len(reps)))


def _compare_with_expected(
    results: List[PairResult], classes: List[CoincidenceClass], expected: List[List[ParabolicSubset]]
) -> Tuple[List[List[str]], List[str]]:
    present = [r for r in results if not r.skipped]
    wanted = []
    for cls in expected:
        names = sorted({r.name for J in cls for r in present if pairs_isomorphic(r.pair, J)})
        if len(names) >= 2:
            wanted.append(names)
    wanted.sort()
    found = {frozenset(c.members) for c in classes}
    target = {frozenset(names) for names in wanted}
    problems = [f'unexpected class {sorted(c)}' for c in found - target]
    problems += [f'missing class {sorted(c)}' for c in target - found]
    return wanted, sorted(problems)


def classify(
    pairs: Iterable[ParabolicSubset],
    size_cap: Optional[int] = None,
    expected: Optional[List[List[ParabolicSubset]]] = None,
    jobs: int = 1,
) -> CoincidenceReport:
    """Group pairs by poset isomorphism.

    Coxeter-isomorphic pairs are merged first. Candidates are bucketed by
    fingerprint and each class member carries a verified witness. Pairs over
    the size cap are reported as skipped.
    """
    reps = dedupe_pairs(pairs)
    results = [PairResult(pair_name(J), J, sorted(pair_name(a) for a in aliases)) for J, aliases in reps]
    for result, (poset, fp, skipped) in zip(results, _analyse_all([r.pair for r in results], size_cap, jobs)):
        result.poset, result.fingerprint, result.skipped = poset, fp, skipped
        if skipped:
            logger.warning('skipping %s: %s', result.name, skipped)
    results.sort(key=lambda r: r.name)

    buckets: Dict[Fingerprint, List[PairResult]] = {}
    for r in results:
        if not r.skipped:
            buckets.setdefault(r.fingerprint, []).append(r)

    classes: List[CoincidenceClass] = []
    for bucket in buckets.values():
        groups: List[Tuple[PairResult, List[str], Dict[str, Witness]]] = []
        for r in bucket:
            for head, members, witnesses in groups:
                witness = poset_isomorphic(head.poset, r.poset)
                if witness is not None:
                    members.append(r.name)
                    witnesses[r.name] = witness
                    break
            else:
                groups.append((r, [r.name], {}))
        for _, members, witnesses in groups:
            if len(members) >= 2:
                classes.append(CoincidenceClass(members, witnesses))
    classes.sort(key=lambda c: c.members)

    report = CoincidenceReport(results, classes)
    if expected is not None:
        report.expected, report.discrepancies = _compare_with_expected(results, classes, expected)
        for d in report.discrepancies:
            logger.error('classification discrepancy: %s', d)
    return report
