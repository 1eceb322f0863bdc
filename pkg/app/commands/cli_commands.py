# app/commands/cli_commands.py
import functools
import json
import logging
from typing import Dict, List, Optional

import click

from ..classification.classify import classify
from ..classification.isomorphism import poset_isomorphic
from ..classification.patterns import expected_coincidences, irreducible_pairs
from ..classification.verify import SUITE_ALIASES, SUITES, CheckResult, label_free, reconstruct_pair, run_suite
from ..coxeter.bw_graph import bu_expand, bw_graph, bwgraph_isomorphic, drop_unattached_white
from ..database.factories.database_manager import DatabaseManager
from ..engine.quotient import enumerate_quotient
from ..errors import (
    BruhatError,
    BUPreconditionError,
    CoxeterError,
    DomainError,
    EnumerationOverflow,
    NotGradable,
    PairSpecError,
    PosetError,
    PosetParseError,
    StoreError,
)
from ..poset.bruhat import bruhat_order
from ..poset.io import import_poset, poset_to_dict, poset_to_dot
from ..poset.invariants import g_of
from ..poset.pointed import PointedPoset
from ..settings import Settings
from .pair_spec import PairSpec
from .results_store import record_classification, record_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_USAGE_ERRORS = (
    PairSpecError,
    PosetParseError,
    PosetError,
    NotGradable,
    CoxeterError,
    DomainError,
    BUPreconditionError,
    StoreError,
)


def handle_errors(command):
    """Map library exceptions onto exit codes."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except EnumerationOverflow as e:
            click.echo(f'error: {e}', err=True)
            ctx.exit(EXIT_CAP)
        except _USAGE_ERRORS as e:
            click.echo(f'error: {e}', err=True)
            ctx.exit(EXIT_USAGE)
        except BruhatError as e:
            click.echo(f'error: {e}', err=True)
            ctx.exit(EXIT_DISCREPANCY)
    return wrapper


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False) + '\n'


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, 'w', encoding='utf-8') as fh:
            fh.write(text)
        logger.info('wrote %s', out)
    else:
        click.echo(text, nl=False)


def _settings() -> Settings:
    return click.get_current_context().find_object(Settings) or Settings()


def _parse(text: str) -> PairSpec:
    return PairSpec.parse(text)


def _read_poset(path: str) -> PointedPoset:
    with open(path, encoding='utf-8') as fh:
        return import_poset(fh.read())


def _init_store(store: Optional[str]) -> bool:
    url = store or _settings().store_url
    if not url:
        return False
    DatabaseManager.init_db(db_url=url)
    return True


_format_json_dot = click.option(
    '--format', 'fmt', type=click.Choice(['json', 'dot']), default='json', show_default=True
)
_format_text_json = click.option(
    '--format', 'fmt', type=click.Choice(['text', 'json']), default='text', show_default=True
)
_out = click.option('--out', type=click.Path(dir_okay=False, writable=True), help='Write to a file instead of stdout.')
_store = click.option('--store', metavar='URL', help='SQLite URL of the results store, e.g. sqlite:///bruhat.db.')


@click.command('quotient')
@click.argument('spec')
@_format_json_dot
@_out
@handle_errors
def quotient_command(spec, fmt, out):
    """Enumerate W^J for SPEC and export its Bruhat order."""
    pair = _parse(spec)
    q = enumerate_quotient(pair.matrix, pair.pair, _settings().max_elements)
    p = bruhat_order(q)
    if fmt == 'dot':
        _emit(poset_to_dot(p, name=pair.name), out)
        return
    _emit(_dump({**poset_to_dict(p), **q.to_dict()}), out)


@click.command('compare')
@click.argument('spec_a')
@click.argument('spec_b')
@_format_text_json
@handle_errors
def compare_command(spec_a, spec_b, fmt):
    """Decide whether SPEC_A and SPEC_B have isomorphic Bruhat orders."""
    cap = _settings().max_elements
    a, b = _parse(spec_a), _parse(spec_b)
    pa = bruhat_order(enumerate_quotient(a.matrix, a.pair, cap))
    pb = bruhat_order(enumerate_quotient(b.matrix, b.pair, cap))
    witness = poset_isomorphic(pa, pb)
    verdict = {
        'a': a.name,
        'b': b.name,
        'isomorphic': witness is not None,
        'sizes': [pa.size, pb.size],
        'lengths': [pa.length, pb.length],
        'witness': [[x, y] for x, y in sorted(witness.items())] if witness is not None else None,
    }
    if fmt == 'json':
        _emit(_dump(verdict), None)
        return
    if witness is not None:
        pairs = ' '.join(f'{x}->{y}' for x, y in sorted(witness.items()))
        click.echo(f'ISOMORPHIC {a.name} ~ {b.name}\nwitness: {pairs}')
    else:
        click.echo(
            f'NOT ISOMORPHIC {a.name} / {b.name}: sizes {pa.size} vs {pb.size}, lengths {pa.length} vs {pb.length}'
        )


@click.command('classify')
@click.option('--max-rank', type=click.IntRange(1, 8), default=4, show_default=True)
@click.option('--max-size', type=click.IntRange(min=1), help='Skip pairs whose quotient exceeds this size.')
@click.option('--jobs', type=click.IntRange(min=1), help='Worker processes for independent pairs.')
@_store
@_format_text_json
@_out
@handle_errors
def classify_command(max_rank, max_size, jobs, store, fmt, out):
    """Sweep irreducible Weyl pairs of rank <= MAX_RANK and group isomorphic posets."""
    settings = _settings()
    cap = max_size or settings.max_elements
    report = classify(
        irreducible_pairs(max_rank),
        size_cap=cap,
        expected=expected_coincidences(max_rank),
        jobs=jobs or settings.jobs,
    )
    _emit(_dump(report.to_dict()) if fmt == 'json' else report.to_table(), out)
    if _init_store(store):
        record_classification(report, max_rank, cap)
    if not report.ok:
        click.get_current_context().exit(EXIT_DISCREPANCY)


@click.command('bwgraph')
@click.argument('spec', required=False)
@click.option('--expand', is_flag=True, help='Apply the BU expansion.')
@click.option('--from-poset', 'from_poset', type=click.Path(exists=True, dir_okay=False),
              help='Read a poset file and build G(X) instead.')
@_format_json_dot
@_out
@handle_errors
def bwgraph_command(spec, expand, from_poset, fmt, out):
    """bw-Coxeter graph of SPEC, or the graph read off a poset file."""
    if (spec is None) == (from_poset is None):
        raise click.UsageError('give either SPEC or --from-poset')
    if from_poset:
        g = g_of(_read_poset(from_poset))
        name = 'G'
    else:
        pair = _parse(spec)
        g = bw_graph(pair.matrix, pair.pair)
        name = pair.name
    if expand:
        g = bu_expand(g)
    _emit(g.to_dot(name) if fmt == 'dot' else _dump(g.to_dict()), out)


@click.command('reconstruct')
@click.argument('spec', required=False)
@click.option('--from-poset', 'from_poset', type=click.Path(exists=True, dir_okay=False))
@_format_json_dot
@_out
@handle_errors
def reconstruct_command(spec, from_poset, fmt, out):
    """Recover a bw-graph from the Bruhat order alone.

    With SPEC the recovered graph is checked against the pair's own graph;
    a failure on a pair the reconstruction must handle exits with 1.
    """
    if (spec is None) == (from_poset is None):
        raise click.UsageError('give either SPEC or --from-poset')
    pair = None
    if from_poset:
        p = _read_poset(from_poset)
    else:
        pair = _parse(spec)
        p = bruhat_order(enumerate_quotient(pair.matrix, pair.pair, _settings().max_elements))

    g = reconstruct_pair(p)
    matches = None
    if pair is not None and g is not None:
        expected = drop_unattached_white(bw_graph(pair.matrix, pair.pair))
        matches = bwgraph_isomorphic(g, expected) is not None

    if fmt == 'dot':
        _emit(g.to_dot('reconstructed') if g is not None else '', out)
    else:
        _emit(_dump({'graph': g.to_dict() if g is not None else None, 'undecided': g is None, 'matches': matches}), out)
    if g is None:
        logger.warning('reconstruction undecided')
    if pair is not None and label_free(pair.pair) and not matches:
        click.get_current_context().exit(EXIT_DISCREPANCY)


def traceability_table(results: List[CheckResult]) -> str:
    width = max([len(r.case) for r in results] + [4])
    lines = [f'{"suite":<10} {"case":<{width}} status', '-' * (width + 18)]
    for r in results:
        lines.append(f'{r.suite:<10} {r.case:<{width}} {r.status}')
        for failure in r.failures:
            lines.append(f'{"":<10} {"":<{width}}   {failure}')
    counts: Dict[str, int] = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    lines.append(', '.join(f'{counts.get(s, 0)} {s}' for s in ('pass', 'fail', 'skipped')))
    return '\n'.join(lines) + '\n'


@click.command('verify')
@click.option('--suite', 'suites', type=click.Choice(SUITES + tuple(SUITE_ALIASES) + ('all',)),
              multiple=True, default=('all',), show_default=True)
@click.option('--max-rank', type=click.IntRange(1, 8), help='Override the suite default range.')
@_store
@_format_text_json
@_out
@handle_errors
def verify_command(suites, max_rank, store, fmt, out):
    """Run verification suites and print a traceability table."""
    settings = _settings()
    names = SUITES if 'all' in suites else tuple(dict.fromkeys(SUITE_ALIASES.get(s, s) for s in suites))
    results: List[CheckResult] = []
    for name in names:
        logger.info('running suite %s', name)
        results.extend(run_suite(name, max_rank, settings.max_elements, settings.oracle_cap))
    _emit(_dump([r.to_dict() for r in results]) if fmt == 'json' else traceability_table(results), out)
    if _init_store(store):
        record_verification(results)
    if any(r.status == 'fail' for r in results):
        click.get_current_context().exit(EXIT_DISCREPANCY)


COMMANDS = (
    quotient_command,
    compare_command,
    classify_command,
    bwgraph_command,
    reconstruct_command,
    verify_command,
)
