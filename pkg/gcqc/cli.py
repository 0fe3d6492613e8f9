"""
gcqc.cli - the ``gcqc`` command.

Commands: ``build``, ``verify``, ``export``, ``catalog`` and
``estimate-size``. A SPEC argument is the path of a JSON spec document or
the name of a bundled one (``example1`` .. ``example5``).

Exit status: 0 success or proved, 1 internal error (a construction failed
its own consistency check), 2 input error, 3 refuted, 4 inconclusive
(conditional certificate, budget exhausted or undecidable query).
"""
from __future__ import print_function

import argparse
import json
import os
import sys
import warnings

from . import __version__
from .catalog import CATALOG, EXAMPLES, spec_json
from .classical import SizeRecord
from .distance import (CONDITIONAL, PROVED_EXACT, PROVED_LOWER, REFUTED,
                       certify_theorem1, verify_exhaustive, verify_lowweight)
from .excs import BudgetExceeded, CodeError, Undecidable
from .gc import export_stabilizer, gc_build, gc_parameters
from .misc import Budgets, _jsonable, log2
from .specfile import load_spec, read_spec
from .symplectic import to_pauli

__all__ = ['main']

OK = 0
INTERNAL_ERROR = 1
INPUT_ERROR = 2
REFUTED_EXIT = 3
INCONCLUSIVE = 4

DEFAULT_SAMPLES = 10 ** 6


def _parser():
    """Build the argument parser."""
    parser = argparse.ArgumentParser(
        prog='gcqc',
        description='Generalized concatenated quantum codes: build, verify '
                    'and export.')
    parser.add_argument('--version', action='version',
                        version='gcqc ' + __version__)
    parser.add_argument(
        '--budget', default=None,
        help='enumeration budget: N, or key=N,... with keys enumeration, '
             'scan, columns, weight (overrides GCQ_BUDGET)')
    parser.add_argument('--scan-budget', type=int, default=None,
                        help='maximum number of vectors a scan may test')
    parser.add_argument('--threads', type=int, default=None,
                        help='scan worker threads (default: all cores)')
    parser.add_argument('--json', dest='json_path', default=None,
                        help='also write the report as JSON to this path '
                             '("-" for standard output)')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    build = commands.add_parser('build', help='parameters of a GC code')
    build.add_argument('spec')

    verify = commands.add_parser('verify', help='verify the distance')
    verify.add_argument('spec')
    verify.add_argument('--distance', type=int, default=None,
                        help='target distance d')
    verify.add_argument('--method', default='certificate',
                        choices=['lowweight', 'exhaustive', 'certificate'])
    verify.add_argument('--no-witness', action='store_true',
                        help='do not search for a witness at weight d')

    export = commands.add_parser('export', help='export stabilizers')
    export.add_argument('spec')
    export.add_argument('--format', default='pauli',
                        choices=['pauli', 'matrix', 'json'])
    export.add_argument('--output', '-o', default=None,
                        help='output file (default: standard output)')

    catalog = commands.add_parser('catalog', help='cataloged codes')
    catalog.add_argument('action', choices=['list', 'show', 'spec'])
    catalog.add_argument('name', nargs='?')

    estimate = commands.add_parser('estimate-size',
                                   help='size of sub-alphabet outer codes')
    estimate.add_argument('spec')
    estimate.add_argument('--seed', type=int, default=None)
    estimate.add_argument('--samples', type=int, default=None)
    return parser


def _overrides(args):
    """Budget overrides given on the command line."""
    try:
        data = Budgets.overrides(args.budget)
    except (KeyError, ValueError) as exc:
        raise CodeError.spec('--budget: {0}'.format(exc))
    if args.scan_budget is not None:
        data['scan'] = args.scan_budget
    return data


def _load(args):
    """Spec file (with command-line budgets on top of the document's)."""
    from . import BUDGETS
    if not os.path.exists(args.spec) and args.spec in EXAMPLES:
        parsed = load_spec(spec_json(args.spec), budgets=BUDGETS)
    else:
        parsed = read_spec(args.spec, budgets=BUDGETS)
    parsed.budgets = parsed.budgets.replace(**_overrides(args))
    return parsed


def _header(args, budgets):
    """Report fields every command carries; independent of --threads."""
    return {'version': __version__, 'command': args.command,
            'budgets': budgets.info}


def _witness(vector):
    """Printable witness."""
    if vector is None:
        return None
    try:
        return to_pauli(vector)
    except CodeError:
        return [int(x) for x in vector]


def cmd_build(args, out):
    """Parameters, additivity and the composite distance bound."""
    parsed = _load(args)
    code = gc_build(parsed.spec, parsed.budgets)
    params = gc_parameters(code, budgets=parsed.budgets, threads=args.threads)
    dim = params.dimension
    lines = ['n={0} k={1} log2dim={2:.4f}'.format(
        params.n, '-' if params.k is None else params.k,
        params.log2_dimension),
             'dimension {0}: {1}'.format(dim.kind, ' x '.join(dim.factors)),
             'additive={0} ({1})'.format('yes' if params.additive else 'no',
                                         params.reason),
             'bound d>={0} {1}'.format(params.bound, params.bound_status)]
    for leaf in params.leaves['outer']:
        lines.append('  outer level {level}: d={value} {status} ({method})'
                     .format(**leaf))
    lines.append('  coset distances: {0}'.format(
        params.leaves['coset_distances']))
    print('\n'.join(lines), file=out)
    report = dict(_header(args, parsed.budgets), parameters=params,
                  code=code.describe())
    return OK, report


def cmd_verify(args, out):
    """Run one distance method and report its certificate."""
    parsed = _load(args)
    code = gc_build(parsed.spec, parsed.budgets)
    if args.method == 'lowweight':
        if args.distance is None:
            raise CodeError.spec('--method lowweight needs --distance')
        cert = verify_lowweight(code, args.distance,
                                find_witness=not args.no_witness,
                                budgets=parsed.budgets, threads=args.threads)
    elif args.method == 'exhaustive':
        cert = verify_exhaustive(code, budgets=parsed.budgets)
        if args.distance is not None and cert.d is not None \
                and cert.d < args.distance:
            cert.status = REFUTED
    else:
        cert = certify_theorem1(code, budgets=parsed.budgets,
                                threads=args.threads)
        if args.distance is not None and cert.status != CONDITIONAL \
                and (cert.d is None or cert.d < args.distance):
            cert.status = CONDITIONAL
    line = '{method}: {status} d{rel}{d}'.format(
        method=cert.method, status=cert.status, d=cert.d,
        rel='>=' if cert.status in (PROVED_LOWER, CONDITIONAL) else '=')
    print(line, file=out)
    if cert.witness is not None:
        print('witness: {0}'.format(_witness(cert.witness)), file=out)
    report = dict(_header(args, parsed.budgets), certificate=cert,
                  target=args.distance)
    if cert.status == REFUTED:
        return REFUTED_EXIT, report
    if cert.status in (PROVED_EXACT, PROVED_LOWER):
        return OK, report
    return INCONCLUSIVE, report


def _nonadditive_export(code, fmt):
    """Base stabilizer plus the outer description of a nonadditive code."""
    gens = code.base_stabilizer()
    desc = code.describe()
    if fmt == 'json':
        data = {'format': 'GCQC v1', 'n': code.n, 'p': code.p,
                'additive': False, 'log2_dimension': code.dimension.log2,
                'base_generators': [_witness(row) for row in gens],
                'outer': _jsonable(desc['outer'])}
        return json.dumps(data, sort_keys=True, indent=2) + '\n'
    lines = ['GCQC v1', 'n={0} log2dim={1:.4f} p={2} additive=no'.format(
        code.n, code.dimension.log2, code.p)]
    for row in gens:
        if fmt == 'pauli':
            lines.append(_witness(row) if code.p == 2
                         else ' '.join(str(int(x)) for x in row))
        else:
            lines.append(' '.join(str(int(x)) for x in row))
    for level, outer in enumerate(desc['outer'], 1):
        lines.append('# level {0}: {1}'.format(
            level, json.dumps(_jsonable(outer), sort_keys=True)))
    return '\n'.join(lines) + '\n'


def cmd_export(args, out):
    """Write stabilizer generators."""
    parsed = _load(args)
    code = gc_build(parsed.spec, parsed.budgets)
    if code.additive:
        exported = export_stabilizer(code)
        text = {'pauli': exported.to_text,
                'matrix': exported.to_matrix,
                'json': lambda: exported.to_json(indent=2) + '\n'}[
                    args.format]()
        if args.format == 'pauli' and code.p != 2:
            text = exported.to_matrix()
        count = exported.generators.shape[0]
    else:
        text = _nonadditive_export(code, args.format)
        count = code.base_stabilizer().shape[0]
    if args.output:
        with open(args.output, 'w') as handle:
            handle.write(text)
    else:
        out.write(text)
    report = dict(_header(args, parsed.budgets), n=code.n,
                  additive=code.additive, generators=count,
                  format=args.format, output=args.output)
    return OK, report


def cmd_catalog(args, out):
    """List, show or print catalog entries."""
    from . import BUDGETS
    report = _header(args, BUDGETS)
    if args.action == 'list':
        for entry in CATALOG.entries.values():
            print('{0:<22} {1:<6} {2}'.format(entry.name, entry.kind,
                                              entry.summary), file=out)
        report['names'] = CATALOG.names()
        return OK, report
    if not args.name:
        raise CodeError.spec('catalog {0} needs a name'.format(args.action))
    if args.action == 'spec':
        text = spec_json(args.name)
        out.write(text)
        report['spec'] = json.loads(text)
        return OK, report
    obj = CATALOG.get(args.name)
    report['name'] = args.name
    if hasattr(obj, 'levels'):
        from .distance import chain_distances
        dists = [d.value for d in chain_distances(obj)]
        print('chain n={0} k={1} labels={2} coset distances={3}'.format(
            obj.n, list(obj.k), list(obj.b), dists), file=out)
        for code in obj.codes:
            print('  [[{0},{1}]] {2}'.format(code.n, code.k, code.name or ''),
                  file=out)
        report.update(n=obj.n, k=list(obj.k), coset_distances=dists)
    elif hasattr(obj, 'stabilizer'):
        print('[[{0},{1},{2}]] {3}'.format(obj.n, obj.k, obj.distance.value,
                                           obj.distance.method), file=out)
        gens = obj.pauli_generators() if obj.p == 2 else \
            [' '.join(str(int(x)) for x in row) for row in obj.generators]
        for gen in gens:
            print(gen, file=out)
        report.update(n=obj.n, k=obj.k, d=obj.distance.value,
                      generators=gens)
    else:
        code = gc_build(obj, BUDGETS)
        print('{0!r}'.format(code), file=out)
        report['code'] = code.describe()
    return OK, report


def cmd_estimate_size(args, out):
    """Size of every outer code: exact when enumerable, sampled otherwise."""
    #pylint: disable=too-many-locals
    parsed = _load(args)
    code = gc_build(parsed.spec, parsed.budgets)
    settings = {item['level']: item for item in parsed.estimates}
    total = sum(chain.k[-1] for chain in code.chains) * log2(code.p)
    low = high = total
    levels = []
    for level, outer in enumerate(code.outers, 1):
        if outer.is_linear:
            size = outer.size
        elif outer.s ** outer.N <= parsed.budgets.enumeration:
            size = outer.size if outer.size.kind == 'exact' else None
            if size is None:
                members = outer.members(parsed.budgets.enumeration)
                size = SizeRecord('exact', members.shape[0],
                                  provenance='enumeration')
        else:
            given = settings.get(level, {})
            seed = args.seed if args.seed is not None else given.get('seed', 0)
            samples = args.samples if args.samples is not None \
                else given.get('samples') or DEFAULT_SAMPLES
            size = outer.estimate_size(seed, samples)
        total += size.log2
        low += size.log2_low
        high += size.log2_high
        levels.append({'level': level, 'kind': size.kind,
                       'log2': size.log2, 'log2_low': size.log2_low,
                       'log2_high': size.log2_high, 'size': size})
        if size.kind == 'estimate':
            print('level {0}: log2|A| ~ {1:.4f} [{2:.4f}, {3:.4f}] '
                  '(seed={4}, samples={5})'.format(
                      level, size.log2, size.log2_low, size.log2_high,
                      size.seed, size.samples), file=out)
        else:
            print('level {0}: |A| = {1} ({2}) log2 = {3:.4f}'.format(
                level, size.value, size.kind, size.log2), file=out)
    print('log2 dimension ~ {0:.4f} [{1:.4f}, {2:.4f}]'.format(
        total, low, high), file=out)
    report = dict(_header(args, parsed.budgets), levels=levels,
                  log2_dimension=total, log2_low=low, log2_high=high)
    return OK, report


COMMANDS = {
    'build': cmd_build,
    'verify': cmd_verify,
    'export': cmd_export,
    'catalog': cmd_catalog,
    'estimate-size': cmd_estimate_size,
}


def _write_json(path, report, out):
    """Write the JSON report."""
    text = json.dumps(_jsonable(report), sort_keys=True, indent=2) + '\n'
    if path == '-':
        out.write(text)
    else:
        with open(path, 'w') as handle:
            handle.write(text)


def main(argv=None, out=None, err=None):
    """Run the command line; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = _parser().parse_args(argv)
    if args.threads is not None and args.threads < 1:
        print('gcqc: --threads must be at least 1', file=err)
        return INPUT_ERROR
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            status, report = COMMANDS[args.command](args, out)
    except (BudgetExceeded, Undecidable) as exc:
        print('gcqc: inconclusive: {0}'.format(exc), file=err)
        return INCONCLUSIVE
    except CodeError.verification as exc:
        print('gcqc: internal error: {0}'.format(exc), file=err)
        return INTERNAL_ERROR
    except CodeError as exc:
        print('gcqc: {0}: {1}'.format(exc.code, exc), file=err)
        return INPUT_ERROR
    for item in caught:
        print('gcqc: warning: {0}: {1}'.format(item.category.__name__,
                                               item.message), file=err)
    report['warnings'] = [str(item.message) for item in caught]
    report['exit'] = status
    if args.json_path:
        _write_json(args.json_path, report, out)
    return status
