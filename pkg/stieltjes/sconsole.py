#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

'''
Command line front end::

   stieltjes analyze  problem.json
   stieltjes expand   --moments 1 1 2 6 --pretty
   stieltjes solve    --moments 1 1 --tau 0
   stieltjes string   --batch problems.jsonl --jobs 4
   stieltjes selftest --seed 7

A problem is read from the file argument, from standard input, or built
from ``--moments``; the remaining flags override fields of the document.
The report is a single JSON document on standard output. Errors are
reported as a JSON object ``{"error": ..., "message": ...}`` and the process
exits with the code of the error class.
'''

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import stieltjes
from stieltjes.stype import EXIT_OK, EXIT_CONSISTENCY, PARITIES, SException
from stieltjes.sproblem import MomentProblem
from stieltjes.sreader import SReader, SReaderException
from stieltjes.swriter import SWriter
from stieltjes.sselftest import run_selftest

try:
    from stieltjes._pandas import PandasSWriter, inertia_frame, steps_frame
except ImportError:
    PandasSWriter = inertia_frame = steps_frame = None


logger = logging.getLogger(__name__)


COMMANDS = ('analyze', 'expand', 'solve', 'string')



def run_command(command, problem):
    '''Runs one subcommand on a parsed :class:`.ProblemInput`.

    :returns: the report `dictionary`
    '''
    facade = MomentProblem.from_input(problem)
    if command == 'analyze':
        return facade.analyze()
    if command == 'expand':
        return facade.expand()
    if command == 'solve':
        return facade.solve(problem.tau)
    return facade.string()



def with_tables(report):
    '''Copy of `report` with its inertia and step tables attached as data
    frames under ``tables``.

    :raises: `SReaderException` when pandas is not installed
    '''
    if PandasSWriter is None:
        raise SReaderException('tables', 'pandas is required for --tables')
    tables = {}
    if 'inertia' in report:
        tables['inertia'] = inertia_frame(report['inertia'])
    if report.get('steps'):
        tables['steps'] = steps_frame(report['steps'])
    return dict(report, tables = tables)



def make_writer(tables = False, stream = None):
    '''Writer for the report, one accepting data frames when tables are
    attached.'''
    if tables and PandasSWriter is not None:
        return PandasSWriter(stream)
    return SWriter(stream)



def run_entry(command, entry, tables = False):
    '''Batch worker: returns (exit code, encoded report or error). Results
    are encoded in the worker so only JSON values cross process
    boundaries.'''
    writer = make_writer(tables)
    if isinstance(entry, SException):
        return entry.exit_code, writer.encode(entry)
    try:
        report = run_command(command, entry)
        return EXIT_OK, writer.encode(with_tables(report) if tables else report)
    except SException as e:
        logger.debug('batch entry %r failed: %s', entry, e)
        return e.exit_code, writer.encode(e)



def _tau_argument(text):
    text = text.strip()
    if text.startswith('{'):
        try:
            return json.loads(text)
        except ValueError as e:
            raise SReaderException('tau', 'malformed JSON: %s' % e)
    return text



def _overrides(args):
    return {'parity': args.parity,
            'free_tail': args.free_tail,
            'kappa': args.kappa,
            'k': args.k,
            'tau': None if args.tau is None else _tau_argument(args.tau)}



def read_problem(args, stdin):
    '''The problem named by the command line, with the flag overrides
    applied.'''
    reader = SReader()
    if args.moments:
        problem = reader.read({'moments': args.moments})
    elif args.input and args.input != '-':
        try:
            with open(args.input, 'r') as stream:
                problem = reader.read(stream)
        except IOError as e:
            raise SReaderException('document', 'cannot read %s: %s' % (args.input, e))
    else:
        problem = reader.read(stdin)
    return reader.override(problem, **_overrides(args))



def read_batch(args):
    '''Problems of a batch file, one per line, with the flag overrides
    applied. Unparsable lines stay in place as exceptions.'''
    reader = SReader()
    try:
        with open(args.batch, 'r') as stream:
            entries = reader.read_batch(stream)
    except IOError as e:
        raise SReaderException('batch', 'cannot read %s: %s' % (args.batch, e))

    overrides = _overrides(args)
    problems = []
    for entry in entries:
        if not isinstance(entry, SException):
            try:
                entry = reader.override(entry, **overrides)
            except SReaderException as e:
                entry = e
        problems.append(entry)
    return problems



def run_batch(command, problems, jobs = 1, tables = False):
    '''Runs `command` on every problem, in parallel when `jobs` > 1. Results
    keep the input order.

    :returns: `list` of (exit code, encoded result)
    '''
    worker = partial(run_entry, command, tables = tables)
    if jobs <= 1:
        return [worker(problem) for problem in problems]
    with ProcessPoolExecutor(max_workers = jobs) as executor:
        return list(executor.map(worker, problems))



def summary(command, report, stream):
    '''Human readable digest of a report.'''
    lines = []
    if command == 'selftest':
        lines.append('selftest (seed %s): %s' % (report['seed'], report['status']))
        for suite in report['suites']:
            lines.append('  %-14s %5d cases, %d failures' % (suite['name'], suite['cases'], suite['failures']))
        if report['counterexample'] is not None:
            lines.append('counterexample (%s): %s' % (report['counterexample_suite'],
                                                     json.dumps(SWriter().encode(report['counterexample']), sort_keys = True)))
    else:
        for key in ('parity', 'free_tail', 'normal_indices', 'regular', 'kappa_N', 'k_N', 'solvability',
                    'closing_l', 'string', 'tau', 'admissibility', 'solution'):
            if key in report and report[key] is not None:
                lines.append('%-15s %s' % (key, _describe(report[key])))
        if 'verification' in report:
            lines.append('%-15s %s' % ('verification', 'match' if report['verification']['match'] else 'MISMATCH'))
        if inertia_frame is not None and 'inertia' in report:
            lines.append(inertia_frame(report['inertia']).to_string())
        if steps_frame is not None and report.get('steps'):
            lines.append(steps_frame(report['steps']).to_string())
    stream.write('\n'.join(lines))
    stream.write('\n')



def _describe(value):
    if hasattr(value, 'verdict'):
        return value.verdict
    if hasattr(value, 'classification'):
        return value.classification
    if hasattr(value, 'admissible'):
        return '%s (%s)' % ('admissible' if value.admissible else 'inadmissible', value.reason)
    if hasattr(value, 'indices'):
        return ' '.join(str(n) for n in value.indices)
    return str(value)



def build_parser():
    common = argparse.ArgumentParser(add_help = False)
    common.add_argument('--pretty', action = 'store_true',
                        help = 'indent the JSON document and print a summary to stderr')
    common.add_argument('--verbose', action = 'store_true',
                        help = 'log step level progress to stderr')

    problem = argparse.ArgumentParser(add_help = False)
    problem.add_argument('input', nargs = '?', default = None,
                         help = 'JSON problem file, standard input when omitted or "-"')
    problem.add_argument('--moments', nargs = '+', metavar = 'P/Q',
                         help = 'moments s_0 .. s_l instead of a problem document')
    problem.add_argument('--parity', choices = PARITIES,
                         help = 'problem parity [default: inferred from the length]')
    problem.add_argument('--free-tail', dest = 'free_tail', metavar = 'P/Q',
                         help = 'moment s_{2n_N-1} of an odd problem')
    problem.add_argument('--kappa', type = int, help = 'bound on negative squares [default: 0]')
    problem.add_argument('--k', type = int, help = 'bound for the shifted block [default: 0]')
    problem.add_argument('--tau', help = 'parameter: "inf", a rational or {"num": [...], "den": [...]}')
    problem.add_argument('--tables', action = 'store_true',
                         help = 'attach inertia and step tables to the report (needs pandas)')
    problem.add_argument('--batch', metavar = 'FILE', help = 'one JSON problem per line')
    problem.add_argument('--jobs', type = int, default = 1,
                         help = 'worker processes in batch mode [default: %(default)s]')

    parser = argparse.ArgumentParser(prog = 'stieltjes',
                                     description = 'Exact solver for truncated indefinite Stieltjes moment problems')
    parser.add_argument('--version', action = 'version', version = '%(prog)s ' + stieltjes.__version__)
    subparsers = parser.add_subparsers(dest = 'command')
    subparsers.required = True

    descriptions = {'analyze': 'normal indices, inertia tables and solvability',
                    'expand': 'Schur expansion, P-fraction, Stieltjes polynomials and solution matrix',
                    'solve': 'the solution for a parameter tau',
                    'string': 'masses and lengths of the associated string'}
    for command in COMMANDS:
        subparsers.add_parser(command, parents = [common, problem], help = descriptions[command])

    selftest = subparsers.add_parser('selftest', parents = [common], help = 'run the invariant suites')
    selftest.add_argument('--seed', type = int, default = 0, help = 'corpus seed [default: %(default)s]')
    selftest.add_argument('--count', type = int, help = 'cases per random suite')
    selftest.add_argument('--inject-fault', dest = 'inject_fault', action = 'store_true',
                          help = 'perturb the round trip corpus to exercise failure reporting')
    return parser



def main(argv = None, stdin = None, stdout = None, stderr = None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    args = build_parser().parse_args(argv)
    logging.basicConfig(stream = stderr, level = logging.DEBUG if args.verbose else logging.WARNING,
                        format = '%(levelname)s %(name)s: %(message)s')
    writer = make_writer(getattr(args, 'tables', False), stdout)

    if args.command == 'selftest':
        report = run_selftest(seed = args.seed, count = args.count, inject_fault = args.inject_fault)
        writer.write(report, pretty = args.pretty)
        if args.pretty:
            summary(args.command, report, stderr)
        return EXIT_OK if report['status'] == 'all suites pass' else EXIT_CONSISTENCY

    try:
        if args.batch:
            results = run_batch(args.command, read_batch(args), args.jobs, args.tables)
            writer.write([result for _, result in results], pretty = args.pretty)
            return next((code for code, _ in results if code != EXIT_OK), EXIT_OK)

        report = run_command(args.command, read_problem(args, stdin))
        if args.tables:
            report = with_tables(report)
    except SException as e:
        logger.debug('%s failed: %s', args.command, e)
        writer.write(e, pretty = args.pretty)
        return e.exit_code

    writer.write(report, pretty = args.pretty)
    if args.pretty:
        summary(args.command, report, stderr)
    return EXIT_OK



if __name__ == '__main__':
    sys.exit(main())
