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

import io
import json
import pytest

from stieltjes.stype import *  # @UnusedWildImport
from stieltjes.shankel import MomentSequence
from stieltjes.sreader import ProblemInput, SReaderException
from stieltjes.sconsole import main, run_batch, run_entry, build_parser


# argv -> (exit code, expected subset of the document)
INVOCATIONS = [
    (['analyze', '--moments', '1', '1'],
        (EXIT_OK, {'kappa_N': 0, 'k_N': 0, 'parity': 'even', 'regular': True})),
    (['analyze', '--moments', '-1', '1', '--kappa', '1'],
        (EXIT_OK, {'kappa_N': 1, 'solvability': {'verdict': 'solvable', 'kappa_N': 1, 'k_N': 0, 'kappa': 1, 'k': 0}})),
    (['analyze', '--moments', '0', '1', '0', '0', '--parity', 'odd'],
        (EXIT_OK, {'moments': ['0', '1', '0'], 'free_tail': '0', 'kappa_N': 1})),
    (['expand', '--moments', '1', '1', '2', '6'],
        (EXIT_OK, {'pfraction': {'b': ['1', '1'], 'a': [['-1', '1'], ['-3', '1']]}, 'string': 'classical'})),
    (['expand', '--moments', '1', '1', '2', '--free-tail', '6'],
        (EXIT_OK, {'parity': 'odd', 'closing_l': '1/2', 'free_tail': '6'})),
    (['solve', '--moments', '1', '1', '--tau', '0'],
        (EXIT_OK, {'solution': {'num': ['-1'], 'den': ['-1', '1']}})),
    (['solve', '--moments', '0', '1', '0', '--tau', 'inf'],
        (EXIT_OK, {'solution': {'num': ['-1'], 'den': ['0', '0', '1']}})),
    (['solve', '--moments', '1', '1', '--tau', '{"num": ["0"], "den": ["1"]}'],
        (EXIT_OK, {'tau': {'num': ['0'], 'den': ['1']}})),
    (['string', '--moments', '1', '-1'],
        (EXIT_OK, {'string': {'classification': 'signed', 'masses': [['1']], 'lengths': [['-1']]}})),
    (['analyze', '--moments', '1', 'x'],
        (EXIT_PARSE, {'error': 'parse', 'field': 'moments[1]'})),
    (['solve', '--moments', '1', '1'],
        (EXIT_PARSE, {'error': 'parse', 'field': 'tau'})),
    (['solve', '--moments', '1', '1', '--tau', '{"num": '],
        (EXIT_PARSE, {'field': 'tau'})),
    (['expand', '--moments', '1', '0', '1', '0'],
        (EXIT_NOT_REGULAR, {'error': 'not-regular', 'index': 1})),
    (['expand', '--moments', '1', '1', '2'],
        (EXIT_OK, {'parity': 'odd', 'closing_l': None})),
    (['expand', '--moments', '1', '1', '2', '--parity', 'even'],
        (EXIT_INSUFFICIENT_MOMENTS, {'error': 'insufficient-moments', 'index': 3})),
    (['analyze', '--moments', '0', '0'],
        (EXIT_NO_NORMAL_INDEX, {'error': 'no-normal-index'})),
    (['solve', '--moments', '1', '1', '--tau', 'inf'],
        (EXIT_INADMISSIBLE_PARAMETER, {'error': 'inadmissible-parameter'})),
    (['expand', '--moments', '1', '1', '2', '6', '--parity', 'odd', '--free-tail', '5'],
        (EXIT_PARSE, {'error': 'parse'})),
]



def run(argv, stdin = ''):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = main(argv, stdin = io.StringIO(stdin), stdout = stdout, stderr = stderr)
    return code, json.loads(stdout.getvalue()), stderr.getvalue()



def test_invocations():
    for argv, (expected_code, expected) in INVOCATIONS:
        code, document, _ = run(argv)
        assert code == expected_code, argv
        for key, value in expected.items():
            assert document[key] == value, (argv, key)



def test_standard_input():
    code, document, _ = run(['expand'], stdin = '{"moments": ["1", "1", "2", "6"], "kappa": 0}')
    assert code == EXIT_OK
    assert document['verification']['match']

    code, document, _ = run(['analyze', '-'], stdin = '{"moments": ["1", "1"]')
    assert code == EXIT_PARSE
    assert document['field'] == 'document'



def test_file_input(tmp_path):
    path = tmp_path / 'problem.json'
    path.write_text(u'{"moments": ["0", "1", "0", "1"], "kappa": 1}')
    code, document, _ = run(['expand', str(path)])
    assert code == EXIT_OK
    assert document['string'] == 'multipole'
    assert document['solvability']['verdict'] == 'solvable'

    code, document, _ = run(['expand', str(path), '--kappa', '0'])
    assert code == EXIT_OK
    assert document['solvability']['verdict'] == 'not-solvable'

    code, document, _ = run(['expand', str(tmp_path / 'missing.json')])
    assert code == EXIT_PARSE
    assert document['field'] == 'document'



def test_deterministic_output():
    assert run(['expand', '--moments', '1', '1', '2', '6']) == run(['expand', '--moments', '1', '1', '2', '6'])



def test_pretty():
    code, document, summary = run(['analyze', '--moments', '1', '1', '2', '6', '--pretty'])
    assert code == EXIT_OK
    assert document['normal_indices']['indices'] == [1, 2]
    assert 'solvability' in summary
    assert 'solvable' in summary



def test_batch(tmp_path):
    path = tmp_path / 'problems.jsonl'
    path.write_text(u'{"moments": ["1", "1"]}\n'
                    u'{"moments": ["1", "x"]}\n'
                    u'{"moments": ["0", "0"]}\n'
                    u'{"moments": ["-1", "1"]}\n')
    code, documents, _ = run(['analyze', '--batch', str(path), '--kappa', '1'])
    assert code == EXIT_PARSE
    assert len(documents) == 4
    assert documents[0]['kappa_N'] == 0
    assert documents[1]['field'] == 'line 2: moments[1]'
    assert documents[2]['error'] == 'no-normal-index'
    assert documents[3]['solvability']['verdict'] == 'solvable'

    code, documents, _ = run(['analyze', '--batch', str(tmp_path / 'missing.jsonl')])
    assert code == EXIT_PARSE
    assert documents['field'] == 'batch'



def test_run_batch():
    problems = [ProblemInput(MomentSequence([1, 1])),
                SReaderException('line 2: moments', 'field is required'),
                ProblemInput(MomentSequence([1, 0, 1, 0]))]
    serial = run_batch('expand', problems)
    assert [code for code, _ in serial] == [EXIT_OK, EXIT_PARSE, EXIT_NOT_REGULAR]
    assert run_batch('expand', problems, jobs = 2) == serial
    assert run_entry('string', problems[0])[1]['string']['classification'] == 'classical'
    assert run_entry('string', problems[1]) == serial[1]



def test_selftest():
    code, document, _ = run(['selftest', '--count', '2', '--seed', '3'])
    assert code == EXIT_OK
    assert document['status'] == 'all suites pass'
    assert document['seed'] == 3
    assert document['counterexample'] is None
    assert [suite['name'] for suite in document['suites']] == \
        ['roundtrip', 'inertia', 'toeplitz', 'step-down', 'classical', 'closed-forms', 'named-example']

    code, document, summary = run(['selftest', '--count', '2', '--inject-fault', '--pretty'])
    assert code == EXIT_CONSISTENCY
    assert document['suites'][0]['failures'] == 2
    assert 'moments' in document['counterexample']
    assert 'counterexample' in summary
    assert document['counterexample_suite'] == 'roundtrip'



def test_parser():
    with pytest.raises(SystemExit) as e:
        build_parser().parse_args([])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        build_parser().parse_args(['analyze', '--parity', 'sideways'])

    args = build_parser().parse_args(['solve', 'problem.json', '--tau', '1/2', '--jobs', '3'])
    assert (args.command, args.input, args.tau, args.jobs) == ('solve', 'problem.json', '1/2', 3)
