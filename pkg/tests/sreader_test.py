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
import pytest
from fractions import Fraction

from stieltjes.stype import ODD, EVEN, INFINITY, EXIT_PARSE, parse_rational, format_rational
from stieltjes.salgebra import Polynomial, RationalFunction, Z
from stieltjes.shankel import MomentSequence
from stieltjes.sreader import SReader, SReaderException, ProblemInput


F = Fraction


RATIONALS = [
    ('1',        F(1)),
    ('-7/3',     F(-7, 3)),
    ('+4/6',     F(2, 3)),
    (' 5 / 10 ', F(1, 2)),
    ('0',        F(0)),
    (3,          F(3)),
    (F(1, 9),    F(1, 9)),
]

MALFORMED_RATIONALS = ['', '1.5', '1/0', 'one', '1/-2', '2/3/4', None, True, 1.5]

# document -> offending field
BAD_DOCUMENTS = [
    ('{"moments": ["1", "x"]}',                          'moments[1]'),
    ('{"moments": []}',                                  'moments'),
    ('{"moments": "1"}',                                 'moments'),
    ('{"parity": "odd"}',                                'moments'),
    ('{"moments": ["1"], "colour": "red"}',              'colour'),
    ('{"moments": ["1"], "parity": "sideways"}',         'parity'),
    ('{"moments": ["1"], "kappa": -1}',                  'kappa'),
    ('{"moments": ["1"], "k": "2"}',                     'k'),
    ('{"moments": ["1"], "k": true}',                    'k'),
    ('{"moments": ["1"], "free_tail": "1/0"}',           'free_tail'),
    ('{"moments": ["1"], "tau": {"den": ["1"]}}',        'tau.num'),
    ('{"moments": ["1"], "tau": {"num": ["1"], "den": ["0"]}}', 'tau.den'),
    ('{"moments": ["1"], "tau": {"num": ["1", "a"]}}',   'tau.num[1]'),
    ('{"moments": ["1"], "tau": {"num": ["1"], "x": 1}}', 'tau.x'),
    ('{"moments": ["1"], "tau": "half"}',                'tau'),
    ('{"moments": ["1"]',                                'document'),
    ('["1", "1"]',                                       'document'),
]



def test_parse_rational():
    for text, expected in RATIONALS:
        assert parse_rational(text) == expected, text
        assert parse_rational(format_rational(expected)) == expected

    for text in MALFORMED_RATIONALS:
        with pytest.raises(ValueError):
            parse_rational(text)

    assert format_rational(F(-6, 4)) == '-3/2'
    assert format_rational(5) == '5'



def test_read():
    reader = SReader()
    problem = reader.read('{"moments": ["1", "1/2", "-3"], "parity": "even", "kappa": 1, "k": 0}')
    assert problem.moments == MomentSequence([1, F(1, 2), -3])
    assert problem.parity == EVEN
    assert (problem.kappa, problem.k) == (1, 0)
    assert problem.free_tail is None
    assert problem.tau is None

    problem = reader.read(b'{"moments": [1, "2"], "parity": null, "free_tail": "5/2"}')
    assert problem.moments == MomentSequence([1, 2])
    assert problem.parity is None
    assert problem.free_tail == F(5, 2)

    problem = reader.read(io.StringIO('{"moments": ["0", "1", "0"], "parity": "odd"}'))
    assert problem.parity == ODD

    assert reader.read({'moments': ['1']}).moments == MomentSequence([1])



def test_read_tau():
    reader = SReader()
    assert reader.read('{"moments": ["1"], "tau": "inf"}').tau is INFINITY
    assert reader.read('{"moments": ["1"], "tau": "1/2"}').tau == RationalFunction(F(1, 2))
    assert reader.read('{"moments": ["1"], "tau": {"num": ["0", "1"]}}').tau == RationalFunction(Z)
    assert reader.read('{"moments": ["1"], "tau": {"num": ["1"], "den": ["0", "2"]}}').tau == \
        RationalFunction(1, Polynomial([0, 2]))
    assert reader.read('{"moments": ["1"], "tau": {"num": ["0"], "den": ["1", "1"]}}').tau.is_zero()



def test_read_errors():
    reader = SReader()
    for document, field in BAD_DOCUMENTS:
        with pytest.raises(SReaderException) as e:
            reader.read(document)
        assert e.value.field == field, document
        assert e.value.exit_code == EXIT_PARSE
        assert e.value.as_dict()['field'] == field
        assert e.value.as_dict()['error'] == 'parse'



def test_read_batch():
    stream = io.StringIO('{"moments": ["1", "1"]}\n'
                         '\n'
                         '{"moments": ["1", "oops"]}\n'
                         '{"moments": ["0", "1", "0"], "parity": "odd"}\n')
    entries = SReader().read_batch(stream)
    assert len(entries) == 3
    assert entries[0] == ProblemInput(MomentSequence([1, 1]))
    assert isinstance(entries[1], SReaderException)
    assert entries[1].field == 'line 3: moments[1]'
    assert entries[2].parity == ODD



def test_override():
    reader = SReader()
    problem = reader.read('{"moments": ["1", "1", "2"], "kappa": 2}')
    changed = reader.override(problem, parity = 'odd', free_tail = '6', kappa = None, tau = 'inf')
    assert changed.parity == ODD
    assert changed.free_tail == 6
    assert changed.kappa == 2
    assert changed.tau is INFINITY
    assert changed.moments == problem.moments
    assert problem.parity is None

    assert reader.override(problem, moments = ['3']).moments == MomentSequence([3])
    with pytest.raises(SReaderException):
        reader.override(problem, kappa = -2)
    with pytest.raises(SReaderException):
        reader.override(problem, colour = 'red')



def test_problem_input_round_trip():
    reader = SReader()
    problems = [ProblemInput(MomentSequence([1, F(-1, 3)])),
                ProblemInput(MomentSequence([0, 1, 0]), ODD, 1, 0, F(7, 2), INFINITY),
                ProblemInput(MomentSequence([1, 1]), EVEN, tau = RationalFunction(Polynomial([1, 2]), Polynomial([3, 0, 1])))]
    for problem in problems:
        assert reader.read(problem.as_dict()) == problem
    assert problems[0] != problems[1]
    assert problems[1].as_dict() == {'moments': ['0', '1', '0'], 'parity': 'odd', 'kappa': 1, 'k': 0,
                                     'free_tail': '7/2', 'tau': 'inf'}
