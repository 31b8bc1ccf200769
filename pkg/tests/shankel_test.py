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

import random
import pytest
from fractions import Fraction

from stieltjes.stype import ODD, EVEN, InsufficientMomentsException, NoNormalIndexException, \
    NotNormalIndexException, NotApplicableException
from stieltjes.salgebra import Polynomial, ONE
from stieltjes.shankel import *  # @UnusedWildImport
from stieltjes.utils import random_symmetric_matrix, random_rational


F = Fraction


# moments -> (normal indices, nu subset, mu subset, first irregular)
NORMAL_INDICES = [
    ([1, 1],                 ([1], [1], [1], None)),
    ([-1, 1],                ([1], [1], [1], None)),
    ([1, 1, 2, 6],           ([1, 2], [1, 2], [1, 2], None)),
    ([1, 1, 2],              ([1, 2], [1, 2], [1], None)),
    ([0, 1, 0],              ([2], [2], [], None)),
    ([0, 1, 0, 0],           ([2], [2], [], 2)),
    ([0, 1, 0, 1],           ([2], [2], [2], None)),
    ([1, 0, 1, 0],           ([1, 2], [1], [2], 1)),
]

INERTIA = [
    ([[1]],                                   (0, 0, 1)),
    ([[-2]],                                  (1, 0, 0)),
    ([[0]],                                   (0, 1, 0)),
    ([[0, 1], [1, 0]],                        (1, 0, 1)),
    ([[1, 1], [1, 2]],                        (0, 0, 2)),
    ([[1, 1], [1, 1]],                        (0, 1, 1)),
    ([[0, 0, 1], [0, 1, 0], [1, 0, 0]],       (1, 0, 2)),
    ([[0, 0, 0], [0, 0, 2], [0, 2, 0]],       (1, 1, 1)),
]



def test_moment_sequence():
    s = MomentSequence(['1/2', 1, F(3, 4)])
    assert s.values == (F(1, 2), F(1), F(3, 4))
    assert s.ell == 2
    assert len(s) == 3
    assert list(s) == [F(1, 2), 1, F(3, 4)]
    assert s.extended(5) == MomentSequence([F(1, 2), 1, F(3, 4), 5])
    assert not s.is_zero()
    assert MomentSequence([0, 0]).is_zero()

    with pytest.raises(InsufficientMomentsException) as e:
        s[3]
    assert e.value.index == 3
    with pytest.raises(InsufficientMomentsException):
        s[-1]

    stepped = MomentSequence([2], s_minus1 = 5)
    assert stepped[-1] == 5
    assert stepped[0] == 2
    with pytest.raises(ValueError):
        MomentSequence([])
    assert as_moment_sequence(s) is s



def test_hankel():
    s = MomentSequence([1, 2, 3, 4, 5])
    S = hankel(s, 3)
    assert S.tolist() == [[1, 2, 3], [2, 3, 4], [3, 4, 5]]
    assert S.meta.kind == 'S'
    assert S.meta.order == 3
    assert S.order == 3

    plus = hankel(s, 2, 1)
    assert plus.tolist() == [[2, 3], [3, 4]]
    assert plus.meta.kind == 'S+'
    assert hankel(MomentSequence([7], s_minus1 = 1), 1, -1).tolist() == [[1]]
    assert hankel(s, 0).shape == (0, 0)

    with pytest.raises(InsufficientMomentsException) as e:
        hankel(s, 3, 1)
    assert e.value.index == 5



def test_symmetric_matrix():
    m = symmetric_matrix([[1, 2], [2, 3]], kind = 'S')
    assert m == symmetric_matrix([[1, 2], [2, 3]])
    assert m != symmetric_matrix([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        symmetric_matrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        symmetric_matrix([[1, 2], [2]])



def test_determinant():
    assert determinant(symmetric_matrix([])) == 1
    assert determinant(symmetric_matrix([[0, 1], [1, 0]])) == -1
    assert determinant(hankel(MomentSequence([1, 1, 2, 6, 24]), 3)) == 4
    assert determinant(symmetric_matrix([[1, 1], [1, 1]])) == 0
    assert determinant(symmetric_matrix([['1/2', 0], [0, '2/3']])) == F(1, 3)



def test_inertia():
    for rows, expected in INERTIA:
        matrix = symmetric_matrix(rows)
        assert inertia(matrix) == expected, 'inertia of %s' % rows
        assert sturm_inertia(matrix) == expected, 'Sturm inertia of %s' % rows

    assert inertia(symmetric_matrix([[1]])).as_dict() == {'nu_minus': 0, 'nu_zero': 0, 'nu_plus': 1}
    assert Inertia(1, 2, 3).order == 6



def test_inertia_oracles_agree():
    rng = random.Random(11)
    for _ in range(60):
        order = rng.randint(1, 5)
        matrix = random_symmetric_matrix(rng, order, rank = rng.choice((None, rng.randint(0, order))))
        assert inertia(matrix) == sturm_inertia(matrix), matrix.tolist()



def test_against_sympy():
    sympy = pytest.importorskip('sympy')
    rng = random.Random(5)
    for _ in range(20):
        matrix = random_symmetric_matrix(rng, rng.randint(1, 4))
        reference = sympy.Matrix(matrix.tolist())
        assert determinant(matrix) == Fraction(str(reference.det()))
        expected = [Fraction(str(c)) for c in reversed(reference.charpoly().all_coeffs())]
        assert characteristic_polynomial(matrix) == Polynomial(expected)



def test_characteristic_polynomial():
    assert characteristic_polynomial(symmetric_matrix([[0, 1], [1, 0]])) == Polynomial([-1, 0, 1])
    assert characteristic_polynomial(symmetric_matrix([[2, 0], [0, 3]])) == Polynomial([6, -5, 1])



def test_frobenius():
    assert frobenius_negative_count([1, -1]) == 1
    assert frobenius_negative_count([-1, -1, 1]) == 2
    with pytest.raises(NotApplicableException):
        frobenius_negative_count([1, 0])

    rng = random.Random(19)
    for _ in range(60):
        n = rng.randint(1, 5)
        s = MomentSequence([random_rational(rng, 10) for _ in range(2 * n - 1)])
        dets = [determinant(hankel(s, j)) for j in range(1, n + 1)]
        if all(d != 0 for d in dets):
            assert frobenius_negative_count(dets) == inertia(hankel(s, n)).nu_minus, s



def test_normal_indices():
    for moments, (indices, nus, mus, irregular) in NORMAL_INDICES:
        report = normal_indices(MomentSequence(moments))
        assert report.indices == indices, moments
        assert report.nu_subset == nus, moments
        assert report.mu_subset == mus, moments
        assert report.first_irregular == irregular, moments
        assert report.regular == (irregular is None)

    assert normal_indices(MomentSequence([1, 1, 2, 6])).interlaced()
    assert not NormalIndexReport([1, 2], [1, 2], [], None).interlaced()
    assert normal_indices(MomentSequence([1, 1])).as_dict() == \
        {'indices': [1], 'nu': [1], 'mu': [1], 'regular': True, 'first_irregular': None}

    with pytest.raises(NoNormalIndexException):
        normal_indices(MomentSequence([0, 0]))
    with pytest.raises(NoNormalIndexException):
        normal_indices(MomentSequence([0, 0, 1]))



def test_first_normal_index():
    assert first_normal_index(MomentSequence([3])) == 1
    assert first_normal_index(MomentSequence([0, 0, 2, 0, 0])) == 3
    with pytest.raises(NoNormalIndexException):
        first_normal_index(MomentSequence([0, 0, 1]))



def test_solvability_indices():
    assert solvability_indices(MomentSequence([1, 1]), EVEN) == (0, 0)
    assert solvability_indices(MomentSequence([-1, 1]), EVEN) == (1, 0)
    assert solvability_indices(MomentSequence([1, -1]), EVEN) == (0, 1)
    assert solvability_indices(MomentSequence([1, 1, 2, 6]), EVEN) == (0, 0)
    assert solvability_indices(MomentSequence([1, 1, 2, 6]), EVEN, last = 2) == (0, 0)
    assert solvability_indices(MomentSequence([0, 1, 0]), ODD) == (1, 0)
    assert solvability_indices(MomentSequence([1, 1, 2]), ODD) == (0, 0)

    with pytest.raises(InsufficientMomentsException) as e:
        solvability_indices(MomentSequence([1, 1, 2]), EVEN)
    assert e.value.index == 3
    with pytest.raises(ValueError):
        solvability_indices(MomentSequence([1, 1]), 'sideways')



def test_bordered_polynomial():
    s = MomentSequence([1, 1, 2, 6])
    assert bordered_polynomial(s, 0) == ONE
    assert bordered_polynomial(s, 1) == Polynomial([-1, 1])
    assert bordered_polynomial(s, 2) == Polynomial([2, -4, 1])

    with pytest.raises(NotNormalIndexException):
        bordered_polynomial(MomentSequence([0, 1, 0, 0]), 1)
    with pytest.raises(InsufficientMomentsException):
        bordered_polynomial(MomentSequence([1, 1, 2]), 2)
