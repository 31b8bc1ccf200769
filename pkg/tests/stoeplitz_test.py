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
import numpy
import pytest
from fractions import Fraction

from stieltjes.stype import ConsistencyException, InsufficientMomentsException, NoNormalIndexException, \
    NotBasicFormException, RequiresPolynomialLException
from stieltjes.salgebra import Polynomial, Z, ONE
from stieltjes.shankel import MomentSequence
from stieltjes.stoeplitz import *  # @UnusedWildImport
from stieltjes.utils import random_rational, random_basic_form


F = Fraction



def test_toeplitz_vector():
    c = ToeplitzVector([1, 2, 3])
    assert c.matrix().tolist() == [[1, 2, 3], [0, 1, 2], [0, 0, 1]]
    assert len(c) == 3
    assert c * ToeplitzVector([1, 0, 0]) == c
    assert c * ToeplitzVector([1, -2, 1]) == ToeplitzVector([1, 0, 0])

    with pytest.raises(ValueError):
        ToeplitzVector([])
    with pytest.raises(ValueError):
        c * ToeplitzVector([1, 2])



def test_toeplitz_reciprocal():
    c = ToeplitzVector([1, 1, 2, 6])
    d = toeplitz_reciprocal([1, 1, 2, 6])
    assert d == ToeplitzVector([1, -1, -1, -3])
    assert c * d == ToeplitzVector([1, 0, 0, 0])
    assert c.reciprocal() == d
    assert toeplitz_reciprocal([F(1, 2)]) == ToeplitzVector([2])

    with pytest.raises(ToeplitzException):
        toeplitz_reciprocal([0, 1])



def test_toeplitz_reciprocal_random():
    rng = random.Random(3)
    for _ in range(40):
        c = [random_rational(rng, nonzero = True)] + [random_rational(rng) for _ in range(rng.randint(0, 8))]
        d = toeplitz_reciprocal(c)
        product = ToeplitzVector(c).matrix().dot(d.matrix())
        assert (product == numpy.identity(len(c), dtype = object)).all()
        assert toeplitz_reciprocal(d) == ToeplitzVector(c)



def test_step_down_m():
    s = MomentSequence([1, 1, 2, 6])
    result = step_down_m(s, 1)
    assert result.nu == 1
    assert result.m == ONE
    assert result.b == 1
    assert result.a == Polynomial([-1, 1])
    assert result.frak_s == [1, 1, 3]
    assert result.frak(-1) == 1
    assert result.frak(1) == 3
    assert result.free_tail_used is None
    assert result.closing_frak_s is None
    with pytest.raises(InsufficientMomentsException):
        result.frak(2)

    assert explicit_frak_s(s, 1) == [1, 1, 3]



def test_step_down_m_closed_form_random():
    rng = random.Random(17)
    for _ in range(200):
        s, nu = random_basic_form(rng)
        assert step_down_m(s, nu).frak_s == explicit_frak_s(s, nu), (s, nu)



def test_step_down_m_higher_index():
    s = MomentSequence([0, 1, 0, 0, 1, 0])
    result = step_down_m(s, 2)
    assert result.m == Z
    assert result.frak_s == [0, 1, 0]
    assert explicit_frak_s(s, 2) == [0, 1, 0]



def test_step_down_m_terminal():
    s = MomentSequence([0, 1, 0])
    result = step_down_m(s, 2)
    assert result.m == Z
    assert result.frak_s == []
    assert result.free_tail_used == 0
    assert result.closing_frak_s == 0

    closed = step_down_m(s, 2, free_tail = 1)
    assert closed.m == Z
    assert closed.free_tail_used == 1
    assert closed.closing_frak_s == 1



def test_step_down_m_errors():
    with pytest.raises(NotBasicFormException):
        step_down_m(MomentSequence([0, 1]), 1)
    with pytest.raises(NotBasicFormException):
        step_down_m(MomentSequence([1, 1]), 2)
    with pytest.raises(InsufficientMomentsException) as e:
        step_down_m(MomentSequence([0, 1]), 2)
    assert e.value.index == 2
    with pytest.raises(ValueError):
        step_down_m(MomentSequence([1]), 0)



def test_step_down_l():
    l, following = step_down_l([1, 1, 3])
    assert l == 1
    assert following == [1, 2]
    assert explicit_l(MomentSequence([1, 1, 2, 6]), 1) == 1

    l, following = step_down_l([2])
    assert l == F(1, 2)
    assert following == []

    with pytest.raises(RequiresPolynomialLException):
        step_down_l([0, 1, 0])
    with pytest.raises(ValueError):
        step_down_l([])
    with pytest.raises(RequiresPolynomialLException):
        explicit_l(MomentSequence([0, 1, 0, 0]), 2)



def test_step_down_l_poly():
    l, following = step_down_l_poly([0, 1, 0])
    assert l == Z
    assert following == []
    assert explicit_l_poly([0, 1, 0]) == Z

    with pytest.raises(NotBasicFormException):
        step_down_l_poly([1, 0])
    with pytest.raises(NoNormalIndexException):
        step_down_l_poly([0, 0, 0])
    with pytest.raises(InsufficientMomentsException) as e:
        step_down_l_poly([0, 0, 1])
    assert e.value.index == 3



def test_verify_step_down():
    s = MomentSequence([1, 1, 2, 6])
    result = step_down_m(s, 1)
    verify_step_down_m(s, result)
    verify_step_down_l(result.frak_s, [1, 2])
    verify_step_down_m(s, result, [1, 2])
    with pytest.raises(ConsistencyException):
        verify_step_down_m(s, result, [1, 3])

    tampered = StepDownResult(1, result.a, result.b, result.m, [-1, 1, 3])
    with pytest.raises(ConsistencyException):
        verify_step_down_m(s, tampered)
    with pytest.raises(ConsistencyException):
        verify_step_down_l(result.frak_s, [-1, 2])

    # nothing to compare once the data are used up
    verify_step_down_m(MomentSequence([0, 1, 0]), step_down_m(MomentSequence([0, 1, 0]), 2))
    verify_step_down_l([2], [])
