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

import pytest
from fractions import Fraction

from stieltjes.stype import INFINITY, MINUS_INFINITY, DegenerateParameterException
from stieltjes.salgebra import *  # @UnusedWildImport


F = Fraction


NEGATIVE_INDEX = [
    (Polynomial([1]),            0),
    (Polynomial([-1]),           0),
    (Polynomial([0, 1]),         0),
    (Polynomial([0, -1]),        1),
    (Polynomial([0, 0, 1]),      1),
    (Polynomial([0, 0, -1]),     1),
    (Polynomial([0, 0, 0, -1]),  2),
    (Polynomial([0, 0, 0, 1]),   1),
    (Polynomial([5, 0, 0, 0, -2]), 2),
    (ZERO,                       0),
]



def test_polynomial_normalization():
    p = Polynomial([1, 2, 0, 0])
    assert p.coefficients == (F(1), F(2))
    assert p.degree == 1
    assert p.leading == 2

    assert ZERO.degree is MINUS_INFINITY
    assert ZERO.leading == 0
    assert ZERO.is_zero()
    assert Polynomial([0, 0]) == ZERO
    assert Polynomial.monomial(3, F(1, 2)).coefficients == (0, 0, 0, F(1, 2))
    assert Polynomial.constant(7).is_constant()
    assert Polynomial([3]) == 3



def test_polynomial_arithmetic():
    p = Polynomial([-1, 0, 1])
    q = Polynomial([-1, 1])

    assert p + q == Polynomial([-2, 1, 1])
    assert p - q == Polynomial([0, -1, 1])
    assert 1 - q == Polynomial([2, -1])
    assert q * q == Polynomial([1, -2, 1])
    assert 2 * q == Polynomial([-2, 2])
    assert -q == Polynomial([1, -1])
    assert p(3) == 8
    assert p(F(1, 2)) == F(-3, 4)
    assert Z * q == q.shift(1)

    assert divmod(p, q) == (Polynomial([1, 1]), ZERO)
    assert divmod(Polynomial([1, 0, 1]), q) == (Polynomial([1, 1]), Polynomial([2]))
    assert Polynomial([1, 0, 1]) // q == Polynomial([1, 1])
    assert Polynomial([1, 0, 1]) % q == 2
    with pytest.raises(ZeroDivisionError):
        divmod(p, ZERO)

    assert poly_gcd(p, Polynomial([2, -2])) == q
    assert Polynomial([2, 4]).monic() == Polynomial([F(1, 2), 1])
    assert Polynomial([1, 1, 1]).derivative() == Polynomial([1, 2])



def test_polynomial_str():
    assert str(ZERO) == '0'
    assert str(Polynomial([2, -4, 1])) == '2 - 4*z + z^2'
    assert str(Polynomial([0, -1])) == '-z'



def test_series_reciprocal():
    assert series_reciprocal([1, 1], 4) == [1, -1, 1, -1]
    assert series_reciprocal([1, 1, 2, 6]) == [1, -1, -1, -3]
    assert series_quotient([1, 2], [2], 3) == [F(1, 2), 1, 0]
    with pytest.raises(ZeroDivisionError):
        series_reciprocal([0, 1])



def test_rational_function_normalization():
    f = RationalFunction(Polynomial([-1, 0, 1]), Polynomial([-2, 2]))
    assert f.num == Polynomial([F(1, 2), F(1, 2)])
    assert f.den == ONE

    g = RationalFunction(1, Polynomial([1, -1]))
    assert g.num == -1
    assert g.den == Polynomial([-1, 1])

    assert RationalFunction(ZERO, Polynomial([1, 1])) == RationalFunction(0)
    assert RationalFunction(3) == 3
    assert g * Polynomial([1, -1]) == 1
    assert g - g == 0
    assert (g + 1) == RationalFunction(Polynomial([-2, 1]), Polynomial([-1, 1]))
    assert g.reciprocal() == Polynomial([1, -1])

    with pytest.raises(ZeroDivisionError):
        RationalFunction(1, ZERO)



def test_laurent_expansion():
    # 1/(1 - z) = -1/z - 1/z^2 - ..
    f = RationalFunction(1, Polynomial([1, -1]))
    tail = laurent_expand_at_infinity(f, -6)
    assert tail.top_power == -1
    assert tail.moments(6) == [1] * 6
    assert tail.coefficient(3) == 0
    assert tail.polynomial_part() == ZERO

    with pytest.raises(LaurentTailException):
        tail.coefficient(-7)
    with pytest.raises(LaurentTailException):
        tail.moments(7)

    # z + 1/z
    g = RationalFunction(Polynomial([1, 0, 1]), Z)
    tail = laurent_expand_at_infinity(g, -3)
    assert tail.coefficients == (1, 0, 1, 0, 0)
    assert tail.polynomial_part() == Z

    assert laurent_expand_at_infinity(f, 2) == LaurentTail(2, [0], 2)
    assert laurent_expand_at_infinity(RationalFunction(0), -2).moments(1) == [0]
    assert laurent_expand_at_infinity(f, -6).agrees_with(laurent_expand_at_infinity(f, -3))



def test_poly_matrix():
    W = PolyMatrix2.m_factor(1) * PolyMatrix2.l_factor(1)
    assert W == PolyMatrix2(1, 1, Polynomial([0, -1]), Polynomial([1, -1]))
    assert W.det() == ONE
    assert W.rows() == [[ONE, ONE], [Polynomial([0, -1]), Polynomial([1, -1])]]
    assert PolyMatrix2.identity() * W == W
    assert W * PolyMatrix2.identity() == W
    assert PolyMatrix2.m_factor(Polynomial([0, 1])).w21 == Polynomial([0, 0, -1])
    assert matmul2(PolyMatrix2.l_factor(1), PolyMatrix2.m_factor(1)) == \
        PolyMatrix2(Polynomial([1, -1]), 1, Polynomial([0, -1]), 1)



def test_lft_apply():
    W = PolyMatrix2(1, 1, Polynomial([0, -1]), Polynomial([1, -1]))
    assert lft_apply(W, ZERO) == RationalFunction(1, Polynomial([1, -1]))
    assert lft_apply(W, INFINITY) == RationalFunction(1, Polynomial([0, -1]))
    assert lft_apply(W, RationalFunction(1, Z)) == RationalFunction(Polynomial([1, 1]), Polynomial([0, 0, -1]))

    with pytest.raises(DegenerateParameterException):
        lft_apply(PolyMatrix2(1, 0, 0, 0), ZERO)
    with pytest.raises(DegenerateParameterException):
        lft_apply(PolyMatrix2(1, 0, 0, 1), INFINITY)



def test_negative_index():
    for p, expected in NEGATIVE_INDEX:
        assert poly_negative_index(p) == expected, 'kappa(%s)' % p



def test_sturm():
    # z^2 (z - 1)(z + 2)
    p = Polynomial([0, 0, -2, 1, 1])
    assert real_root_signs(p) == (1, 2, 1)
    assert real_root_signs(Polynomial([-1, 0, 1]) * Polynomial([-1, 0, 1])) == (2, 0, 2)
    assert count_distinct_roots(Polynomial([-2, 0, 1]), F(0), F(2)) == 1
    assert sign_variations([1, 0, -1, 2, 0]) == 2
    assert squarefree_decomposition(Polynomial([1, -2, 1]) * Polynomial([0, 1])) == [(Z, 1), (Polynomial([-1, 1]), 2)]

    with pytest.raises(ValueError):
        real_root_signs(ZERO)
