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
The `stieltjes.salgebra` module provides exact univariate algebra over the
rationals: polynomials, rational functions, truncated Laurent expansions at
infinity, 2x2 polynomial matrices and the linear fractional transforms they
define.

All values are immutable. Coefficient lists are ascending-power::

   >>> p = Polynomial([2, -4, 1])
   >>> p.degree, p(0)
   (2, Fraction(2, 1))
'''

from fractions import Fraction

from stieltjes.stype import SException, MINUS_INFINITY, INFINITY, Infinity, DegenerateParameterException



class LaurentTailException(SException):
    '''Raised when a Laurent tail is queried below its recorded cutoff.'''
    pass



def _as_polynomial(value):
    if isinstance(value, Polynomial):
        return value
    return Polynomial((value, ))



class Polynomial(object):
    '''Polynomial with exact rational coefficients.

    :Parameters:
     - `coefficients` (iterable of `Fraction`/`integer`) - ascending-power
       coefficients, trailing zeros are dropped
    '''

    def __init__(self, coefficients = ()):
        coefficients = [Fraction(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)


    @classmethod
    def constant(cls, value):
        return cls((value, ))


    @classmethod
    def monomial(cls, power, value = 1):
        return cls([0] * power + [value])


    @property
    def coefficients(self):
        return self._coefficients


    @property
    def degree(self):
        '''Degree; :data:`.MINUS_INFINITY` for the zero polynomial.'''
        if not self._coefficients:
            return MINUS_INFINITY
        return len(self._coefficients) - 1


    @property
    def leading(self):
        '''Leading coefficient, 0 for the zero polynomial.'''
        return self._coefficients[-1] if self._coefficients else Fraction(0)


    def coefficient(self, power):
        if 0 <= power < len(self._coefficients):
            return self._coefficients[power]
        return Fraction(0)


    def is_zero(self):
        return not self._coefficients


    def is_constant(self):
        return len(self._coefficients) <= 1


    def __call__(self, x):
        result = Fraction(0)
        for c in reversed(self._coefficients):
            result = result * x + c
        return result


    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other, ))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._coefficients)


    def __neg__(self):
        return Polynomial([-c for c in self._coefficients])


    def __add__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        other = _as_polynomial(other)
        size = max(len(self._coefficients), len(other._coefficients))
        return Polynomial([self.coefficient(i) + other.coefficient(i) for i in range(size)])

    __radd__ = __add__


    def __sub__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        return _as_polynomial(other) - self


    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self._coefficients])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other._coefficients):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__


    def __divmod__(self, other):
        other = _as_polynomial(other)
        if other.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        remainder = list(self._coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - len(other._coefficients) + 1, 0)
        lead = other.leading
        shift = len(other._coefficients) - 1
        for k in range(len(quotient) - 1, -1, -1):
            factor = remainder[k + shift] / lead
            quotient[k] = factor
            if factor:
                for i, c in enumerate(other._coefficients):
                    remainder[k + i] -= factor * c
        return Polynomial(quotient), Polynomial(remainder[:shift])


    def __floordiv__(self, other):
        return divmod(self, other)[0]


    def __mod__(self, other):
        return divmod(self, other)[1]


    def shift(self, power):
        '''Multiplies by z^power.'''
        if self.is_zero():
            return self
        return Polynomial([0] * power + list(self._coefficients))


    def derivative(self):
        return Polynomial([i * c for i, c in enumerate(self._coefficients)][1:])


    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.leading)


    def __repr__(self):
        return 'Polynomial([%s])' % ', '.join(str(c) for c in self._coefficients)


    def __str__(self):
        if self.is_zero():
            return '0'
        terms = []
        for power, c in enumerate(self._coefficients):
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                monomial = 'z' if power == 1 else 'z^%d' % power
                if c == 1:
                    terms.append(monomial)
                elif c == -1:
                    terms.append('-' + monomial)
                else:
                    terms.append('%s*%s' % (c, monomial))
        return ' + '.join(terms).replace('+ -', '- ')



Z = Polynomial((0, 1))
ONE = Polynomial((1, ))
ZERO = Polynomial()



def poly_gcd(p, q):
    '''Monic greatest common divisor; gcd(0, 0) = 0.'''
    p, q = _as_polynomial(p), _as_polynomial(q)
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()



def series_quotient(numerator, denominator, count):
    '''Power-series quotient truncated to `count` terms.

    :Parameters:
     - `numerator` (`list`) - coefficients a_0, a_1, ... (missing ones read as 0)
     - `denominator` (`list`) - coefficients b_0, b_1, ... with b_0 != 0
     - `count` (`integer`) - number of quotient coefficients to produce

    :returns: `list` of `Fraction` q with b*q = a modulo w^count
    :raises: `ZeroDivisionError` if b_0 = 0
    '''
    if not denominator or denominator[0] == 0:
        raise ZeroDivisionError('series with zero constant term is not invertible')
    head = Fraction(denominator[0])
    quotient = []
    for k in range(count):
        acc = Fraction(numerator[k]) if k < len(numerator) else Fraction(0)
        for i in range(1, min(k, len(denominator) - 1) + 1):
            acc -= denominator[i] * quotient[k - i]
        quotient.append(acc / head)
    return quotient



def series_reciprocal(coefficients, count = None):
    '''Power-series reciprocal of c_0 + c_1 w + ... truncated to `count` terms
    (defaults to the input length).'''
    if count is None:
        count = len(coefficients)
    return series_quotient([1], list(coefficients), count)



class RationalFunction(object):
    '''Quotient of polynomials, kept in lowest terms with a monic denominator.

    :Parameters:
     - `num` (`Polynomial` or scalar) - numerator
     - `den` (`Polynomial` or scalar) - denominator, **Default**: ``1``

    :raises: `ZeroDivisionError` for an identically zero denominator
    '''

    def __init__(self, num, den = 1):
        num, den = _as_polynomial(num), _as_polynomial(den)
        if den.is_zero():
            raise ZeroDivisionError('rational function with zero denominator')
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        common = poly_gcd(num, den)
        num, den = num // common, den // common
        scale = 1 / den.leading
        self.num, self.den = num * scale, den * scale


    def is_zero(self):
        return self.num.is_zero()


    def __eq__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.num, self.den))


    def __neg__(self):
        return RationalFunction(-self.num, self.den)


    def __add__(self, other):
        other = _as_rational_function(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__


    def __sub__(self, other):
        return self + (-_as_rational_function(other))

    def __rsub__(self, other):
        return _as_rational_function(other) - self


    def __mul__(self, other):
        other = _as_rational_function(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__


    def __truediv__(self, other):
        return self * _as_rational_function(other).reciprocal()


    def reciprocal(self):
        return RationalFunction(self.den, self.num)


    def __repr__(self):
        return 'RationalFunction(%r, %r)' % (self.num, self.den)


    def __str__(self):
        return '(%s)/(%s)' % (self.num, self.den)



def _as_rational_function(value):
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)



class LaurentTail(object):
    '''Expansion at infinity, exact for the powers top_power down to
    cutoff_power. Coefficients below the cutoff are unknown.

    :Parameters:
     - `top_power` (`integer`) - power of the first stored coefficient
     - `coefficients` (`list`) - coefficients of z^top_power, z^(top_power-1), ...
     - `cutoff_power` (`integer`) - lowest power known exactly
    '''

    def __init__(self, top_power, coefficients, cutoff_power):
        if len(coefficients) != top_power - cutoff_power + 1:
            raise ValueError('expected %d coefficients, got: %d' % (top_power - cutoff_power + 1, len(coefficients)))
        self.top_power = top_power
        self.coefficients = tuple(Fraction(c) for c in coefficients)
        self.cutoff_power = cutoff_power


    def coefficient(self, power):
        if power < self.cutoff_power:
            raise LaurentTailException('coefficient of z^%d lies below the cutoff z^%d' % (power, self.cutoff_power))
        if power > self.top_power:
            return Fraction(0)
        return self.coefficients[self.top_power - power]


    def moments(self, count):
        '''Reads s_0..s_{count-1} off f = -s_0/z - s_1/z^2 - ...'''
        return [-self.coefficient(-1 - j) for j in range(count)]


    def polynomial_part(self):
        '''Polynomial formed by the nonnegative powers.'''
        return Polynomial([self.coefficient(p) for p in range(max(self.top_power, -1) + 1)])


    def agrees_with(self, other):
        '''True if both tails coincide on every power known to both.'''
        low = max(self.cutoff_power, other.cutoff_power)
        high = max(self.top_power, other.top_power)
        return all(self.coefficient(p) == other.coefficient(p) for p in range(low, high + 1))


    def __eq__(self, other):
        if not isinstance(other, LaurentTail):
            return NotImplemented
        return self.cutoff_power == other.cutoff_power and self.agrees_with(other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'LaurentTail(top_power=%d, coefficients=[%s], cutoff_power=%d)' % (
            self.top_power, ', '.join(str(c) for c in self.coefficients), self.cutoff_power)



def laurent_expand_at_infinity(f, cutoff_power):
    '''Expands a rational function at infinity through z^cutoff_power.

    When the true leading power lies below the cutoff the tail is identically
    zero on the requested window and is returned as a single zero coefficient.

    :Parameters:
     - `f` (`RationalFunction` or `Polynomial`) - function to expand
     - `cutoff_power` (`integer`) - lowest power to compute

    :returns: :class:`.LaurentTail`
    '''
    f = _as_rational_function(f)
    if f.is_zero():
        return LaurentTail(cutoff_power, [0], cutoff_power)

    top_power = f.num.degree - f.den.degree
    if cutoff_power > top_power:
        return LaurentTail(cutoff_power, [0], cutoff_power)

    numerator = list(reversed(f.num.coefficients))
    denominator = list(reversed(f.den.coefficients))
    coefficients = series_quotient(numerator, denominator, top_power - cutoff_power + 1)
    return LaurentTail(top_power, coefficients, cutoff_power)



class PolyMatrix2(object):
    '''2x2 matrix with polynomial entries [[w11, w12], [w21, w22]].'''

    def __init__(self, w11, w12, w21, w22):
        self.w11 = _as_polynomial(w11)
        self.w12 = _as_polynomial(w12)
        self.w21 = _as_polynomial(w21)
        self.w22 = _as_polynomial(w22)


    @classmethod
    def identity(cls):
        return cls(ONE, ZERO, ZERO, ONE)


    @classmethod
    def m_factor(cls, m):
        '''M_j = [[1, 0], [-z m_j, 1]].'''
        return cls(ONE, ZERO, -(Z * _as_polynomial(m)), ONE)


    @classmethod
    def l_factor(cls, l):
        '''L_j = [[1, l_j], [0, 1]].'''
        return cls(ONE, _as_polynomial(l), ZERO, ONE)


    @property
    def entries(self):
        return (self.w11, self.w12, self.w21, self.w22)


    def rows(self):
        return [[self.w11, self.w12], [self.w21, self.w22]]


    def det(self):
        return self.w11 * self.w22 - self.w12 * self.w21


    def __mul__(self, other):
        if not isinstance(other, PolyMatrix2):
            return NotImplemented
        return matmul2(self, other)


    def __eq__(self, other):
        if not isinstance(other, PolyMatrix2):
            return NotImplemented
        return self.entries == other.entries

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return 'PolyMatrix2(%r, %r, %r, %r)' % self.entries



def matmul2(a, b):
    return PolyMatrix2(a.w11 * b.w11 + a.w12 * b.w21,
                       a.w11 * b.w12 + a.w12 * b.w22,
                       a.w21 * b.w11 + a.w22 * b.w21,
                       a.w21 * b.w12 + a.w22 * b.w22)



def lft_apply(matrix, tau):
    '''Applies T_W[τ] = (w11 τ + w12)/(w21 τ + w22).

    :Parameters:
     - `matrix` (`PolyMatrix2`) - the transform
     - `tau` (`RationalFunction`, `Polynomial`, scalar or :data:`.INFINITY`) -
       the parameter

    :returns: normalized `RationalFunction`
    :raises: `DegenerateParameterException` if the denominator vanishes
             identically
    '''
    if isinstance(tau, Infinity):
        num, den = matrix.w11, matrix.w21
    else:
        tau = _as_rational_function(tau)
        num = matrix.w11 * tau.num + matrix.w12 * tau.den
        den = matrix.w21 * tau.num + matrix.w22 * tau.den

    if den.is_zero():
        raise DegenerateParameterException('transform denominator vanishes identically for tau = %s' % (tau, ))
    return RationalFunction(num, den)



def poly_negative_index(p):
    '''Negative index κ₋ of a real polynomial: ⌊(ν+1)/2⌋ if the leading
    coefficient is negative and ν = deg p is odd, ⌊ν/2⌋ otherwise.'''
    p = _as_polynomial(p)
    if p.is_zero():
        return 0
    nu = p.degree
    if p.leading < 0 and nu % 2 == 1:
        return (nu + 1) // 2
    return nu // 2



def sign(value):
    return (value > 0) - (value < 0)



def sturm_sequence(p):
    '''Sturm chain p, p', -rem(p, p'), ... of a nonzero polynomial.'''
    p = _as_polynomial(p)
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    return chain[:-1]



def sign_variations(values):
    '''Number of sign changes in a sequence, zeros skipped.'''
    signs = [sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)



def _variations_at(chain, point):
    if point is INFINITY:
        return sign_variations([q.leading for q in chain])
    if point == '-inf':
        return sign_variations([q.leading * (-1 if q.degree % 2 else 1) for q in chain])
    return sign_variations([q(point) for q in chain])



def count_distinct_roots(p, lower, upper):
    '''Number of distinct real roots of p in (lower, upper); endpoints must not
    be roots. Use ``'-inf'`` and :data:`.INFINITY` for unbounded ends.'''
    chain = sturm_sequence(p)
    return _variations_at(chain, lower) - _variations_at(chain, upper)



def squarefree_decomposition(p):
    '''Yun's square-free factorization of a nonzero polynomial.

    :returns: `list` of (monic factor, multiplicity) pairs, constants omitted
    '''
    p = _as_polynomial(p).monic()
    if p.degree in (MINUS_INFINITY, 0):
        return []
    factors = []
    a = poly_gcd(p, p.derivative())
    b = p // a
    c = p.derivative() // a
    d = c - b.derivative()
    multiplicity = 1
    while b.degree > 0:
        factor = poly_gcd(b, d)
        b = b // factor
        c = d // factor
        d = c - b.derivative()
        if factor.degree > 0:
            factors.append((factor, multiplicity))
        multiplicity += 1
    return factors



def real_root_signs(p):
    '''Counts roots of a real-rooted polynomial by sign, with multiplicity.

    :returns: `tuple` (negative, zero, positive)
    '''
    p = _as_polynomial(p)
    if p.is_zero():
        raise ValueError('zero polynomial has no finite root count')
    zero = 0
    while p.coefficient(zero) == 0:
        zero += 1
    reduced = Polynomial(p.coefficients[zero:])

    negative = positive = 0
    for factor, multiplicity in squarefree_decomposition(reduced):
        negative += multiplicity * count_distinct_roots(factor, '-inf', Fraction(0))
        positive += multiplicity * count_distinct_roots(factor, Fraction(0), INFINITY)
    return negative, zero, positive
