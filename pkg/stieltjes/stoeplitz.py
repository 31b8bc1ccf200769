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
The `stieltjes.stoeplitz` module implements the upper triangular Toeplitz
machinery behind one Schur step.

For f(z) = -s_0/z - s_1/z^2 - ... whose first nonzero moment is s_{ν-1},
:func:`.step_down_m` splits

   -1/f(z) = z·m(z) + g(z),   g(z) = -𝔰₋₁ - 𝔰₀/z - 𝔰₁/z^2 - ...

and :func:`.step_down_l` (or :func:`.step_down_l_poly` when 𝔰₋₁ = 0)
splits -1/g(z) = l(z) + f₁(z). Both reduce to power-series reciprocals, i.e.
to the inversion of triangular Toeplitz matrices. Stepped-down sequences
indexed from -1 are plain lists whose item 0 holds 𝔰₋₁.
'''

import logging
from fractions import Fraction

import numpy

from stieltjes.stype import SException, InsufficientMomentsException, NoNormalIndexException, \
    NotBasicFormException, RequiresPolynomialLException, ConsistencyException
from stieltjes.salgebra import Polynomial, Z, series_reciprocal
from stieltjes.shankel import MomentSequence, as_moment_sequence, hankel, determinant, inertia, \
    normal_indices, bordered_polynomial


logger = logging.getLogger(__name__)



class ToeplitzException(SException):
    '''Raised for a Toeplitz matrix with zero diagonal.'''
    pass



class ToeplitzVector(object):
    '''First row (c_0, .., c_n) of the upper triangular Toeplitz matrix
    T = (c_{j-i}).'''

    def __init__(self, coefficients):
        self.coefficients = tuple(Fraction(c) for c in coefficients)
        if not self.coefficients:
            raise ValueError('Toeplitz vector must not be empty')


    def __len__(self):
        return len(self.coefficients)


    def matrix(self):
        n = len(self.coefficients)
        t = numpy.zeros((n, n), dtype = object)
        for i in range(n):
            for j in range(i, n):
                t[i, j] = self.coefficients[j - i]
        return t


    def __mul__(self, other):
        '''T(c)·T(d) = T(c * d), the truncated convolution.'''
        if not isinstance(other, ToeplitzVector):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError('Toeplitz orders differ: %d and %d' % (len(self), len(other)))
        n = len(self)
        return ToeplitzVector([sum(self.coefficients[i] * other.coefficients[k - i] for i in range(k + 1))
                               for k in range(n)])


    def reciprocal(self):
        return toeplitz_reciprocal(self)


    def __eq__(self, other):
        if not isinstance(other, ToeplitzVector):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return 'ToeplitzVector([%s])' % ', '.join(str(c) for c in self.coefficients)



def toeplitz_reciprocal(c):
    '''Returns d with T(c)·T(d) = I.

    :raises: `ToeplitzException` if c_0 = 0
    '''
    if not isinstance(c, ToeplitzVector):
        c = ToeplitzVector(c)
    if c.coefficients[0] == 0:
        raise ToeplitzException('Toeplitz matrix with zero diagonal is not invertible')
    return ToeplitzVector(series_reciprocal(c.coefficients))



class StepDownResult(object):
    '''Outcome of the m-substep.

    :Attributes:
     - `nu` - first normal index of the input
     - `a` - monic polynomial of degree ν with -1/f = a(z)/b + O(1/z)
     - `b` - s_{ν-1}
     - `m` - polynomial of degree ν-1, m(z) = (a(z) - a(0))/(b z)
     - `frak_s` - [𝔰₋₁, 𝔰₀, .., 𝔰_{ℓ-2ν}], empty when ℓ = 2ν-2
     - `free_tail_used` - s_{2ν-1} assumed when ℓ = 2ν-2, else ``None``
     - `closing_frak_s` - 𝔰₋₁ implied by that assumption, else ``None``
    '''

    def __init__(self, nu, a, b, m, frak_s, free_tail_used = None, closing_frak_s = None):
        self.nu = nu
        self.a = a
        self.b = b
        self.m = m
        self.frak_s = list(frak_s)
        self.free_tail_used = free_tail_used
        self.closing_frak_s = closing_frak_s


    def frak(self, index):
        '''𝔰_index for index ≥ -1.'''
        if not 0 <= index + 1 < len(self.frak_s):
            raise InsufficientMomentsException(index, 'stepped-down moment %d is not available' % index)
        return self.frak_s[index + 1]


    def __repr__(self):
        return 'StepDownResult(nu=%d, m=%r, frak_s=[%s])' % (self.nu, self.m, ', '.join(str(x) for x in self.frak_s))



def _check_basic_form(s, nu):
    if nu < 1:
        raise ValueError('normal index must be positive, got: %s' % nu)
    if s.ell < nu - 1:
        raise InsufficientMomentsException(nu - 1)
    if any(s[j] != 0 for j in range(nu - 1)) or s[nu - 1] == 0:
        raise NotBasicFormException('expected s_0 = .. = s_%d = 0 and s_%d != 0' % (nu - 2, nu - 1))



def step_down_m(s, nu, free_tail = None):
    '''Extracts m(z) and the stepped-down sequence 𝔰.

    Solves T(m_{ν-1}, .., m_0, -𝔰₋₁, .., -𝔰_{ℓ-2ν})·T(s_{ν-1}, .., s_ℓ) = I.

    :Parameters:
     - `s` (`MomentSequence`) - moments with s_0 = .. = s_{ν-2} = 0 != s_{ν-1}
     - `nu` (`integer`) - first normal index of `s`
     - `free_tail` (`Fraction` or `None`) - s_{2ν-1} when ℓ = 2ν-2,
       **Default**: 0

    :returns: :class:`.StepDownResult`
    :raises: `NotBasicFormException`, `InsufficientMomentsException`
    '''
    s = as_moment_sequence(s)
    _check_basic_form(s, nu)
    if s.ell < 2 * nu - 2:
        raise InsufficientMomentsException(2 * nu - 2)

    b = s[nu - 1]
    c = list(s.values[nu - 1:])
    free_tail_used = None
    if s.ell == 2 * nu - 2:
        free_tail_used = Fraction(free_tail) if free_tail is not None else Fraction(0)
        c.append(free_tail_used)

    d = series_reciprocal(c)
    m = Polynomial(reversed(d[:nu]))
    a = (Z * m + d[nu]) * b

    if free_tail_used is None:
        frak_s, closing = [-x for x in d[nu:]], None
    else:
        frak_s, closing = [], -d[nu]

    logger.debug('m-step nu=%d: m=%s, frak_s=%s', nu, m, frak_s)
    return StepDownResult(nu, a, b, m, frak_s, free_tail_used, closing)



def step_down_l(frak_s):
    '''Constant l-substep: l = 1/𝔰₋₁ and the next sequence s' with
    T(𝔰₋₁, .., 𝔰_L)·T(l, -s'_0, .., -s'_{L}) = I.

    :returns: `tuple` (l, s_next)
    :raises: `RequiresPolynomialLException` if 𝔰₋₁ = 0
    '''
    if not frak_s:
        raise ValueError('stepped-down sequence must contain 𝔰₋₁')
    if frak_s[0] == 0:
        raise RequiresPolynomialLException('𝔰₋₁ = 0, a polynomial l is required')
    r = series_reciprocal(frak_s)
    logger.debug('l-step: l=%s', r[0])
    return r[0], [-x for x in r[1:]]



def _first_nonzero(values):
    return next((j for j, v in enumerate(values) if v != 0), None)



def step_down_l_poly(frak_s):
    '''Polynomial l-substep for 𝔰₋₁ = 0: l(z) is the polynomial part of -1/g,
    of degree p where 𝔰_{p-1} is the first nonzero entry.

    :returns: `tuple` (l, s_next) with l a :class:`.Polynomial`
    :raises: `NotBasicFormException` if 𝔰₋₁ != 0,
             `NoNormalIndexException` if 𝔰₀, 𝔰₁, .. all vanish,
             `InsufficientMomentsException` if 𝔰_{2p-1} is missing
    '''
    if not frak_s:
        raise ValueError('stepped-down sequence must contain 𝔰₋₁')
    if frak_s[0] != 0:
        raise NotBasicFormException('polynomial l requires 𝔰₋₁ = 0')

    inner = list(frak_s[1:])
    head = _first_nonzero(inner)
    if head is None:
        raise NoNormalIndexException('stepped-down sequence vanishes on the available window')
    p = head + 1
    if len(inner) < 2 * p:
        raise InsufficientMomentsException(2 * p - 1)

    r = series_reciprocal(inner[head:])
    l = Polynomial(reversed(r[:p + 1]))
    logger.debug('polynomial l-step: l=%s', l)
    return l, [-x for x in r[p + 1:]]



def explicit_frak_s(s, nu):
    '''𝔰₋₁, .., 𝔰_{ℓ-2ν} from closed determinant formulas:

       𝔰₋₁ = (-1)^{ν+1}·(1/s_{ν-1})·D⁺_ν/D_ν
       𝔰_i = (-1)^{i+ν}/s_{ν-1}^{i+ν+2}·det H_i

    where H_i is the lower Hessenberg Toeplitz matrix of order ν+i+1 with
    s_ν on the diagonal and s_{ν-1} on the superdiagonal.
    '''
    s = as_moment_sequence(s)
    _check_basic_form(s, nu)
    if s.ell < 2 * nu - 1:
        raise InsufficientMomentsException(2 * nu - 1)

    b = s[nu - 1]
    values = [Fraction((-1) ** (nu + 1)) / b * determinant(hankel(s, nu, 1)) / determinant(hankel(s, nu))]
    for i in range(s.ell - 2 * nu + 1):
        order = nu + i + 1
        h = numpy.zeros((order, order), dtype = object)
        for r in range(order):
            for c in range(min(r + 2, order)):
                h[r, c] = s[nu + r - c]
        values.append(Fraction((-1) ** (i + nu)) / b ** (i + nu + 2) * determinant(h))
    return values



def explicit_l(s, nu):
    '''l = (-1)^{ν+1}·s_{ν-1}·D_ν/D⁺_ν.

    :raises: `RequiresPolynomialLException` if D⁺_ν = 0
    '''
    s = as_moment_sequence(s)
    d_plus = determinant(hankel(s, nu, 1))
    if d_plus == 0:
        raise RequiresPolynomialLException('D+_%d vanishes' % nu)
    return Fraction((-1) ** (nu + 1)) * s[nu - 1] * determinant(hankel(s, nu)) / d_plus



def explicit_l_poly(frak_s):
    '''l(z) = a(z)/b for the inner sequence 𝔰₀, 𝔰₁, .., with a the bordered
    determinant polynomial of order p and b = 𝔰_{p-1}.'''
    inner = MomentSequence(frak_s[1:])
    head = _first_nonzero(inner.values)
    if head is None:
        raise NoNormalIndexException('stepped-down sequence vanishes on the available window')
    return bordered_polynomial(inner, head + 1) * (1 / inner[head])



def _normal_index_list(values):
    if not values or all(v == 0 for v in values):
        return []
    try:
        return normal_indices(MomentSequence(values)).indices
    except NoNormalIndexException:
        return []



def _expect(condition, message, *args):
    if not condition:
        raise ConsistencyException(message % args)



def verify_step_down_m(s, result, indices = None):
    '''Checks the inertia bookkeeping of an m-substep:

    - normal indices of 𝔰 are n_{j+1} - ν
    - ν±(𝒮_p) = ν±(S_{p+ν}) - ν±(S_ν), ν₀(𝒮_p) = ν₀(S_{p+ν})
    - ν±(𝒮⁻_p) = ν±(S⁺_{p+ν-1}) - ν±(S⁺_{ν-1}), ν₀(𝒮⁻_p) = ν₀(S⁺_{p+ν-1})

    `indices` are the normal indices of `s` when the caller has them.

    :raises: `ConsistencyException` on the first violated relation
    '''
    s = as_moment_sequence(s)
    frak = result.frak_s
    if not frak:
        return
    nu = result.nu
    stepped = MomentSequence(frak[1:], s_minus1 = frak[0])

    if indices is None:
        indices = normal_indices(s).indices
    expected = [n - nu for n in indices[1:]]
    actual = _normal_index_list(frak[1:])
    _expect(actual == expected, 'normal indices of stepped sequence %s, expected %s', actual, expected)

    known = len(frak) - 2
    base = inertia(hankel(s, nu))
    p = 1
    while 2 * p - 2 <= known:
        left, right = inertia(hankel(stepped, p)), inertia(hankel(s, p + nu))
        _expect(left.nu_plus == right.nu_plus - base.nu_plus and left.nu_minus == right.nu_minus - base.nu_minus
                and left.nu_zero == right.nu_zero, 'inertia of stepped Hankel order %d: %s vs %s - %s', p, left, right, base)
        p += 1

    base = inertia(hankel(s, nu - 1, 1))
    p = 1
    while 2 * p - 3 <= known:
        left, right = inertia(hankel(stepped, p, -1)), inertia(hankel(s, p + nu - 1, 1))
        _expect(left.nu_plus == right.nu_plus - base.nu_plus and left.nu_minus == right.nu_minus - base.nu_minus
                and left.nu_zero == right.nu_zero, 'inertia of shifted stepped Hankel order %d: %s vs %s - %s', p, left, right, base)
        p += 1



def verify_step_down_l(frak_s, s_next):
    '''Checks the inertia bookkeeping of an l-substep:

    - ν(S'_p) = ν(𝒮_p)
    - ν₀(S'⁺_p) = ν₀(𝒮⁻_{p+1}), ν±(S'⁺_p) = ν±(𝒮⁻_{p+1}) - ν±((𝔰₋₁))

    :raises: `ConsistencyException` on the first violated relation
    '''
    if not s_next:
        return
    stepped = MomentSequence(frak_s[1:], s_minus1 = frak_s[0])
    following = MomentSequence(s_next)
    known = len(s_next) - 1

    p = 1
    while 2 * p - 2 <= known:
        left, right = inertia(hankel(following, p)), inertia(hankel(stepped, p))
        _expect(left == right, 'inertia of next Hankel order %d: %s vs %s', p, left, right)
        p += 1

    offset = inertia(hankel(stepped, 1, -1))
    p = 1
    while 2 * p - 1 <= known:
        left, right = inertia(hankel(following, p, 1)), inertia(hankel(stepped, p + 1, -1))
        _expect(left.nu_zero == right.nu_zero and left.nu_minus == right.nu_minus - offset.nu_minus
                and left.nu_plus == right.nu_plus - offset.nu_plus,
                'inertia of next shifted Hankel order %d: %s vs %s - %s', p, left, right, offset)
        p += 1
