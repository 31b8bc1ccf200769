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
The `stieltjes.shankel` module builds Hankel matrices of a moment sequence
and computes their exact determinants and inertia, the normal indices of the
sequence and its regularity.

Matrices are numpy object arrays holding :class:`fractions.Fraction` entries::

   >>> s = MomentSequence([1, 1, 2, 6])
   >>> inertia(hankel(s, 2))
   Inertia(nu_minus=0, nu_zero=0, nu_plus=2)
   >>> normal_indices(s).indices
   [1, 2]
'''

import logging
from collections import namedtuple
from fractions import Fraction

import numpy

from stieltjes import MetaData
from stieltjes.stype import ODD, EVEN, InsufficientMomentsException, NoNormalIndexException, \
    NotNormalIndexException, NotApplicableException
from stieltjes.salgebra import Polynomial, ONE, sign_variations, real_root_signs


logger = logging.getLogger(__name__)



class MomentSequence(object):
    '''Finite sequence of exact rationals s_0 .. s_ell.

    :Parameters:
     - `values` (iterable of `Fraction`/`integer`) - the moments
     - `s_minus1` (`Fraction` or `None`) - optional s_{-1}, used by stepped
       down sequences indexed from -1
    '''

    def __init__(self, values, s_minus1 = None):
        self.values = tuple(Fraction(v) for v in values)
        self.s_minus1 = None if s_minus1 is None else Fraction(s_minus1)
        if not self.values and self.s_minus1 is None:
            raise ValueError('moment sequence must not be empty')


    @property
    def ell(self):
        return len(self.values) - 1


    def __len__(self):
        return len(self.values)


    def __iter__(self):
        return iter(self.values)


    def __getitem__(self, index):
        if index == -1 and self.s_minus1 is not None:
            return self.s_minus1
        if 0 <= index < len(self.values):
            return self.values[index]
        raise InsufficientMomentsException(index)


    def is_zero(self):
        return all(v == 0 for v in self.values)


    def extended(self, *values):
        return MomentSequence(self.values + tuple(values), self.s_minus1)


    def __eq__(self, other):
        if not isinstance(other, MomentSequence):
            return NotImplemented
        return self.values == other.values and self.s_minus1 == other.s_minus1

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.values, self.s_minus1))

    def __repr__(self):
        if self.s_minus1 is None:
            return 'MomentSequence([%s])' % ', '.join(str(v) for v in self.values)
        return 'MomentSequence([%s], s_minus1=%s)' % (', '.join(str(v) for v in self.values), self.s_minus1)



def as_moment_sequence(s):
    if isinstance(s, MomentSequence):
        return s
    return MomentSequence(s)



class SymmetricMatrix(numpy.ndarray):
    '''Square numpy object array of rationals, symmetric by construction.'''

    def _meta_init(self, **meta):
        '''Initialises the meta-information.'''
        self.meta = MetaData(**meta)

    def __eq__(self, other):
        if isinstance(other, numpy.ndarray):
            return self.shape == other.shape and numpy.array_equal(self, other)
        return super(SymmetricMatrix, self).__eq__(other)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.shape, tuple(self.flat)))

    def __array_finalize__(self, obj):
        self.meta = MetaData() if obj is None else getattr(obj, 'meta', MetaData())

    @property
    def order(self):
        return self.shape[0]



def symmetric_matrix(rows, **meta):
    '''Converts nested rows to a :class:`.SymmetricMatrix` and attaches meta
    data, e.g. ``kind='S+'`` and ``order=3``.

    :Parameters:
     - `rows` (`list` of `list` or square `numpy.ndarray`) - matrix entries

    :returns: :class:`.SymmetricMatrix`
    :raises: `ValueError` if the input is not square and symmetric
    '''
    n = len(rows)
    array = numpy.empty((n, n), dtype = object)
    for i in range(n):
        if len(rows[i]) != n:
            raise ValueError('matrix is not square')
        for j in range(n):
            array[i, j] = Fraction(rows[i][j])
    if any(array[i, j] != array[j, i] for i in range(n) for j in range(i)):
        raise ValueError('matrix is not symmetric')

    matrix = array.view(SymmetricMatrix)
    matrix._meta_init(**meta)
    return matrix



_KIND = {0: 'S', 1: 'S+', -1: 'S-'}


def hankel(s, n, shift = 0):
    '''Builds (s_{i+j+shift}) for i, j = 0 .. n-1.

    :Parameters:
     - `s` (`MomentSequence`) - the moments
     - `n` (`integer`) - order, 0 gives the empty matrix
     - `shift` (`integer`) - one of 0, 1, -1

    :returns: :class:`.SymmetricMatrix`
    :raises: `InsufficientMomentsException` naming the first missing moment
    '''
    if shift not in _KIND:
        raise ValueError('unsupported shift: %s' % shift)
    s = as_moment_sequence(s)
    if n > 0:
        # touch the largest index first so the error names it
        s[2 * n - 2 + shift]
    rows = [[s[i + j + shift] for j in range(n)] for i in range(n)]
    return symmetric_matrix(rows, kind = _KIND[shift], order = n)



def determinant(matrix):
    '''Exact determinant by fraction Gaussian elimination; 1 for order 0.'''
    a = numpy.array(matrix, dtype = object)
    n = a.shape[0]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i, k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[[k, pivot]] = a[[pivot, k]]
            det = -det
        det *= a[k, k]
        for i in range(k + 1, n):
            if a[i, k] != 0:
                factor = Fraction(a[i, k]) / a[k, k]
                a[i, k:] = a[i, k:] - factor * a[k, k:]
    return det



class Inertia(namedtuple('Inertia', 'nu_minus nu_zero nu_plus')):
    '''Signature (ν₋, ν₀, ν₊) of a symmetric matrix.'''
    __slots__ = ()

    @property
    def order(self):
        return self.nu_minus + self.nu_zero + self.nu_plus


    def as_dict(self):
        return {'nu_minus': self.nu_minus, 'nu_zero': self.nu_zero, 'nu_plus': self.nu_plus}



def inertia(matrix):
    '''Inertia by symmetric congruence reduction.

    Eliminates with a nonzero diagonal pivot when one exists; otherwise with a
    2x2 block [[0, a], [a, 0]], which contributes one negative and one positive
    eigenvalue. A remaining zero block contributes to ν₀.

    :Parameters:
     - `matrix` (`SymmetricMatrix` or square array) - symmetric input

    :returns: :class:`.Inertia`
    '''
    a = numpy.array(matrix, dtype = object)
    negative = zero = positive = 0

    while a.shape[0] > 0:
        n = a.shape[0]
        diagonal = next((i for i in range(n) if a[i, i] != 0), None)
        if diagonal is not None:
            d = Fraction(a[diagonal, diagonal])
            if d > 0:
                positive += 1
            else:
                negative += 1
            rest = numpy.array([i for i in range(n) if i != diagonal], dtype = int)
            column = a[rest, diagonal]
            a = a[numpy.ix_(rest, rest)] - numpy.outer(column, column) / d
            continue

        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j] != 0), None)
        if pair is None:
            zero += n
            break

        i, j = pair
        c = Fraction(a[i, j])
        negative += 1
        positive += 1
        rest = numpy.array([r for r in range(n) if r != i and r != j], dtype = int)
        left, right = a[rest, i], a[rest, j]
        a = a[numpy.ix_(rest, rest)] - (numpy.outer(left, right) + numpy.outer(right, left)) / c

    return Inertia(negative, zero, positive)



def characteristic_polynomial(matrix):
    '''det(λI - A) by the Faddeev-LeVerrier recursion.'''
    a = numpy.array(matrix, dtype = object)
    n = a.shape[0]
    coefficients = [Fraction(0)] * (n + 1)
    coefficients[n] = Fraction(1)
    identity = numpy.identity(n, dtype = object)
    current = numpy.zeros((n, n), dtype = object)
    for k in range(1, n + 1):
        current = a.dot(current) + coefficients[n - k + 1] * identity
        coefficients[n - k] = -Fraction(numpy.trace(a.dot(current))) / k
    return Polynomial(coefficients)



def sturm_inertia(matrix):
    '''Inertia from Sturm counts of the characteristic polynomial's roots;
    independent of :func:`.inertia`.'''
    negative, zero, positive = real_root_signs(characteristic_polynomial(matrix))
    return Inertia(negative, zero, positive)



def frobenius_negative_count(dets):
    '''Sign changes in (1, D_1, .., D_n).

    :raises: `NotApplicableException` if some D_j = 0
    '''
    dets = [Fraction(d) for d in dets]
    if any(d == 0 for d in dets):
        raise NotApplicableException('Frobenius rule needs nonzero leading minors')
    return sign_variations([Fraction(1)] + dets)



class NormalIndexReport(object):
    '''Normal indices of a sequence with their ν/μ classification.

    :Attributes:
     - `indices` - increasing normal indices n_1 < .. < n_N
     - `nu_subset` - indices with det S⁺_{n-1} != 0
     - `mu_subset` - indices with det S⁺_n != 0 (requires s_{2n-1})
     - `regular` - every index is of both kinds where the data allow it
     - `first_irregular` - first index breaking regularity, or ``None``
    '''

    def __init__(self, indices, nu_subset, mu_subset, first_irregular = None):
        self.indices = list(indices)
        self.nu_subset = list(nu_subset)
        self.mu_subset = list(mu_subset)
        self.first_irregular = first_irregular


    @property
    def regular(self):
        return self.first_irregular is None


    def interlaced(self):
        '''Checks 0 < ν_1 ≤ μ_1 < ν_2 ≤ μ_2 < ...'''
        tagged = sorted([(n, 0) for n in self.nu_subset] + [(n, 1) for n in self.mu_subset])
        kinds = [kind for _, kind in tagged]
        if any(a == b for a, b in zip(kinds, kinds[1:])):
            return False
        return not tagged or (tagged[0][1] == 0 and tagged[0][0] > 0)


    def as_dict(self):
        return {'indices': self.indices, 'nu': self.nu_subset, 'mu': self.mu_subset,
                'regular': self.regular, 'first_irregular': self.first_irregular}


    def __repr__(self):
        return 'NormalIndexReport(indices=%s, nu=%s, mu=%s, regular=%s)' % (
            self.indices, self.nu_subset, self.mu_subset, self.regular)



def normal_indices(s):
    '''Normal indices n ≤ ⌊ℓ/2⌋+1 of a sequence and their classification.

    :raises: `NoNormalIndexException` if no normal index is found
    '''
    s = as_moment_sequence(s)
    if s.is_zero():
        raise NoNormalIndexException('all moments vanish')

    indices, nus, mus = [], [], []
    first_irregular = None
    for n in range(1, s.ell // 2 + 2):
        if determinant(hankel(s, n)) == 0:
            continue
        indices.append(n)
        is_nu = determinant(hankel(s, n - 1, 1)) != 0
        has_plus = 2 * n - 1 <= s.ell
        is_mu = has_plus and determinant(hankel(s, n, 1)) != 0
        if is_nu:
            nus.append(n)
        if is_mu:
            mus.append(n)
        if first_irregular is None and (not is_nu or (has_plus and not is_mu)):
            first_irregular = n

    if not indices:
        raise NoNormalIndexException('no normal index within the available moments')

    report = NormalIndexReport(indices, nus, mus, first_irregular)
    logger.debug('normal indices of %r: %r', s, report)
    return report



def first_normal_index(s):
    '''ν_1 = 1 + number of leading zero moments.'''
    s = as_moment_sequence(s)
    for j, value in enumerate(s.values):
        if value != 0:
            if 2 * j > s.ell:
                break
            return j + 1
    raise NoNormalIndexException('no nonzero moment within the available window')



def solvability_indices(s, parity, last = None):
    '''(κ_N, k_N) read off the Hankel blocks of the last normal index n_N.

    :Parameters:
     - `s` (`MomentSequence`) - the moments
     - `parity` (:data:`.ODD` or :data:`.EVEN`) - problem parity
     - `last` (`integer` or `None`) - n_N when already known

    :returns: `tuple` (ν₋(S_{n_N}), ν₋(S⁺_{n_N-1})) for odd problems,
              (ν₋(S_{n_N}), ν₋(S⁺_{n_N})) for even ones
    :raises: `InsufficientMomentsException`
    '''
    s = as_moment_sequence(s)
    if last is None:
        last = normal_indices(s).indices[-1]
    if parity == ODD:
        plus_order = last - 1
    elif parity == EVEN:
        if s.ell < 2 * last - 1:
            raise InsufficientMomentsException(2 * last - 1)
        plus_order = last
    else:
        raise ValueError('unknown parity: %r' % (parity, ))
    return inertia(hankel(s, last)).nu_minus, inertia(hankel(s, plus_order, 1)).nu_minus



def bordered_polynomial(s, n):
    '''(1/D_n)·det of the rows (s_i .. s_{i+n}), i < n, bordered by
    (1, λ, .., λ^n). Monic of degree n; 1 for n = 0.

    :raises: `NotNormalIndexException` if D_n = 0,
             `InsufficientMomentsException` if s_{2n-1} is missing
    '''
    s = as_moment_sequence(s)
    if n == 0:
        return ONE
    s[2 * n - 1]
    top = numpy.array([[s[i + j] for j in range(n + 1)] for i in range(n)], dtype = object)
    d = determinant(top[:, :n])
    if d == 0:
        raise NotNormalIndexException('det S_%d vanishes' % n)
    coefficients = []
    for k in range(n + 1):
        minor = determinant(numpy.delete(top, k, axis = 1))
        coefficients.append((-1) ** (n + k) * minor / d)
    return Polynomial(coefficients)
