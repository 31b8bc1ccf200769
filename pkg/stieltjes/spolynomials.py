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
The `stieltjes.spolynomials` module turns a :class:`.SchurExpansion` into
polynomials: the orthogonal polynomials of the first and second kind, the
equivalent P-fraction, the Stieltjes polynomials P⁺_j, Q⁺_j and the solution
matrix W whose linear fractional transform describes every solution.

Stieltjes polynomials are obtained by two independent routes, from moment
determinants and from the (m_j, l_j) recurrence, and both routes are compared
entrywise by :func:`.solution_matrix`.
'''

import logging
from fractions import Fraction
from functools import reduce

from stieltjes import MetaData, EXPANSION_OPTIONS
from stieltjes.stype import ODD, CLASSICAL, SIGNED, MULTIPOLE, NotRegularException, \
    InadmissibleParameterException, DegenerateParameterException, ConsistencyException
from stieltjes.salgebra import Polynomial, PolyMatrix2, RationalFunction, ONE, ZERO, Z, lft_apply, \
    laurent_expand_at_infinity
from stieltjes.shankel import as_moment_sequence, bordered_polynomial
from stieltjes.sschur import parameter_admissibility


logger = logging.getLogger(__name__)



def _expect(condition, message, *args):
    if not condition:
        raise ConsistencyException(message % args)



class OrthPolyPair(object):
    '''Polynomials P_n and Q_n of the first and second kind at a normal
    index n.'''

    def __init__(self, index, P, Q):
        self.index = index
        self.P = P
        self.Q = Q


    def __eq__(self, other):
        if not isinstance(other, OrthPolyPair):
            return NotImplemented
        return (self.index, self.P, self.Q) == (other.index, other.P, other.Q)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.index, self.P, self.Q))

    def __repr__(self):
        return 'OrthPolyPair(n=%d, P=%s, Q=%s)' % (self.index, self.P, self.Q)



class PFraction(object):
    '''P-fraction b_0/(a_0 - b_1/(a_1 - ...)) with rational b_j and monic
    polynomials a_j. `a` may be one entry shorter than the number of
    normal indices when the closing length of an odd problem is open.'''

    def __init__(self, b, a):
        self.b = list(b)
        self.a = list(a)


    def __eq__(self, other):
        if not isinstance(other, PFraction):
            return NotImplemented
        return self.b == other.b and self.a == other.a

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'PFraction(b=[%s], a=[%s])' % (', '.join(str(x) for x in self.b), ', '.join(str(x) for x in self.a))



class StieltjesPolySeq(object):
    '''Stieltjes polynomials P⁺_j, Q⁺_j for j = -1 .. top.

    :Parameters:
     - `Pplus` (`list`) - P⁺_{-1}, P⁺_0, ..
     - `Qplus` (`list`) - Q⁺_{-1}, Q⁺_0, ..
     - `moments` (`MomentSequence`) - moments the polynomials were built from
     - `indices` (`list`) - normal indices n_1 .. n_N
    '''

    def __init__(self, Pplus, Qplus, moments, indices):
        if len(Pplus) != len(Qplus):
            raise ValueError('P+ and Q+ lists differ in length')
        self.Pplus = list(Pplus)
        self.Qplus = list(Qplus)
        self.moments = moments
        self.indices = list(indices)


    @property
    def top(self):
        return len(self.Pplus) - 2


    def P(self, j):
        return self.Pplus[j + 1]


    def Q(self, j):
        return self.Qplus[j + 1]


    def entry_matrix(self, k):
        '''[[Q⁺_k, Q⁺_{k-1}], [P⁺_k, P⁺_{k-1}]] for odd k,
        [[Q⁺_{k-1}, Q⁺_k], [P⁺_{k-1}, P⁺_k]] for even k.'''
        if k % 2 == 1:
            return PolyMatrix2(self.Q(k), self.Q(k - 1), self.P(k), self.P(k - 1))
        return PolyMatrix2(self.Q(k - 1), self.Q(k), self.P(k - 1), self.P(k))


    def __eq__(self, other):
        if not isinstance(other, StieltjesPolySeq):
            return NotImplemented
        return self.Pplus == other.Pplus and self.Qplus == other.Qplus

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'StieltjesPolySeq(top=%d)' % self.top



class StringData(object):
    '''Masses m_j and lengths l_j of the Stieltjes string with its
    classification (:data:`.CLASSICAL`, :data:`.SIGNED` or
    :data:`.MULTIPOLE`).'''

    def __init__(self, masses, lengths, classification):
        self.masses = list(masses)
        self.lengths = list(lengths)
        self.classification = classification


    def __repr__(self):
        return 'StringData(%s, masses=%s, lengths=%s)' % (self.classification, self.masses, self.lengths)



def _moments_through_last_index(expansion, s = None):
    s = expansion.moments if s is None else as_moment_sequence(s)
    if expansion.parity == ODD:
        return s.extended(expansion.free_tail if expansion.free_tail is not None else Fraction(0))
    return s



def second_kind(s, P):
    '''Q(λ) = 𝔖_t((P(λ) - P(t))/(λ - t)), the moment functional applied to
    the divided difference coefficient by coefficient.'''
    s = as_moment_sequence(s)
    coefficients = [Fraction(0)] * max(P.degree, 1)
    for k in range(1, P.degree + 1):
        p = P.coefficient(k)
        for i in range(k):
            coefficients[i] += p * s[k - 1 - i]
    return Polynomial(coefficients)



def first_second_kind(s, n):
    '''Polynomials of the first and second kind at a normal index.

    :Parameters:
     - `s` (`MomentSequence`) - moments through s_{2n-1}
     - `n` (`integer`) - the normal index

    :returns: :class:`.OrthPolyPair`
    :raises: `NotNormalIndexException`, `InsufficientMomentsException`
    '''
    s = as_moment_sequence(s)
    P = bordered_polynomial(s, n)
    return OrthPolyPair(n, P, second_kind(s, P))



def orthogonal_pairs(expansion, s = None):
    '''Pairs at n_0 = 0, n_1, .. n_N. In the odd case the last pair uses
    s_{2n_N-1} = free_tail (0 when not given).'''
    s = _moments_through_last_index(expansion, s)
    return [OrthPolyPair(0, ONE, ZERO)] + [first_second_kind(s, n) for n in expansion.indices]



def pfraction_coeffs(expansion):
    '''P-fraction coefficients from the continued fraction data:

       b_0 = 1/d_1,                  a_0 = (z m_1 - 1/l_1)/d_1
       b_j = 1/(l_j² d_j d_{j+1}),    a_j = (z m_{j+1} - 1/l_j - 1/l_{j+1})/d_{j+1}

    with d_j the leading coefficient of m_j.

    :returns: :class:`.PFraction`
    :raises: `NotRegularException` if some l_j is not a constant
    '''
    for j, step in enumerate(expansion.steps, 1):
        if step.l is not None and not step.l.is_constant():
            raise NotRegularException(expansion.indices[j - 1], 'l_%d is not a constant' % j)

    d = [None] + [step.m.leading for step in expansion.steps]
    l = [None] + expansion.lengths()
    N = expansion.N

    b = [1 / d[1]]
    b.extend(1 / (l[j] ** 2 * d[j] * d[j + 1]) for j in range(1, min(N, len(l))))

    a = []
    if len(l) > 1:
        a.append((Z * expansion.steps[0].m - 1 / l[1]) * (1 / d[1]))
    for j in range(1, min(N, len(l) - 1)):
        a.append((Z * expansion.steps[j].m - (1 / l[j] + 1 / l[j + 1])) * (1 / d[j + 1]))

    for j, a_j in enumerate(a):
        width = expansion.indices[j] - (expansion.indices[j - 1] if j else 0)
        _expect(a_j.leading == 1 and a_j.degree == width, 'a_%d = %s is not monic of degree %d', j, a_j, width)
    return PFraction(b, a)



def pfraction_from_polynomials(pairs, s):
    '''P-fraction coefficients read off the polynomials of the first kind:
    b_0 = s_{n_1-1}, a_j is the quotient of P_{n_{j+1}} by P_{n_j} and
    -b_j the leading coefficient of the remainder.'''
    s = as_moment_sequence(s)
    P = [pair.P for pair in pairs]
    b = [s[pairs[1].index - 1]]
    a = [P[1]]
    for j in range(1, len(P) - 1):
        quotient, remainder = divmod(P[j + 1], P[j])
        a.append(quotient)
        b.append(-remainder.leading if not remainder.is_zero() else Fraction(0))
    return PFraction(b, a)



def three_term_residuals(pairs, pfraction):
    '''Residuals b_j y_{n_{j-1}} - a_j y_{n_j} + y_{n_{j+1}} for y = P and
    y = Q with P_{-1} = 0, Q_{-1} = -1; all vanish for a consistent pair
    list.

    :returns: `list` of (j, P residual, Q residual)
    '''
    P = [ZERO] + [pair.P for pair in pairs]
    Q = [-ONE] + [pair.Q for pair in pairs]
    residuals = []
    for j in range(min(len(pfraction.a), len(pfraction.b), len(pairs) - 1)):
        a_j, b_j = pfraction.a[j], pfraction.b[j]
        residuals.append((j, P[j] * b_j - a_j * P[j + 1] + P[j + 2], Q[j] * b_j - a_j * Q[j + 1] + Q[j + 2]))
    return residuals



def stieltjes_polys_recurrence(expansion):
    '''P⁺_{2i-1} = -z m_i P⁺_{2i-2} + P⁺_{2i-3}, P⁺_{2i} = l_i P⁺_{2i-1} + P⁺_{2i-2}
    and likewise for Q⁺, from P⁺_{-1} = 0, P⁺_0 = 1, Q⁺_{-1} = 1, Q⁺_0 = 0.

    :returns: :class:`.StieltjesPolySeq` up to 2N, or 2N-1 for an odd
              expansion without a closing length
    '''
    Pplus, Qplus = [ZERO, ONE], [ONE, ZERO]
    lengths = [step.l for step in expansion.steps if step.l is not None]
    if expansion.closing_l is not None:
        lengths.append(Polynomial.constant(expansion.closing_l))

    for i, step in enumerate(expansion.steps):
        zm = Z * step.m
        Pplus.append(-zm * Pplus[-1] + Pplus[-2])
        Qplus.append(-zm * Qplus[-1] + Qplus[-2])
        if i < len(lengths):
            Pplus.append(lengths[i] * Pplus[-1] + Pplus[-2])
            Qplus.append(lengths[i] * Qplus[-1] + Qplus[-2])
    return StieltjesPolySeq(Pplus, Qplus, _moments_through_last_index(expansion), expansion.indices)



def stieltjes_polys_determinant(s, expansion):
    '''Stieltjes polynomials from the moments:

       P⁺_{2i-1} = -(P_{n_i}(z) P_{n_{i-1}}(0) - P_{n_{i-1}}(z) P_{n_i}(0))/(b_0..b_{i-1})
       P⁺_{2i}   = P_{n_i}(z)/P_{n_i}(0)
       Q⁺_{2i-1} = (Q_{n_i}(z) P_{n_{i-1}}(0) - Q_{n_{i-1}}(z) P_{n_i}(0))/(b_0..b_{i-1})
       Q⁺_{2i}   = -Q_{n_i}(z)/P_{n_i}(0)

    The b_j are taken from :func:`.pfraction_from_polynomials`, so nothing
    but the normal indices is shared with the recurrence route. P⁺_{2N},
    Q⁺_{2N} of an odd problem are produced only for an explicit free tail.

    :raises: `NotRegularException` if P_{n_i}(0) = 0 where it is needed
    '''
    moments = _moments_through_last_index(expansion, s)
    pairs = orthogonal_pairs(expansion, s)
    b = pfraction_from_polynomials(pairs, moments).b
    N = len(pairs) - 1

    Pplus, Qplus = [ZERO, ONE], [ONE, ZERO]
    scale = Fraction(1)
    for i in range(1, N + 1):
        current, previous = pairs[i], pairs[i - 1]
        p0, q0 = current.P(0), previous.P(0)
        scale *= b[i - 1]
        Pplus.append((current.P * q0 - previous.P * p0) * (-1 / scale))
        Qplus.append((current.Q * q0 - previous.Q * p0) * (1 / scale))

        terminal_open = i == N and expansion.parity == ODD and expansion.free_tail is None
        if terminal_open:
            break
        if p0 == 0:
            if i == N and expansion.parity == ODD:
                break
            raise NotRegularException(current.index, 'P_%d(0) = 0' % current.index)
        Pplus.append(current.P * (1 / p0))
        Qplus.append(current.Q * (-1 / p0))
    return StieltjesPolySeq(Pplus, Qplus, moments, expansion.indices)



def difference_residuals(seq, expansion):
    '''Residuals of y_{2j} - y_{2j-2} - l_j y_{2j-1} and
    y_{2j+1} - y_{2j-1} + z m_{j+1} y_{2j} for y = P⁺ and y = Q⁺.

    :returns: `list` of (equation label, residual polynomial)
    '''
    lengths = [step.l for step in expansion.steps if step.l is not None]
    if expansion.closing_l is not None:
        lengths.append(Polynomial.constant(expansion.closing_l))

    residuals = []
    for name, y in (('P+', seq.P), ('Q+', seq.Q)):
        for k in range(1, seq.top + 1):
            if k % 2 == 1:
                step = expansion.steps[(k - 1) // 2]
                residuals.append(('%s[%d]' % (name, k), y(k) - y(k - 2) + Z * step.m * y(k - 1)))
            elif k // 2 <= len(lengths):
                residuals.append(('%s[%d]' % (name, k), y(k) - y(k - 2) - lengths[k // 2 - 1] * y(k - 1)))
    return residuals



def _factors(expansion, closing = False):
    lengths = [step.l for step in expansion.steps if step.l is not None]
    if closing and expansion.closing_l is not None:
        lengths.append(Polynomial.constant(expansion.closing_l))
    factors = []
    for i, step in enumerate(expansion.steps):
        factors.append(PolyMatrix2.m_factor(step.m))
        if i < len(lengths):
            factors.append(PolyMatrix2.l_factor(lengths[i]))
    return factors



def solution_matrix(expansion):
    '''W_{2N-1} = M_1 L_1 .. L_{N-1} M_N (odd) or W_{2N} = M_1 L_1 .. M_N L_N
    (even), cross-checked against the Stieltjes polynomial entry matrix and
    det W ≡ 1.

    :returns: :class:`.PolyMatrix2`
    :raises: `ConsistencyException`
    '''
    factors = _factors(expansion)
    product = reduce(lambda x, y: x * y, factors, PolyMatrix2.identity())
    seq = stieltjes_polys_determinant(expansion.moments, expansion)
    entries = seq.entry_matrix(len(factors))
    _expect(product == entries, 'factor product %r differs from Stieltjes polynomial form %r', product, entries)
    _expect(product.det() == ONE, 'det W = %s, expected 1', product.det())
    logger.info('solution matrix W_%d verified', len(factors))
    return product



def partial_solution_matrices(expansion):
    '''W_0 .. W_top as factor products, each checked against the entry
    matrices of both Stieltjes polynomial routes where defined.

    :returns: `list` of :class:`.PolyMatrix2`, W_0 = I first
    '''
    recurrence = stieltjes_polys_recurrence(expansion)
    determinant = stieltjes_polys_determinant(expansion.moments, expansion)
    matrices = [PolyMatrix2.identity()]
    for k, factor in enumerate(_factors(expansion, closing = True), 1):
        matrices.append(matrices[-1] * factor)
        W = matrices[-1]
        _expect(W == recurrence.entry_matrix(k), 'W_%d differs from the recurrence polynomials', k)
        if k <= determinant.top:
            _expect(W == determinant.entry_matrix(k), 'W_%d differs from the determinant polynomials', k)
        _expect(W.det() == ONE, 'det W_%d = %s, expected 1', k, W.det())
    _expect(matrices[0] == recurrence.entry_matrix(0), 'W_0 is not the identity')
    return matrices



def _matched_moment_count(seq, j):
    i = (j + 1) // 2
    count = 2 * seq.indices[i - 1] - (1 if j % 2 == 1 else 0)
    return min(count, len(seq.moments))



def convergent(seq, j):
    '''j-th convergent Q⁺_j/P⁺_j. Its expansion at infinity is checked to
    reproduce s_0 .. s_{2n_i-2} (j = 2i-1) or s_0 .. s_{2n_i-1} (j = 2i).

    :returns: :class:`.RationalFunction`
    :raises: `DegenerateParameterException` for P⁺_j ≡ 0
    '''
    if not 1 <= j <= seq.top:
        raise ValueError('convergent index %d outside 1..%d' % (j, seq.top))
    if seq.P(j).is_zero():
        raise DegenerateParameterException('P+_%d vanishes identically' % j)

    f = RationalFunction(seq.Q(j), seq.P(j))
    count = _matched_moment_count(seq, j)
    tail = laurent_expand_at_infinity(f, -count).moments(count)
    _expect(tail == list(seq.moments.values[:count]), 'convergent %d reproduces %s instead of the first %d moments', j, tail, count)
    return f



def zero_value_identities(s, expansion):
    '''Checks, for the indices where the data define both sides,

       P_{n_j}(0) = (-1)^j Π_{i≤j} 1/(d_i l_i)
       P_{n_j}(0)² = d_{j+1} Π_{i≤j} b_i
       P_{n_{j-1}}(0) P_{n_j}(0) = -(1/l_j) Π_{i<j} b_i

    :returns: `list` of dictionaries with keys ``j``, ``identity``, ``lhs``,
              ``rhs`` and ``passed``
    :raises: `ConsistencyException` naming the failing entries
    '''
    pairs = orthogonal_pairs(expansion, s)
    P0 = [pair.P(0) for pair in pairs]
    d = [None] + [step.m.leading for step in expansion.steps]
    l = [None] + expansion.lengths()
    b = pfraction_coeffs(expansion).b

    def product(values):
        return reduce(lambda x, y: x * y, values, Fraction(1))

    report = []
    def record(j, identity, lhs, rhs):
        report.append({'j': j, 'identity': identity, 'lhs': lhs, 'rhs': rhs, 'passed': lhs == rhs})

    record(0, 'P(0)', P0[0], Fraction(1))
    top = len(l) - 1
    if expansion.parity == ODD and expansion.free_tail is None:
        top = min(top, expansion.N - 1)
    for j in range(1, top + 1):
        record(j, 'P(0)', P0[j], (-1) ** j * product(1 / (d[i] * l[i]) for i in range(1, j + 1)))
        if j + 1 < len(d) and j < len(b):
            record(j, 'P(0)^2', P0[j] ** 2, d[j + 1] * product(b[:j + 1]))
        record(j, 'P(0)P(0)', P0[j - 1] * P0[j], -(1 / l[j]) * product(b[:j]))

    failed = [(entry['j'], entry['identity']) for entry in report if not entry['passed']]
    _expect(not failed, 'zero value identities failing: %s', failed)
    return report



def describe_solution(matrix, tau, expansion, **options):
    '''f = T_W[τ] = (w11 τ + w12)/(w21 τ + w22) for an admissible τ, with its
    expansion at infinity checked against s_0 .. s_ℓ.

    :Parameters:
     - `matrix` (`PolyMatrix2`) - solution matrix of `expansion`
     - `tau` (`RationalFunction` or :data:`.INFINITY`) - the parameter
     - `expansion` (`SchurExpansion`) - the solved problem
    :Options:
     - `verify_roundtrip` (`boolean`) - check the moments of f,
       **Default**: ``True``

    :returns: :class:`.RationalFunction`
    :raises: `InadmissibleParameterException`, `DegenerateParameterException`,
             `ConsistencyException`
    '''
    options = MetaData(**EXPANSION_OPTIONS.union_dict(**options))
    verdict = parameter_admissibility(tau, expansion)
    if not verdict.admissible:
        raise InadmissibleParameterException('tau = %s is not admissible: %s' % (tau, verdict.reason))

    f = lft_apply(matrix, tau)
    if options.verify_roundtrip:
        count = len(expansion.moments)
        tail = laurent_expand_at_infinity(f, -count)
        _expect(tail.polynomial_part().is_zero(), 'solution grows like %s at infinity', tail.polynomial_part())
        reproduced = tail.moments(count)
        _expect(reproduced == list(expansion.moments.values), 'solution reproduces %s instead of the moments', reproduced)
    return f



def string_data(expansion):
    '''Masses and lengths of the Stieltjes string of an expansion.

    :returns: :class:`.StringData`
    '''
    masses = [step.m for step in expansion.steps]
    lengths = [step.l for step in expansion.steps if step.l is not None]
    if expansion.closing_l is not None:
        lengths.append(Polynomial.constant(expansion.closing_l))

    if any(not p.is_constant() for p in masses + lengths):
        classification = MULTIPOLE
    elif all(p.coefficient(0) > 0 for p in masses + lengths):
        classification = CLASSICAL
    else:
        classification = SIGNED
    return StringData(masses, lengths, classification)
