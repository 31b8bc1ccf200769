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
The `stieltjes.sschur` module runs the Schur algorithm: the basic odd and
even steps and the full recursion over the normal indices of a regular
sequence, which yields the generalized S-fraction

   f(z) = 1/(-z m_1(z) + 1/(l_1 + 1/(-z m_2(z) + ... )))

together with the negative indices κ_N and k_N.
'''

import logging
from collections import namedtuple
from fractions import Fraction

from stieltjes import MetaData, EXPANSION_OPTIONS
from stieltjes.stype import ODD, EVEN, PARITIES, Infinity, RESIDUAL_ODD, RESIDUAL_EVEN, \
    SOLVABLE, NOT_SOLVABLE, NotBasicFormException, NotRegularException, DegenerateProblemException, \
    InsufficientMomentsException, InconsistentInputException, ConsistencyException
from stieltjes.salgebra import Polynomial, PolyMatrix2, RationalFunction, Z, poly_negative_index, sign
from stieltjes.shankel import MomentSequence, as_moment_sequence, hankel, inertia, normal_indices, \
    first_normal_index, solvability_indices
from stieltjes.stoeplitz import step_down_m, step_down_l, step_down_l_poly, explicit_l, explicit_l_poly, \
    verify_step_down_m, verify_step_down_l


logger = logging.getLogger(__name__)



class SchurStep(object):
    '''One level (m_j, l_j) of the continued fraction with its negative
    indices. `l` is ``None`` for the terminal step of an odd problem.'''

    def __init__(self, m, l = None):
        self.m = m
        self.l = l
        self.kappa_zm = poly_negative_index(Z * m)
        self.kappa_m = poly_negative_index(m)
        self.kappa_zl = None if l is None else poly_negative_index(Z * l)
        self.kappa_l = None if l is None else poly_negative_index(l)


    @property
    def l_value(self):
        '''l_j as a rational when it is a constant, else ``None``.'''
        if self.l is None or not self.l.is_constant():
            return None
        return self.l.coefficient(0)


    def __eq__(self, other):
        if not isinstance(other, SchurStep):
            return NotImplemented
        return self.m == other.m and self.l == other.l

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.m, self.l))

    def __repr__(self):
        return 'SchurStep(m=%s, l=%s)' % (self.m, self.l)



class SchurExpansion(object):
    '''Result of :func:`.schur_expand`.

    :Attributes:
     - `moments` - the input sequence
     - `steps` - list of :class:`.SchurStep`, the last one without l for odd
       problems
     - `parity` - :data:`.ODD` or :data:`.EVEN`
     - `kappa_N`, `k_N` - accumulated negative indices
     - `intermediate_sequences` - s^(1), .., the nonempty stepped sequences
     - `report` - :class:`.NormalIndexReport` of the input
     - `free_tail` - explicitly supplied s_{2n_N-1} of an odd problem, or ``None``
     - `closing_l` - l_N implied by `free_tail`, or ``None``
    '''

    def __init__(self, moments, steps, parity, kappa_N, k_N, intermediate_sequences, report,
                 free_tail = None, closing_l = None):
        self.moments = moments
        self.steps = list(steps)
        self.parity = parity
        self.kappa_N = kappa_N
        self.k_N = k_N
        self.intermediate_sequences = list(intermediate_sequences)
        self.report = report
        self.free_tail = free_tail
        self.closing_l = closing_l


    @property
    def N(self):
        return len(self.steps)


    @property
    def terminal_has_l(self):
        return self.parity == EVEN


    @property
    def indices(self):
        return self.report.indices


    def lengths(self, closing = True):
        '''Constant lengths l_1, .. (with the closing l_N of an odd problem
        when known and requested).'''
        values = [step.l_value for step in self.steps if step.l is not None]
        if closing and self.closing_l is not None:
            values.append(self.closing_l)
        return values


    def __repr__(self):
        return 'SchurExpansion(parity=%s, steps=%r, kappa_N=%d, k_N=%d)' % (self.parity, self.steps, self.kappa_N, self.k_N)



BasicStep = namedtuple('BasicStep', 'matrix step residual')



class Verdict(object):
    '''Solvability verdict with the indices it is based on.'''

    def __init__(self, kappa_N, k_N, kappa, k):
        self.kappa_N = kappa_N
        self.k_N = k_N
        self.kappa = kappa
        self.k = k


    @property
    def solvable(self):
        return self.kappa_N <= self.kappa and self.k_N <= self.k


    @property
    def verdict(self):
        return SOLVABLE if self.solvable else NOT_SOLVABLE


    def as_dict(self):
        return {'verdict': self.verdict, 'kappa_N': self.kappa_N, 'k_N': self.k_N, 'kappa': self.kappa, 'k': self.k}


    def __repr__(self):
        return 'Verdict(%s, kappa_N=%d, k_N=%d)' % (self.verdict, self.kappa_N, self.k_N)



Admissibility = namedtuple('Admissibility', 'admissible reason')



def _expect(condition, message, *args):
    if not condition:
        raise ConsistencyException(message % args)



def closed_form_kappa(nu, lead_sign):
    '''κ_1 of a basic odd problem from ν_1 and the sign of s_{ν_1-1}.'''
    if nu % 2 == 1 and lead_sign < 0:
        return (nu + 1) // 2
    return nu // 2



def closed_form_k(nu, lead_sign):
    '''k_1 of a basic odd problem from ν_1 and the sign of s_{ν_1-1}.'''
    if nu % 2 == 0 and lead_sign < 0:
        return nu // 2
    return (nu - 1) // 2



def basic_odd_step(s, free_tail = None):
    '''Basic odd problem: 𝒩(s) = {ν_1} and ℓ = 2ν_1 - 2.

    :returns: :class:`BasicStep` with M_1 = [[1, 0], [-z m_1, 1]] and a step
              without l
    :raises: `NotBasicFormException`
    '''
    s = as_moment_sequence(s)
    report = normal_indices(s)
    nu = report.indices[0]
    if report.indices != [nu] or s.ell != 2 * nu - 2:
        raise NotBasicFormException('basic odd form needs a single normal index %d and %d moments' % (nu, 2 * nu - 1))

    result = step_down_m(s, nu, free_tail)
    step = SchurStep(result.m)
    lead_sign = sign(result.b)
    kappa, k = closed_form_kappa(nu, lead_sign), closed_form_k(nu, lead_sign)
    _expect(step.kappa_zm == kappa and step.kappa_m == k,
            'closed form indices (%d, %d) differ from polynomial ones (%d, %d)', kappa, k, step.kappa_zm, step.kappa_m)
    _expect(k == kappa - (1 if (nu % 2 == 1) == (lead_sign < 0) else 0), 'k_1 and kappa_1 are not related as expected')
    _expect((kappa, k) == solvability_indices(s, ODD), 'indices (%d, %d) differ from Hankel inertia', kappa, k)

    return BasicStep(PolyMatrix2.m_factor(result.m), step, RESIDUAL_ODD)



def basic_even_step(s):
    '''Basic even problem: ℓ = 2μ_1 - 1.

    l_1 is a constant when ν_1 = μ_1 and a polynomial of degree μ_1 - ν_1
    otherwise.

    :returns: :class:`BasicStep` with W_2 = M_1 L_1
    :raises: `NotBasicFormException`
    '''
    s = as_moment_sequence(s)
    report = normal_indices(s)
    if not report.mu_subset or s.ell != 2 * report.mu_subset[0] - 1:
        raise NotBasicFormException('basic even form needs exactly 2*mu_1 moments')
    mu = report.mu_subset[0]
    nu = first_normal_index(s)

    result = step_down_m(s, nu)
    if nu == mu:
        value, _ = step_down_l(result.frak_s)
        _expect(value == explicit_l(s, nu), 'l_1 = %s differs from its determinant form', value)
        l = Polynomial.constant(value)
    else:
        l, _ = step_down_l_poly(result.frak_s)
        _expect(l == explicit_l_poly(result.frak_s), 'l_1 = %s differs from its determinant form', l)
    _expect(l.degree == mu - nu, 'deg l_1 = %s, expected %d', l.degree, mu - nu)

    step = SchurStep(result.m, l)
    kappa = step.kappa_zm + step.kappa_l
    k = step.kappa_m + step.kappa_zl
    _expect((kappa, k) == (inertia(hankel(s, mu)).nu_minus, inertia(hankel(s, mu, 1)).nu_minus),
            'basic even indices (%d, %d) differ from Hankel inertia', kappa, k)

    return BasicStep(PolyMatrix2.m_factor(result.m) * PolyMatrix2.l_factor(l), step, RESIDUAL_EVEN)



def _resolve_parity(s, last, parity):
    natural = {2 * last - 1: EVEN, 2 * last - 2: ODD}.get(s.ell)
    if parity == EVEN and s.ell == 2 * last - 2:
        raise InsufficientMomentsException(2 * last - 1)
    if natural is None:
        raise DegenerateProblemException(last + 1, 'moments extend past the last normal index %d' % last)
    return natural



def resolve_problem(s, parity = None, free_tail = None):
    '''Fixes the parity of a moment problem.

    Without an explicit parity it follows from ℓ: odd for ℓ = 2n_N - 2, even
    for ℓ = 2n_N - 1. An odd problem given 2n_N moments reads the last one as
    its unconstrained s_{2n_N-1}.

    :returns: `tuple` (moments, parity, free_tail, :class:`.NormalIndexReport`)
    :raises: `InconsistentInputException`, `InsufficientMomentsException`,
             `DegenerateProblemException`, `NoNormalIndexException`
    '''
    if parity is not None and parity not in PARITIES:
        raise InconsistentInputException('unknown parity: %r' % (parity, ))
    s = as_moment_sequence(s)
    free_tail = None if free_tail is None else Fraction(free_tail)
    report = normal_indices(s)
    last = report.indices[-1]

    if parity == ODD and s.ell == 2 * last - 1:
        tail = s[s.ell]
        if free_tail is not None and free_tail != tail:
            raise InconsistentInputException('free tail %s contradicts s_%d = %s' % (free_tail, s.ell, tail))
        s = MomentSequence(s.values[:-1])
        return s, ODD, tail, normal_indices(s)

    parity = _resolve_parity(s, last, parity)
    if parity == EVEN and free_tail is not None:
        raise InconsistentInputException('a free tail applies to odd problems only')
    return s, parity, free_tail, report



def _closing_length(extended, indices):
    '''l_N of an odd problem whose missing s_{2n_N-1} has been appended:
    the extended data are stepped down through every normal index and the
    last 𝔰₋₁ is inverted. ``None`` when that 𝔰₋₁ vanishes.'''
    current, previous = extended, 0
    for n in indices[:-1]:
        result = step_down_m(current, n - previous)
        _, following = step_down_l(result.frak_s)
        current, previous = MomentSequence(following), n
    closing = step_down_m(current, indices[-1] - previous).frak_s[0]
    logger.debug('closing 𝔰₋₁ = %s', closing)
    return None if closing == 0 else 1 / closing



def schur_expand(s, parity = None, **options):
    '''Runs the Schur algorithm on a regular sequence.

    :Parameters:
     - `s` (`MomentSequence`) - moments s_0 .. s_ℓ
     - `parity` (:data:`.ODD`, :data:`.EVEN` or ``None``) - inferred from ℓ
       when omitted
    :Options:
     - `free_tail` (`Fraction`) - the unconstrained s_{2n_N-1} of an odd problem,
       fixes the closing length l_N,
       **Default**: ``None`` (l_N left open)
     - `verify_inertia` (`boolean`) - check the step-down inertia relations,
       **Default**: ``True``

    :returns: :class:`.SchurExpansion`
    :raises: `NotRegularException`, `DegenerateProblemException`,
             `InsufficientMomentsException`, `NoNormalIndexException`,
             `ConsistencyException`
    '''
    options = MetaData(**EXPANSION_OPTIONS.union_dict(**options))
    s, parity, free_tail, report = resolve_problem(s, parity, options.free_tail)
    last = report.indices[-1]
    if not report.regular:
        raise NotRegularException(report.first_irregular)

    steps, intermediates = [], []
    closing_l = None
    current, previous = s, 0

    for j, n in enumerate(report.indices, 1):
        nu = first_normal_index(current)
        _expect(nu == n - previous, 'step %d: first normal index %d, expected %d', j, nu, n - previous)

        terminal_odd = current.ell == 2 * nu - 2
        result = step_down_m(current, nu)
        if options.verify_inertia:
            verify_step_down_m(current, result, [m - previous for m in report.indices if m > previous])

        if terminal_odd:
            _expect(j == len(report.indices), 'odd termination at step %d of %d', j, len(report.indices))
            steps.append(SchurStep(result.m))
            if free_tail is not None:
                closing_l = _closing_length(s.extended(free_tail), report.indices)
            break

        if result.frak_s[0] == 0:
            raise NotRegularException(n)
        l, following = step_down_l(result.frak_s)
        if options.verify_inertia:
            verify_step_down_l(result.frak_s, following)
        steps.append(SchurStep(result.m, Polynomial.constant(l)))
        logger.debug('step %d at normal index %d: m=%s, l=%s', j, n, result.m, l)

        previous = n
        if not following:
            _expect(j == len(report.indices), 'even termination at step %d of %d', j, len(report.indices))
            break
        current = MomentSequence(following)
        intermediates.append(current)

    kappa_N = sum(step.kappa_zm for step in steps)
    k_N = sum(step.kappa_m for step in steps) + sum(step.kappa_zl for step in steps if step.l is not None)
    _expect(sum((Z * step.m).degree for step in steps) == last, 'degrees of z*m_j do not add up to %d', last)
    expected = solvability_indices(s, parity, last)
    _expect((kappa_N, k_N) == expected, 'step indices (%d, %d) differ from Hankel inertia %s', kappa_N, k_N, expected)

    logger.info('expanded %d moments into %d steps (%s), kappa_N=%d, k_N=%d', s.ell + 1, len(steps), parity, kappa_N, k_N)
    return SchurExpansion(s, steps, parity, kappa_N, k_N, intermediates, report, free_tail, closing_l)



def index_profile(expansion):
    '''(n_j, ν₋(S_{n_j}), ν₋(S⁺_{n_j})) per normal index; the last entry
    is ``None`` where S⁺_{n_j} is not determined by the data.'''
    s = expansion.moments
    profile = []
    for n in expansion.indices:
        plus = inertia(hankel(s, n, 1)).nu_minus if 2 * n - 1 <= s.ell else None
        profile.append((n, inertia(hankel(s, n)).nu_minus, plus))
    return profile



def monotone_bounds(expansion):
    '''Checks that ν₋(S_{n_j}) and ν₋(S⁺_{n_j}) do not decrease along the
    normal indices.

    :returns: the profile of :func:`index_profile`
    :raises: `ConsistencyException`
    '''
    profile = index_profile(expansion)
    for (n, nu, plus), (n_next, nu_next, plus_next) in zip(profile, profile[1:]):
        if nu_next < nu:
            raise ConsistencyException('nu_-(S_%d) = %d < nu_-(S_%d) = %d' % (n_next, nu_next, n, nu))
        if plus is not None and plus_next is not None and plus_next < plus:
            raise ConsistencyException('nu_-(S+_%d) = %d < nu_-(S+_%d) = %d' % (n_next, plus_next, n, plus))
    return profile



def check_solvable(s, kappa, k, parity = None, **options):
    '''Solvable iff κ_N ≤ κ and k_N ≤ k.

    :returns: :class:`.Verdict`
    '''
    expansion = schur_expand(s, parity, **options)
    return Verdict(expansion.kappa_N, expansion.k_N, kappa, k)



def parameter_admissibility(tau, expansion):
    '''Checks the asymptotic side condition on τ: 1/τ = o(z) for odd problems,
    τ = o(1) for even ones. Class membership of τ is not examined.

    :Parameters:
     - `tau` (`RationalFunction` or :data:`.INFINITY`) - the parameter
     - `expansion` (`SchurExpansion` or parity) - the problem

    :returns: :class:`Admissibility`
    '''
    parity = expansion.parity if isinstance(expansion, SchurExpansion) else expansion
    if isinstance(tau, Infinity):
        if parity == ODD:
            return Admissibility(True, '1/tau = 0')
        return Admissibility(False, 'tau = inf is not o(1)')

    if not isinstance(tau, RationalFunction):
        tau = RationalFunction(tau)
    if parity == ODD:
        if tau.is_zero():
            return Admissibility(False, '1/tau is undefined for tau = 0')
        if tau.den.degree <= tau.num.degree:
            return Admissibility(True, '1/tau is bounded at infinity')
        return Admissibility(False, '1/tau grows like z^%d' % (tau.den.degree - tau.num.degree))

    if tau.is_zero() or tau.num.degree < tau.den.degree:
        return Admissibility(True, 'tau = o(1)')
    return Admissibility(False, 'tau does not vanish at infinity')
