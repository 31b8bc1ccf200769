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
Invariant suites run by ``stieltjes selftest``. Each suite draws its cases
from a seeded :class:`random.Random`, so a run is reproducible, and reports
its first failing case: a :class:`.ProblemInput` that can be fed back to the
command line, the symmetric matrix of the inertia suite or the coefficient
list of the Toeplitz suite.
'''

import logging
import random
from collections import namedtuple
from fractions import Fraction

import numpy

from stieltjes.stype import ODD, EVEN, SException
from stieltjes.salgebra import Polynomial, PolyMatrix2, ZERO, laurent_expand_at_infinity, lft_apply
from stieltjes.shankel import MomentSequence, inertia, sturm_inertia
from stieltjes.stoeplitz import ToeplitzVector, toeplitz_reciprocal, step_down_m, explicit_frak_s
from stieltjes.sschur import schur_expand, basic_odd_step, closed_form_kappa, closed_form_k
from stieltjes.spolynomials import orthogonal_pairs, pfraction_coeffs, three_term_residuals, \
    partial_solution_matrices, solution_matrix, zero_value_identities, stieltjes_polys_recurrence, convergent
from stieltjes.sreader import ProblemInput
from stieltjes.utils import random_rational, random_expansion_data, synthesize_moments, \
    random_symmetric_matrix, random_discrete_measure, measure_moments, random_basic_form


logger = logging.getLogger(__name__)


SuiteResult = namedtuple('SuiteResult', 'name cases failures counterexample')

DEFAULT_COUNTS = {'roundtrip': 500, 'inertia': 300, 'toeplitz': 200, 'step-down': 200, 'classical': 50}

# every n-th round trip case also runs the inertia, zero value and three-term checks
DEEP_CHECK_EVERY = 5



class SelfTestFailure(Exception):
    pass



def _check(condition, message):
    if not condition:
        raise SelfTestFailure(message)



def _run_cases(name, cases):
    '''Runs (problem, check) pairs and keeps the first failing problem.'''
    total, failures, counterexample = 0, 0, None
    for problem, check in cases:
        total += 1
        try:
            check()
        except (SelfTestFailure, SException) as e:
            failures += 1
            logger.warning('%s suite failed on %r: %s', name, problem, e)
            if counterexample is None:
                counterexample = problem
    return SuiteResult(name, total, failures, counterexample)



def roundtrip_suite(rng, count, bound = 100, inject_fault = False, deep_every = DEEP_CHECK_EVERY):
    '''Continued fraction data → moments → Schur expansion → the same data.

    Every case checks the factorization of the solution matrix; every
    `deep_every`-th case also verifies the step-down inertia relations, the
    zero value identities and the three-term relations.'''
    def cases():
        for i in range(count):
            masses, lengths, parity = random_expansion_data(rng, bound = bound)
            s = synthesize_moments(masses, lengths, parity)
            if inject_fault:
                s = MomentSequence(s.values[:-1] + (s.values[-1] + 1, ))

            def check(s = s, masses = masses, lengths = lengths, parity = parity, deep = i % deep_every == 0):
                expansion = schur_expand(s, parity, verify_inertia = deep)
                _check([step.m for step in expansion.steps] == masses, 'masses differ')
                _check(expansion.lengths() == lengths, 'lengths differ')
                partial_solution_matrices(expansion)
                if not deep:
                    return
                zero_value_identities(s, expansion)
                residuals = three_term_residuals(orthogonal_pairs(expansion), pfraction_coeffs(expansion))
                _check(all(p.is_zero() and q.is_zero() for _, p, q in residuals), 'three-term relation')
            yield ProblemInput(s, parity), check
    return _run_cases('roundtrip', cases())



def inertia_suite(rng, count):
    '''Congruence inertia against Sturm counts of the characteristic
    polynomial.'''
    def cases():
        for _ in range(count):
            order = rng.randint(1, 6)
            rank = rng.choice((None, rng.randint(0, order)))
            matrix = random_symmetric_matrix(rng, order, rank = rank)

            def check(matrix = matrix):
                _check(inertia(matrix) == sturm_inertia(matrix), 'inertia of %s' % matrix.tolist())
            yield matrix, check
    return _run_cases('inertia', cases())



def toeplitz_suite(rng, count):
    '''T(c)·T(d) = I by explicit multiplication, and d ↦ c again.'''
    def cases():
        for _ in range(count):
            c = [random_rational(rng, nonzero = True)] + [random_rational(rng) for _ in range(rng.randint(0, 8))]

            def check(c = c):
                d = toeplitz_reciprocal(c)
                product = ToeplitzVector(c).matrix().dot(d.matrix())
                _check((product == numpy.identity(len(c), dtype = object)).all(), 'T(c)T(d) != I for %s' % c)
                _check(toeplitz_reciprocal(d) == ToeplitzVector(c), 'reciprocal is not an involution for %s' % c)
            yield c, check
    return _run_cases('toeplitz', cases())



def step_down_suite(rng, count):
    '''The stepped-down sequence 𝔰 of a basic form sequence from the Toeplitz
    inversion against its closed determinant formulas.'''
    def cases():
        for _ in range(count):
            s, nu = random_basic_form(rng)

            def check(s = s, nu = nu):
                _check(step_down_m(s, nu).frak_s == explicit_frak_s(s, nu), 'stepped-down moments for nu=%d' % nu)
            yield ProblemInput(s), check
    return _run_cases('step-down', cases())



def classical_suite(rng, count):
    '''Positive discrete measures give positive constant masses and lengths,
    zero indices and a top convergent matching every moment.'''
    def cases():
        for _ in range(count):
            measure = random_discrete_measure(rng, rng.randint(1, 4))
            s = measure_moments(measure, 2 * len(measure))

            def check(s = s, atoms = len(measure)):
                expansion = schur_expand(s, EVEN)
                _check(expansion.N == atoms, 'expected %d steps' % atoms)
                _check(all(step.m.is_constant() and step.m.coefficient(0) > 0 for step in expansion.steps), 'masses')
                _check(all(l > 0 for l in expansion.lengths()), 'lengths')
                _check((expansion.kappa_N, expansion.k_N) == (0, 0), 'indices')
                convergent(stieltjes_polys_recurrence(expansion), 2 * expansion.N)
            yield ProblemInput(s, EVEN), check
    return _run_cases('classical', cases())



def closed_form_suite():
    '''Basic odd step indices from the closed forms against the polynomial
    ones, for ν_1 = 1..6 and both signs of s_{ν_1-1}.'''
    def cases():
        for nu in range(1, 7):
            for lead in (1, -1):
                s = MomentSequence([0] * (nu - 1) + [lead] + [0] * (nu - 1))

                def check(s = s, nu = nu, lead = lead):
                    step = basic_odd_step(s).step
                    _check((step.kappa_zm, step.kappa_m) == (closed_form_kappa(nu, lead), closed_form_k(nu, lead)),
                           'closed forms for nu=%d, sign=%d' % (nu, lead))
                yield ProblemInput(s, ODD), check
    return _run_cases('closed-forms', cases())



def named_example_suite():
    '''Unit point mass: m_1 = l_1 = 1, W_2 = [[1, 1], [-z, 1 - z]] and
    f = 1/(1 - z).'''
    s = MomentSequence([1, 1])

    def check():
        expansion = schur_expand(s)
        _check(expansion.steps[0].m == Polynomial.constant(1) and expansion.lengths() == [1], 'steps')
        W = solution_matrix(expansion)
        _check(W == PolyMatrix2(1, 1, Polynomial([0, -1]), Polynomial([1, -1])), 'W_2 = %r' % W)
        f = lft_apply(W, ZERO)
        _check(laurent_expand_at_infinity(f, -6).moments(6) == [Fraction(1)] * 6, 'tail of 1/(1-z)')
    return _run_cases('named-example', [(ProblemInput(s, EVEN), check)])



def run_selftest(seed = 0, count = None, inject_fault = False):
    '''Runs every suite.

    :Parameters:
     - `seed` (`integer`) - seed of the random corpora
     - `count` (`integer` or `None`) - cases per random suite, suite
       defaults when ``None``
     - `inject_fault` (`boolean`) - perturb the round trip corpus so that
       the harness must report a counterexample

    :returns: `dictionary` with ``status``, per suite results, the first
              counterexample and the suite it came from
    '''
    def size(name):
        return DEFAULT_COUNTS[name] if count is None else count

    rng = random.Random(seed)
    results = [roundtrip_suite(rng, size('roundtrip'), inject_fault = inject_fault),
               inertia_suite(rng, size('inertia')),
               toeplitz_suite(rng, size('toeplitz')),
               step_down_suite(rng, size('step-down')),
               classical_suite(rng, size('classical')),
               closed_form_suite(),
               named_example_suite()]

    failing = next((r for r in results if r.failures and r.counterexample is not None), None)
    passed = all(r.failures == 0 for r in results)
    return {'status': 'all suites pass' if passed else 'failures',
            'seed': seed,
            'suites': [{'name': r.name, 'cases': r.cases, 'failures': r.failures} for r in results],
            'counterexample': None if failing is None else failing.counterexample,
            'counterexample_suite': None if failing is None else failing.name}
