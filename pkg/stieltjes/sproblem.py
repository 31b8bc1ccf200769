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
The `stieltjes.sproblem` module bundles the computational modules behind a
single :class:`.MomentProblem` object whose methods produce the reports
emitted by the command line front end.

Reports are plain dictionaries of library objects; :class:`.SWriter` turns
them into JSON.
'''

import logging

from stieltjes import MetaData, EXPANSION_OPTIONS
from stieltjes.stype import ODD, EVEN, INFINITY, ConsistencyException
from stieltjes.salgebra import ZERO, laurent_expand_at_infinity
from stieltjes.shankel import as_moment_sequence, hankel, inertia
from stieltjes.sschur import Verdict, resolve_problem, schur_expand, monotone_bounds, parameter_admissibility
from stieltjes.spolynomials import orthogonal_pairs, pfraction_coeffs, pfraction_from_polynomials, \
    three_term_residuals, stieltjes_polys_recurrence, stieltjes_polys_determinant, difference_residuals, \
    partial_solution_matrices, solution_matrix, zero_value_identities, describe_solution, string_data
from stieltjes.sreader import SReaderException


logger = logging.getLogger(__name__)



def _expect(condition, message, *args):
    if not condition:
        raise ConsistencyException(message % args)



class MomentProblem(object):
    '''
    A truncated moment problem with its solvability bounds.

    :Parameters:
     - `moments` (`MomentSequence` or `list`) - s_0 .. s_ℓ
     - `parity` (`string` or `None`) - ``odd``, ``even`` or inferred
     - `kappa` (`integer`) - bound on negative squares, **Default**: 0
     - `k` (`integer`) - bound for the shifted block, **Default**: 0
    :Options:
     - `free_tail` (`Fraction`) - s_{2n_N-1} of an odd problem
     - `verify_inertia` (`boolean`) - check step-down inertia relations
     - `verify_roundtrip` (`boolean`) - check moments of computed solutions
    '''

    def __init__(self, moments, parity = None, kappa = None, k = None, **options):
        self.moments = as_moment_sequence(moments)
        self.parity = parity
        self.kappa = 0 if kappa is None else kappa
        self.k = 0 if k is None else k
        self._options = MetaData(**EXPANSION_OPTIONS.union_dict(**options))
        self._expansion = None


    @classmethod
    def from_input(cls, problem, **options):
        '''Creates a problem from a parsed :class:`.ProblemInput`.'''
        if problem.free_tail is not None:
            options['free_tail'] = problem.free_tail
        return cls(problem.moments, problem.parity, problem.kappa, problem.k, **options)


    @property
    def expansion(self):
        '''The :class:`.SchurExpansion`, computed on first access.'''
        if self._expansion is None:
            self._expansion = schur_expand(self.moments, self.parity, **self._options.as_dict())
        return self._expansion


    def inertia_table(self, moments = None):
        '''Inertia of S_n and S⁺_n for every order the data determine.'''
        s = self.moments if moments is None else moments
        rows = []
        for n in range(1, s.ell // 2 + 2):
            plus = inertia(hankel(s, n, 1)) if 2 * n - 1 <= s.ell else None
            rows.append({'order': n, 'S': inertia(hankel(s, n)), 'S+': plus})
        return rows


    def analyze(self):
        '''Normal indices, regularity, inertia tables and the solvability
        verdict. A non-regular sequence is reported, not rejected.'''
        s, parity, free_tail, report = resolve_problem(self.moments, self.parity, self._options.free_tail)
        last = report.indices[-1]
        plus_order = last - 1 if parity == ODD else last
        verdict = Verdict(inertia(hankel(s, last)).nu_minus, inertia(hankel(s, plus_order, 1)).nu_minus,
                          self.kappa, self.k)
        logger.info('analyzed %d moments: %r, %r', len(s), report, verdict)
        return {'moments': s,
                'parity': parity,
                'free_tail': free_tail,
                'normal_indices': report,
                'regular': report.regular,
                'inertia': self.inertia_table(s),
                'kappa_N': verdict.kappa_N,
                'k_N': verdict.k_N,
                'solvability': verdict}


    def _verification(self, matrix):
        expansion = self.expansion
        tau = ZERO if expansion.parity == EVEN else INFINITY
        f = describe_solution(matrix, tau, expansion, verify_roundtrip = False)
        count = len(expansion.moments)
        reproduced = laurent_expand_at_infinity(f, -count).moments(count)
        expected = list(expansion.moments.values)
        return {'expected_moments': expected, 'reproduced_moments': reproduced, 'match': reproduced == expected}


    def expand(self):
        '''Continued fraction, P-fraction, Stieltjes polynomials and solution
        matrix, after the factorization, recurrence and round trip checks.'''
        expansion = self.expansion
        partial_solution_matrices(expansion)
        matrix = solution_matrix(expansion)

        pairs = orthogonal_pairs(expansion)
        pfraction = pfraction_coeffs(expansion)
        for j, p_residual, q_residual in three_term_residuals(pairs, pfraction):
            _expect(p_residual.is_zero() and q_residual.is_zero(), 'three-term relation %d fails', j)
        from_polynomials = pfraction_from_polynomials(pairs, expansion.moments)
        _expect(from_polynomials.b[:len(pfraction.b)] == pfraction.b, 'b_j differ between the two routes')
        _expect(from_polynomials.a[:len(pfraction.a)] == pfraction.a, 'a_j differ between the two routes')

        polynomials = stieltjes_polys_recurrence(expansion)
        for label, residual in difference_residuals(stieltjes_polys_determinant(expansion.moments, expansion), expansion):
            _expect(residual.is_zero(), 'difference system residual %s = %s', label, residual)
        zero_value_identities(expansion.moments, expansion)

        verification = self._verification(matrix)
        _expect(verification['match'], 'solution matrix does not reproduce the moments')
        return {'parity': expansion.parity,
                'normal_indices': expansion.report,
                'steps': expansion.steps,
                'free_tail': expansion.free_tail,
                'closing_l': expansion.closing_l,
                'kappa_N': expansion.kappa_N,
                'k_N': expansion.k_N,
                'solvability': Verdict(expansion.kappa_N, expansion.k_N, self.kappa, self.k),
                'index_profile': monotone_bounds(expansion),
                'pfraction': pfraction,
                'polynomials': polynomials,
                'matrix': matrix,
                'string': string_data(expansion).classification,
                'verification': verification}


    def solve(self, tau):
        '''The solution f = T_W[τ] for an admissible τ.'''
        if tau is None:
            raise SReaderException('tau', 'a parameter is required')
        expansion = self.expansion
        matrix = solution_matrix(expansion)
        f = describe_solution(matrix, tau, expansion, **self._options.as_dict())
        count = len(expansion.moments)
        reproduced = laurent_expand_at_infinity(f, -count).moments(count)
        return {'parity': expansion.parity,
                'tau': tau,
                'admissibility': parameter_admissibility(tau, expansion),
                'solution': f,
                'verification': {'expected_moments': list(expansion.moments.values),
                                 'reproduced_moments': reproduced,
                                 'match': reproduced == list(expansion.moments.values)}}


    def string(self):
        '''Masses and lengths of the associated Stieltjes string.'''
        return {'parity': self.expansion.parity, 'string': string_data(self.expansion)}
