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

from fractions import Fraction

from stieltjes.sproblem import MomentProblem
from stieltjes.utils import measure_moments
from stieltjes.spolynomials import convergent


if __name__ == '__main__':
    # three point masses on the positive half line
    measure = [(Fraction(1, 2), 1), (Fraction(1, 3), 2), (Fraction(1, 6), 5)]
    s = measure_moments(measure, 6)
    print('moments: %s' % ', '.join(str(v) for v in s))

    problem = MomentProblem(s)
    report = problem.analyze()
    print('normal indices: %s, kappa_N: %d, k_N: %d' % (report['normal_indices'].indices, report['kappa_N'], report['k_N']))

    # classical data give positive constant masses and lengths
    for j, step in enumerate(problem.expansion.steps, 1):
        print('m_%d = %s, l_%d = %s' % (j, step.m, j, step.l))

    report = problem.expand()
    print('string: %s' % report['string'])
    print('W = %r' % report['matrix'])

    # the top convergent matches every moment
    print('convergent: %s' % convergent(report['polynomials'], report['polynomials'].top))
    print('canonical solution: %s' % problem.solve(0)['solution'])
