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

from stieltjes.stype import INFINITY, SException
from stieltjes.salgebra import RationalFunction, Z
from stieltjes.sproblem import MomentProblem


if __name__ == '__main__':
    # a sign changing sequence: not solvable without negative squares
    problem = MomentProblem([-1, 1])
    print('kappa_N = %d: %s' % (problem.analyze()['kappa_N'], problem.analyze()['solvability'].verdict))
    print('with kappa = 1: %s' % MomentProblem([-1, 1], kappa = 1).analyze()['solvability'].verdict)

    # s_0 = 0: the first mass is the polynomial m_1 = z
    problem = MomentProblem([0, 1, 0, 1], kappa = 1)
    report = problem.expand()
    print('masses: %s, string: %s' % ([str(step.m) for step in report['steps']], report['string']))
    print('P-fraction: %r' % report['pfraction'])

    for tau in (RationalFunction(0), RationalFunction(1, Z), INFINITY):
        try:
            print('tau = %s: f = %s' % (tau, problem.solve(tau)['solution']))
        except SException as e:
            print('tau = %s rejected: %s' % (tau, e))

    # odd problem whose free moment s_3 fixes the closing length
    for tail in (5, 6):
        print('s_3 = %d: l_2 = %s' % (tail, MomentProblem([1, 1, 2], free_tail = tail).expansion.closing_l))
