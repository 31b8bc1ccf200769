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
Random problem generators shared by the self test and the test suite. Every
generator draws from an explicit :class:`random.Random` so corpora replay
from a seed.
'''

from fractions import Fraction
from functools import reduce

from stieltjes.stype import ODD, EVEN, INFINITY
from stieltjes.salgebra import Polynomial, PolyMatrix2, ZERO, lft_apply, laurent_expand_at_infinity
from stieltjes.shankel import MomentSequence, symmetric_matrix



def random_rational(rng, bound = 100, nonzero = False):
    '''p/q with |p| ≤ bound and 1 ≤ q ≤ bound.'''
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value != 0 or not nonzero:
            return value



def random_polynomial(rng, degree, bound = 100):
    '''Polynomial of exact degree `degree`.'''
    coefficients = [random_rational(rng, bound) for _ in range(degree)]
    coefficients.append(random_rational(rng, bound, nonzero = True))
    return Polynomial(coefficients)



def random_expansion_data(rng, max_steps = 4, max_degree = 3, bound = 100, parity = None):
    '''Random continued fraction data: masses m_j of degree ≤ max_degree and
    nonzero constant lengths l_j.

    :returns: `tuple` (masses, lengths, parity); odd data carry one length
              fewer than masses
    '''
    parity = parity or rng.choice((ODD, EVEN))
    count = rng.randint(1, max_steps)
    masses = [random_polynomial(rng, rng.randint(0, max_degree), bound) for _ in range(count)]
    lengths = [random_rational(rng, bound, nonzero = True) for _ in range(count if parity == EVEN else count - 1)]
    return masses, lengths, parity



def random_basic_form(rng, max_nu = 4, max_extra = 4, bound = 10):
    '''Moments s_0 = .. = s_{ν-2} = 0 != s_{ν-1} and ℓ = 2ν-1 plus up to
    `max_extra` further moments.

    :returns: `tuple` (moments, ν)
    '''
    nu = rng.randint(1, max_nu)
    values = [Fraction(0)] * (nu - 1) + [random_rational(rng, bound, nonzero = True)]
    values += [random_rational(rng, bound) for _ in range(nu + rng.randint(0, max_extra))]
    return MomentSequence(values), nu



def continued_fraction_matrix(masses, lengths):
    '''M_1 L_1 M_2 L_2 .. for the given data.'''
    factors = []
    for i, m in enumerate(masses):
        factors.append(PolyMatrix2.m_factor(m))
        if i < len(lengths):
            factors.append(PolyMatrix2.l_factor(Polynomial.constant(lengths[i])))
    return reduce(lambda x, y: x * y, factors, PolyMatrix2.identity())



def synthesize_moments(masses, lengths, parity):
    '''Moments of the continued fraction terminated by τ = 0 (even) or
    τ = ∞ (odd): s_0 .. s_{2n_N-1} or s_0 .. s_{2n_N-2} with
    n_N = Σ (deg m_j + 1).'''
    last = sum(m.degree + 1 for m in masses)
    count = 2 * last if parity == EVEN else 2 * last - 1
    f = lft_apply(continued_fraction_matrix(masses, lengths), ZERO if parity == EVEN else INFINITY)
    return MomentSequence(laurent_expand_at_infinity(f, -count).moments(count))



def random_symmetric_matrix(rng, order, bound = 10, rank = None):
    '''Random symmetric rational matrix; with `rank` it is built as a sum of
    signed rank one terms, which exercises singular cases.'''
    if rank is None:
        rows = [[None] * order for _ in range(order)]
        for i in range(order):
            for j in range(i, order):
                rows[i][j] = rows[j][i] = random_rational(rng, bound)
        return symmetric_matrix(rows)

    rows = [[Fraction(0)] * order for _ in range(order)]
    for _ in range(rank):
        v = [random_rational(rng, bound) for _ in range(order)]
        weight = rng.choice((-1, 1))
        for i in range(order):
            for j in range(order):
                rows[i][j] += weight * v[i] * v[j]
    return symmetric_matrix(rows)



def random_discrete_measure(rng, atoms, bound = 10):
    '''Weights w_i > 0 at distinct nodes t_i > 0.

    :returns: `list` of (weight, node) pairs
    '''
    nodes = set()
    while len(nodes) < atoms:
        nodes.add(Fraction(rng.randint(1, bound * bound), rng.randint(1, bound)))
    return [(Fraction(rng.randint(1, bound), rng.randint(1, bound)), t) for t in sorted(nodes)]



def measure_moments(measure, count):
    '''s_k = Σ w_i t_i^k for k < count.'''
    return MomentSequence([sum(w * t ** k for w, t in measure) for k in range(count)])
