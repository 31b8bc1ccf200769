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
The `stieltjes.stype` module defines constants, sentinels and the exception
hierarchy shared by all computational modules.

Problem parities:

==================     =============
parity name            meaning
==================     =============
ODD                    ℓ = 2n_N − 2
EVEN                   ℓ = 2n_N − 1
==================     =============

Exit codes reported by the command line front end:

=============================     ====
exception                         code
=============================     ====
SReaderException (parse)          2
NotRegularException               3
InsufficientMomentsException      4
NoNormalIndexException            5
InadmissibleParameterException    6
ConsistencyException              7
=============================     ====
'''

import functools
import re
from fractions import Fraction


ODD = 'odd'
EVEN = 'even'
PARITIES = (ODD, EVEN)

# asymptotic side conditions on the terminal parameter
RESIDUAL_ODD = 'unconstrained-tail'
RESIDUAL_EVEN = 'o(1)-tail'

# Stieltjes string classification
CLASSICAL = 'classical'
SIGNED = 'signed'
MULTIPOLE = 'multipole'

SOLVABLE = 'solvable'
NOT_SOLVABLE = 'not-solvable'

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_REGULAR = 3
EXIT_INSUFFICIENT_MOMENTS = 4
EXIT_NO_NORMAL_INDEX = 5
EXIT_INADMISSIBLE_PARAMETER = 6
EXIT_CONSISTENCY = 7



@functools.total_ordering
class MinusInfinity(object):
    '''Degree of the zero polynomial. Compares below every integer and absorbs
    addition.'''

    def __eq__(self, other):
        return isinstance(other, MinusInfinity)

    def __lt__(self, other):
        return not isinstance(other, MinusInfinity)

    def __hash__(self):
        return hash('-inf-degree')

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __repr__(self):
        return '-inf'



class Infinity(object):
    '''Point at infinity used as the LFT parameter τ = ∞.'''

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash('inf-point')

    def __repr__(self):
        return 'inf'



MINUS_INFINITY = MinusInfinity()
INFINITY = Infinity()



class SException(Exception):
    '''Base class for errors raised by the moment problem solver.'''
    exit_code = EXIT_CONSISTENCY
    kind = 'internal-consistency'

    def as_dict(self):
        return {'error': self.kind, 'message': str(self)}



class InsufficientMomentsException(SException):
    '''Raised when a computation needs a moment beyond the supplied data.

    :Parameters:
     - `index` (`integer`) - index of the first missing moment
    '''
    exit_code = EXIT_INSUFFICIENT_MOMENTS
    kind = 'insufficient-moments'

    def __init__(self, index, message = None):
        self.index = index
        super(InsufficientMomentsException, self).__init__(message or 'moment s_%d is not available' % index)

    def as_dict(self):
        d = super(InsufficientMomentsException, self).as_dict()
        d['index'] = self.index
        return d



class NoNormalIndexException(SException):
    '''Raised for sequences without a normal index in the available window.'''
    exit_code = EXIT_NO_NORMAL_INDEX
    kind = 'no-normal-index'



class NotNormalIndexException(NoNormalIndexException):
    '''Raised when an index expected to be normal has det S_n = 0.'''
    pass



class NotRegularException(SException):
    '''Raised for non-regular sequences.

    :Parameters:
     - `index` (`integer` or `None`) - first normal index violating regularity
    '''
    exit_code = EXIT_NOT_REGULAR
    kind = 'not-regular'

    def __init__(self, index, message = None):
        self.index = index
        super(NotRegularException, self).__init__(message or 'sequence is not regular at normal index %s' % index)

    def as_dict(self):
        d = super(NotRegularException, self).as_dict()
        d['index'] = self.index
        return d



class DegenerateProblemException(NotRegularException):
    '''Raised when the data extend past the last normal index block.'''
    kind = 'degenerate'



class NotBasicFormException(SException):
    '''Raised when a basic step is requested for data of another shape.'''
    exit_code = EXIT_NOT_REGULAR
    kind = 'not-basic-form'



class RequiresPolynomialLException(SException):
    '''Raised by the constant l-step when 𝔰₋₁ = 0.'''
    exit_code = EXIT_NOT_REGULAR
    kind = 'requires-polynomial-l'



class NotApplicableException(SException):
    '''Raised when a rule is applied outside its hypotheses.'''
    kind = 'not-applicable'



class InadmissibleParameterException(SException):
    '''Raised when τ violates the asymptotic side condition.'''
    exit_code = EXIT_INADMISSIBLE_PARAMETER
    kind = 'inadmissible-parameter'



class DegenerateParameterException(InadmissibleParameterException):
    '''Raised when a linear fractional transform has an identically zero
    denominator.'''
    kind = 'degenerate-parameter'



class ConsistencyException(SException):
    '''Raised when two independent computations disagree.'''
    pass



class InconsistentInputException(SException):
    '''Raised when explicit options contradict the moment data.'''
    exit_code = EXIT_PARSE
    kind = 'parse'



class Mapper(object):
    '''Utility class for creating function execution map via decorators.

    :Parameters:
     - `call_map` (`dictionary`) -  target execution map
    '''
    def __init__(self, call_map):
        self.call_map = call_map


    def __call__(self, *args):
        def wrap(func):
            for arg in args:
                self.call_map[arg] = func
            return func
        return wrap



_RATIONAL_REGEX = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')



def parse_rational(text):
    '''Parses an exact rational from ``"p/q"`` or ``"p"`` notation.

    Integers and :class:`fractions.Fraction` instances pass through unchanged.

    :Parameters:
     - `text` (`string`, `integer` or `Fraction`) - value to be parsed

    :returns: `Fraction`
    :raises: `ValueError` for malformed text or a zero denominator
    '''
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError('boolean is not a rational: %r' % text)
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError('expected a rational string, got: %r' % (text, ))

    match = _RATIONAL_REGEX.match(text)
    if not match:
        raise ValueError('malformed rational: %r' % text)

    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError('zero denominator: %r' % text)
    return Fraction(int(numerator), int(denominator) if denominator else 1)



def format_rational(value):
    '''Formats a rational as ``"p/q"``, or ``"p"`` when q = 1.'''
    value = Fraction(value)
    if value.denominator == 1:
        return '%d' % value.numerator
    return '%d/%d' % (value.numerator, value.denominator)
