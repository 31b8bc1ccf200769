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

import json

from stieltjes.stype import PARITIES, EXIT_PARSE, INFINITY, Infinity, SException, Mapper, parse_rational, \
    format_rational
from stieltjes.salgebra import Polynomial, RationalFunction
from stieltjes.shankel import MomentSequence



class SReaderException(SException):
    '''
    Indicates an error raised while parsing a problem description.

    :Parameters:
     - `field` (`string`) - path of the offending field, e.g. ``moments[2]``
     - `message` (`string`) - description of the problem
    '''
    exit_code = EXIT_PARSE
    kind = 'parse'

    def __init__(self, field, message):
        self.field = field
        self.message = message
        super(SReaderException, self).__init__('%s: %s' % (field, message))

    def __reduce__(self):
        return (self.__class__, (self.field, self.message))

    def as_dict(self):
        d = super(SReaderException, self).as_dict()
        d['field'] = self.field
        return d



class ProblemInput(object):
    '''
    A moment problem as given by the user.

    :Parameters:
     - `moments` (`MomentSequence`) - the moments s_0 .. s_ℓ
     - `parity` (`string` or `None`) - ``odd``, ``even`` or inferred
     - `kappa` (`integer` or `None`) - bound on ν₋(S_{n_N})
     - `k` (`integer` or `None`) - bound on the ν₋ of the shifted block
     - `free_tail` (`Fraction` or `None`) - s_{2n_N-1} of an odd problem
     - `tau` (`RationalFunction`, :data:`.INFINITY` or `None`) - parameter
    '''

    FIELDS = ('moments', 'parity', 'kappa', 'k', 'free_tail', 'tau')

    def __init__(self, moments, parity = None, kappa = None, k = None, free_tail = None, tau = None):
        self.moments = moments
        self.parity = parity
        self.kappa = kappa
        self.k = k
        self.free_tail = free_tail
        self.tau = tau


    def as_dict(self):
        '''JSON compatible form which :class:`.SReader` parses back.'''
        d = {'moments': [format_rational(v) for v in self.moments]}
        if self.parity is not None:
            d['parity'] = self.parity
        if self.kappa is not None:
            d['kappa'] = self.kappa
        if self.k is not None:
            d['k'] = self.k
        if self.free_tail is not None:
            d['free_tail'] = format_rational(self.free_tail)
        if isinstance(self.tau, Infinity):
            d['tau'] = 'inf'
        elif self.tau is not None:
            d['tau'] = {'num': [format_rational(c) for c in self.tau.num.coefficients] or ['0'],
                        'den': [format_rational(c) for c in self.tau.den.coefficients]}
        return d


    def __eq__(self, other):
        if not isinstance(other, ProblemInput):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'ProblemInput(%r)' % self.as_dict()



def _rational(field, value):
    try:
        return parse_rational(value)
    except ValueError as e:
        raise SReaderException(field, str(e))



def _coefficients(field, values):
    if not isinstance(values, list) or not values:
        raise SReaderException(field, 'expected a nonempty list of rationals')
    return Polynomial([_rational('%s[%d]' % (field, i), v) for i, v in enumerate(values)])



def _count(field, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SReaderException(field, 'expected a nonnegative integer, got: %r' % (value, ))
    return value



class SReader(object):
    '''
    Parses problem descriptions given as JSON documents.

    A document is an object with the fields ``moments`` (required, list of
    ``"p/q"`` strings), ``parity``, ``kappa``, ``k``, ``free_tail`` and
    ``tau``. The parameter is ``"inf"``, a rational string or an object
    ``{"num": [...], "den": [...]}`` of ascending coefficient lists.

    :Attributes:
     - `_field_map` - stores mapping between field names and functions
       responsible for parsing them
    '''

    _field_map = {}
    parse = Mapper(_field_map)


    def read(self, source):
        '''Parses a single problem.

        :Parameters:
         - `source` (`string`, `dict` or `file object`) - the document

        :returns: :class:`.ProblemInput`
        :raises: `SReaderException`
        '''
        if hasattr(source, 'read'):
            source = source.read()
        if isinstance(source, (str, bytes)):
            try:
                source = json.loads(source)
            except ValueError as e:
                raise SReaderException('document', 'malformed JSON: %s' % e)
        if not isinstance(source, dict):
            raise SReaderException('document', 'expected a JSON object')
        if 'moments' not in source:
            raise SReaderException('moments', 'field is required')

        values = {}
        for field, value in source.items():
            reader = self._field_map.get(field, None)
            if not reader:
                raise SReaderException(field, 'unknown field')
            values[field] = reader(self, value)
        return ProblemInput(**values)


    def override(self, problem, **fields):
        '''Copy of `problem` with the given raw field values parsed and
        substituted; ``None`` values leave the field unchanged.'''
        values = dict((field, getattr(problem, field)) for field in ProblemInput.FIELDS)
        for field, value in fields.items():
            reader = self._field_map.get(field, None)
            if not reader:
                raise SReaderException(field, 'unknown field')
            if value is not None:
                values[field] = reader(self, value)
        return ProblemInput(**values)


    def read_batch(self, stream):
        '''Parses one document per nonblank line. Unparsable lines yield the
        :class:`.SReaderException` in place of the problem.

        :returns: `list` of :class:`.ProblemInput` or `SReaderException`
        '''
        problems = []
        for number, line in enumerate(stream, 1):
            if not line.strip():
                continue
            try:
                problems.append(self.read(line))
            except SReaderException as e:
                e.field = 'line %d: %s' % (number, e.field)
                problems.append(e)
        return problems


    @parse('moments')
    def _read_moments(self, value):
        if not isinstance(value, list) or not value:
            raise SReaderException('moments', 'expected a nonempty list of rationals')
        return MomentSequence([_rational('moments[%d]' % i, v) for i, v in enumerate(value)])


    @parse('parity')
    def _read_parity(self, value):
        if value is not None and value not in PARITIES:
            raise SReaderException('parity', 'expected one of %s, got: %r' % (', '.join(PARITIES), value))
        return value


    @parse('kappa')
    def _read_kappa(self, value):
        return None if value is None else _count('kappa', value)


    @parse('k')
    def _read_k(self, value):
        return None if value is None else _count('k', value)


    @parse('free_tail')
    def _read_free_tail(self, value):
        return None if value is None else _rational('free_tail', value)


    @parse('tau')
    def _read_tau(self, value):
        if value is None:
            return None
        if value == 'inf':
            return INFINITY
        if isinstance(value, dict):
            unknown = set(value) - set(['num', 'den'])
            if unknown:
                raise SReaderException('tau.%s' % sorted(unknown)[0], 'unknown field')
            if 'num' not in value:
                raise SReaderException('tau.num', 'field is required')
            num = _coefficients('tau.num', value['num'])
            den = _coefficients('tau.den', value.get('den', ['1']))
            if den.is_zero():
                raise SReaderException('tau.den', 'denominator vanishes identically')
            return RationalFunction(num, den)
        return RationalFunction(_rational('tau', value))
