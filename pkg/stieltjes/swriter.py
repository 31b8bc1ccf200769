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
from fractions import Fraction

import numpy

from stieltjes import MetaData, WRITER_OPTIONS
from stieltjes.stype import SException, Infinity, MinusInfinity, Mapper, format_rational
from stieltjes.salgebra import Polynomial, RationalFunction, PolyMatrix2
from stieltjes.shankel import MomentSequence, Inertia, NormalIndexReport
from stieltjes.sschur import SchurStep, Verdict, Admissibility
from stieltjes.spolynomials import OrthPolyPair, PFraction, StieltjesPolySeq, StringData
from stieltjes.sreader import ProblemInput



class SWriterException(SException):
    '''
    Indicates an error raised during report serialization.
    '''
    pass



class SWriter(object):
    '''
    Serializes reports into JSON documents. Rationals are written as
    ``"p/q"`` strings and polynomials as ascending coefficient lists, so every
    number parses back losslessly. Keys are sorted, which makes the output
    byte-identical for identical input.

    :Parameters:
     - `stream` (`file object` or `None`) - target stream

    :Attributes:
     - `_writer_map` - stores mapping between Python types and functions
       responsible for converting them into JSON compatible values
    '''

    _writer_map = {}
    serialize = Mapper(_writer_map)


    def __init__(self, stream = None):
        self._stream = stream


    def write(self, data, **options):
        '''Serializes a single report.

        :Parameters:
         - `data` - report to be serialized
        :Options:
         - `pretty` (`boolean`) - indent the document, **Default**: ``False``

        :returns: if the wrapped stream is ``None`` the document, otherwise
                  ``None``
        '''
        self._options = MetaData(**WRITER_OPTIONS.union_dict(**options))
        document = json.dumps(self.encode(data), sort_keys = True, ensure_ascii = False,
                              indent = 2 if self._options.pretty else None)
        if self._stream:
            self._stream.write(document)
            self._stream.write('\n')
        else:
            return document


    def encode(self, data):
        '''Converts a value into JSON compatible types.'''
        if data is None or isinstance(data, (bool, int, str)):
            return data

        writer = self._get_writer(type(data))
        if writer:
            return writer(self, data)
        raise SWriterException('Unable to serialize type: %s' % type(data))


    def _get_writer(self, data_type):
        for base in data_type.__mro__:
            writer = self._writer_map.get(base, None)
            if writer:
                return writer
        return None


    @serialize(Fraction)
    def _write_rational(self, data):
        return format_rational(data)


    @serialize(Infinity)
    def _write_infinity(self, data):
        return 'inf'


    @serialize(MinusInfinity)
    def _write_minus_infinity(self, data):
        return '-inf'


    @serialize(list, tuple)
    def _write_list(self, data):
        return [self.encode(element) for element in data]


    @serialize(dict)
    def _write_dictionary(self, data):
        return dict((str(key), self.encode(value)) for key, value in data.items())


    @serialize(numpy.ndarray)
    def _write_matrix(self, data):
        return [[self.encode(Fraction(x)) for x in row] for row in data]


    @serialize(MomentSequence)
    def _write_moments(self, data):
        return [self.encode(v) for v in data]


    @serialize(Polynomial)
    def _write_polynomial(self, data):
        if data.is_zero():
            return ['0']
        return [self.encode(c) for c in data.coefficients]


    @serialize(RationalFunction)
    def _write_rational_function(self, data):
        return {'num': self.encode(data.num), 'den': self.encode(data.den)}


    @serialize(PolyMatrix2)
    def _write_poly_matrix(self, data):
        return [[self.encode(data.w11), self.encode(data.w12)],
                [self.encode(data.w21), self.encode(data.w22)]]


    @serialize(Inertia)
    def _write_inertia(self, data):
        return data.as_dict()


    @serialize(NormalIndexReport, Verdict, ProblemInput, SException)
    def _write_as_dict(self, data):
        return self.encode(data.as_dict())


    @serialize(Admissibility)
    def _write_admissibility(self, data):
        return {'admissible': data.admissible, 'reason': data.reason}


    @serialize(SchurStep)
    def _write_step(self, data):
        return {'m': self.encode(data.m), 'l': self.encode(data.l),
                'kappa_zm': data.kappa_zm, 'kappa_m': data.kappa_m,
                'kappa_zl': data.kappa_zl, 'kappa_l': data.kappa_l}


    @serialize(OrthPolyPair)
    def _write_orthogonal_pair(self, data):
        return {'n': data.index, 'P': self.encode(data.P), 'Q': self.encode(data.Q)}


    @serialize(PFraction)
    def _write_pfraction(self, data):
        return {'b': self.encode(data.b), 'a': self.encode(data.a)}


    @serialize(StieltjesPolySeq)
    def _write_stieltjes_polynomials(self, data):
        return {'P+': self.encode(data.Pplus), 'Q+': self.encode(data.Qplus), 'first_index': -1}


    @serialize(StringData)
    def _write_string_data(self, data):
        return {'classification': data.classification,
                'masses': self.encode(data.masses),
                'lengths': self.encode(data.lengths)}
