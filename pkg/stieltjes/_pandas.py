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

import pandas

from stieltjes.stype import Mapper, format_rational
from stieltjes.swriter import SWriter



def inertia_frame(rows):
    '''Inertia table as a data frame indexed by order, one (ν₋, ν₀, ν₊)
    column triple per Hankel kind. Undetermined blocks are left empty.'''
    records = []
    for row in rows:
        record = {'order': row['order']}
        for kind in ('S', 'S+'):
            value = row[kind]
            for name in ('nu_minus', 'nu_zero', 'nu_plus'):
                record['%s %s' % (kind, name)] = None if value is None else getattr(value, name)
        records.append(record)
    frame = pandas.DataFrame.from_records(records)
    return frame.set_index('order') if records else frame



def steps_frame(steps):
    '''Masses and lengths of an expansion with their negative indices.'''
    return pandas.DataFrame.from_records([{'j': j,
                                           'm': str(step.m),
                                           'l': '' if step.l is None else str(step.l),
                                           'kappa(zm)': step.kappa_zm,
                                           'kappa(m)': step.kappa_m}
                                          for j, step in enumerate(steps, 1)]).set_index('j')



class PandasSWriter(SWriter):
    '''Writer which additionally accepts data frames, with rational cells
    written as strings.'''

    _writer_map = dict.copy(SWriter._writer_map)
    serialize = Mapper(_writer_map)


    @serialize(pandas.DataFrame)
    def _write_pandas_data_frame(self, data):
        return [dict((str(column), self._write_cell(value)) for column, value in record.items())
                for record in data.reset_index().to_dict(orient = 'records')]


    def _write_cell(self, value):
        if value is None or (isinstance(value, float) and value != value):
            return None
        if hasattr(value, 'item'):
            value = value.item()
        if isinstance(value, float) and value.is_integer():
            return int(value)
        if isinstance(value, Fraction):
            return format_rational(value)
        return self.encode(value)
