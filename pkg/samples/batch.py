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
import random
import sys

from stieltjes.sconsole import run_batch
from stieltjes.sreader import ProblemInput
from stieltjes.utils import random_expansion_data, synthesize_moments


if __name__ == '__main__':
    rng = random.Random(int(sys.argv[1]) if len(sys.argv) > 1 else 0)

    problems = []
    for _ in range(20):
        masses, lengths, parity = random_expansion_data(rng, bound = 20)
        problems.append(ProblemInput(synthesize_moments(masses, lengths, parity), parity))

    # workers return encoded results in input order
    for code, result in run_batch('string', problems, jobs = 4):
        print(code, json.dumps(result, sort_keys = True))
