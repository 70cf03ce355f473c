
# Copyright © 2019-2026 Cognizant Technology Solutions Corp, www.cognizant.com.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# END COPYRIGHT

import numpy as np


def row_seed(master_seed: int, n: int, seed_index: int) -> int:
    """
    :param master_seed: The experiment's master seed
    :param n: Sample size of the row
    :param seed_index: Replication number within that sample size
    :return: A 32-bit seed that depends only on the three arguments,
            so rows do not depend on execution order or worker count
    """
    entropy = [int(master_seed), int(n), int(seed_index)]
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])
