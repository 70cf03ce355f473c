
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

from typing import Callable
from typing import Dict
from typing import List

import numpy as np

from hinge_minimax.dist.distribution_spec import active_indices_of
from hinge_minimax.dist.distribution_spec import breakpoints_of
from hinge_minimax.risk.losses import truncate


class TruncatedFunction():
    """
    The classifier T_F o f.  Reads the same coordinates as f, so
    quadrature grids built for f serve it too.
    """

    def __init__(self, function: Callable, bound: float, dim: int):
        """
        :param function: The classifier f
        :param bound: Truncation level F > 0
        :param dim: Input dimension of f
        """
        self.function = function
        self.bound = float(bound)
        self.dim = int(dim)

    def __call__(self, points) -> np.ndarray:
        values = np.asarray(self.function(points), dtype=float).reshape(-1)
        return truncate(self.bound, values)

    def active_input_indices(self) -> List[int]:
        """
        :return: The 0-based coordinates f reads
        """
        return active_indices_of(self.function, self.dim)

    def breakpoints(self) -> Dict[int, List[float]]:
        """
        :return: The kinks of f
        """
        return breakpoints_of(self.function)
