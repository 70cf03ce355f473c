
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

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.core import Core


class CallableCore(Core):
    """
    Wraps an arbitrary vectorized Python callable.  Useful for ad hoc
    targets; cannot be serialized.
    """

    kind = "callable"

    def __init__(self, function: Callable[[np.ndarray], np.ndarray], dim: int = 1,
                 name: str = "callable"):
        """
        :param function: Maps an (m, dim) array to an (m,) array
        :param dim: Number of variables
        :param name: Label used in reports
        """
        super().__init__(dim)
        self.function = function
        self.name = name

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        return np.asarray(self.function(points), dtype=float).reshape(points.shape[0])

    def to_dict(self):
        raise ParameterError(f"Core '{self.name}' wraps a Python callable and cannot be serialized")
