
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

from typing import Any
from typing import Dict
from typing import List

import numpy as np


class Core():
    """
    Interface for the function of d* variables sitting inside a
    HolderComponent.  Cores are immutable and are evaluated on a batch
    of points of shape (m, dim), returning shape (m,).
    """

    # Subclasses set this to the key used in serialized documents
    kind: str = None

    # True for cores that read z_1 only
    first_variable_only: bool = False

    def __init__(self, dim: int):
        """
        :param dim: Number of variables the core consumes
        """
        self.dim = int(dim)

    def __call__(self, points: np.ndarray) -> np.ndarray:
        """
        :param points: Array of shape (m, dim)
        :return: Array of shape (m,)
        """
        raise NotImplementedError()

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary describing this core
        """
        raise NotImplementedError()

    @staticmethod
    def as_points(points, dim: int) -> np.ndarray:
        """
        :param points: Anything array-like holding one or more points
        :param dim: Expected point dimension
        :return: A float array of shape (m, dim)
        """
        array = np.asarray(points, dtype=float)
        if array.ndim <= 1:
            array = array.reshape(-1, dim)
        return array

    def breakpoints(self) -> Dict[int, List[float]]:
        """
        :return: Map from 0-based variable to the values of that variable
                where the core has a kink or a piece boundary.
                Quadrature grids are aligned to these.
        """
        return {}
