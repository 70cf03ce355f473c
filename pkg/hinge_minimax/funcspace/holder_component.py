
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

from typing import Tuple

import numpy as np

from hinge_minimax.funcspace.core import Core


class HolderComponent():
    """
    A component of one CHOM layer that applies a Hoelder-smooth core of
    d* variables to a chosen subset of the layer input coordinates.
    """

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def __init__(self, input_dim: int, active_indices: Tuple[int, ...], core: Core,
                 beta: float, radius: float):
        """
        :param input_dim: Dimension of the layer input
        :param active_indices: 1-based indices the core reads, in order
        :param core: The function of len(active_indices) variables
        :param beta: Smoothness order
        :param radius: Hoelder radius r
        """
        self.input_dim = int(input_dim)
        self.active_indices = tuple(int(index) for index in active_indices)
        self.core = core
        self.beta = float(beta)
        self.radius = float(radius)

    @property
    def d_lower(self) -> int:
        """
        :return: Number of variables the core reads
        """
        return len(self.active_indices)

    def __call__(self, layer_input: np.ndarray) -> np.ndarray:
        """
        :param layer_input: Array of shape (m, input_dim)
        :return: Array of shape (m,)
        """
        columns = [index - 1 for index in self.active_indices]
        return self.core(layer_input[:, columns])

    def to_dict(self):
        """
        :return: A JSON-ready dictionary
        """
        return {"type": "holder", "input_dim": self.input_dim,
                "active_indices": list(self.active_indices), "core": self.core.to_dict(),
                "beta": self.beta, "radius": self.radius}
