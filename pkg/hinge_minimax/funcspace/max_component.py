
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


class MaxComponent():
    """
    A component of one CHOM layer returning the maximum of a subset
    of the layer input coordinates.
    """

    def __init__(self, input_dim: int, active_indices: Tuple[int, ...]):
        """
        :param input_dim: Dimension of the layer input
        :param active_indices: Nonempty 1-based index set
        """
        self.input_dim = int(input_dim)
        self.active_indices = tuple(int(index) for index in active_indices)

    def __call__(self, layer_input: np.ndarray) -> np.ndarray:
        """
        :param layer_input: Array of shape (m, input_dim)
        :return: Array of shape (m,)
        """
        columns = [index - 1 for index in self.active_indices]
        return np.max(layer_input[:, columns], axis=1)

    def to_dict(self):
        """
        :return: A JSON-ready dictionary
        """
        return {"type": "max", "input_dim": self.input_dim,
                "active_indices": list(self.active_indices)}
