
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
from typing import Sequence

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError


def relu(values: np.ndarray) -> np.ndarray:
    """
    :return: max{0, values}, elementwise
    """
    return np.maximum(values, 0.0)


class ReluNetwork():
    """
    The network x -> W_L s_{v_L} W_{L-1} ... W_1 s_{v_1} W_0 x with
    s_v(z) = max{0, z - v} componentwise.

    L is the number of hidden layers.  weights holds W_0..W_L, W_L has
    one row; shifts holds v_1..v_L.  The output layer has no shift.
    Networks are treated as immutable once built.
    """

    def __init__(self, weights: Sequence, shifts: Sequence, input_dim: int = None):
        """
        :param weights: L+1 matrices; W_0 has input_dim columns
        :param shifts: L vectors, v_i sized like the rows of W_{i-1}
        :param input_dim: Optional check on the columns of W_0
        """
        self.weights: List[np.ndarray] = [np.atleast_2d(np.asarray(w, dtype=float)) for w in weights]
        self.shifts: List[np.ndarray] = [np.asarray(v, dtype=float).reshape(-1) for v in shifts]
        if not self.weights:
            raise ParameterError("A network needs at least one weight matrix")
        if len(self.shifts) != len(self.weights) - 1:
            raise ParameterError(f"{len(self.weights)} weight matrices need {len(self.weights) - 1} shifts,"
                                 f" got {len(self.shifts)}")
        if input_dim is not None and self.weights[0].shape[1] != input_dim:
            raise ParameterError(f"W_0 has {self.weights[0].shape[1]} columns, expected {input_dim}")
        for index, shift in enumerate(self.shifts):
            rows = self.weights[index].shape[0]
            if shift.shape[0] != rows or self.weights[index + 1].shape[1] != rows:
                raise ParameterError(f"Hidden layer {index + 1} sizes disagree")
        if self.weights[-1].shape[0] != 1:
            raise ParameterError(f"The output layer must have one row, got {self.weights[-1].shape[0]}")
        for array in self.weights + self.shifts:
            if not np.all(np.isfinite(array)):
                raise ParameterError("Network parameters must be finite")

    @property
    def input_dim(self) -> int:
        """
        :return: d, the number of inputs
        """
        return self.weights[0].shape[1]

    @property
    def depth(self) -> int:
        """
        :return: L, the number of hidden layers
        """
        return len(self.shifts)

    def hidden_sizes(self) -> List[int]:
        """
        :return: m_1..m_L
        """
        return [shift.shape[0] for shift in self.shifts]

    def forward(self, x) -> np.ndarray:
        """
        :param x: One point of dimension d, or an (m, d) batch
        :return: An (m,) array of outputs
        """
        points = np.asarray(x, dtype=float)
        if points.ndim <= 1:
            points = points.reshape(-1, self.input_dim)
        if points.shape[1] != self.input_dim:
            raise ParameterError(f"Network expects {self.input_dim} inputs, got {points.shape[1]}")
        hidden = points
        for weight, shift in zip(self.weights[:-1], self.shifts):
            hidden = relu(hidden @ weight.T - shift)
        return (hidden @ self.weights[-1].T)[:, 0]

    def __call__(self, x) -> np.ndarray:
        return self.forward(x)

    def parameter_arrays(self) -> List[np.ndarray]:
        """
        :return: All weight matrices and shift vectors
        """
        return self.weights + self.shifts

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: {"input_dim": d, "layers": [{"w": W_i, "v": v_{i+1}}, ...]};
                the output layer carries an empty v
        """
        layers = [{"w": weight.tolist(), "v": shift.tolist()}
                  for weight, shift in zip(self.weights[:-1], self.shifts)]
        layers.append({"w": self.weights[-1].tolist(), "v": []})
        return {"input_dim": self.input_dim, "layers": layers}

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "ReluNetwork":
        """
        :param doc: Dictionary made by to_dict()
        :return: The network
        """
        layers = doc["layers"]
        weights = [np.asarray(layer["w"], dtype=float).reshape(len(layer["w"]), -1)
                   for layer in layers]
        shifts = [layer["v"] for layer in layers[:-1]]
        return cls(weights, shifts, doc.get("input_dim"))

    def copy(self) -> "ReluNetwork":
        """
        :return: A network with copied parameters
        """
        return ReluNetwork([weight.copy() for weight in self.weights],
                           [shift.copy() for shift in self.shifts])
