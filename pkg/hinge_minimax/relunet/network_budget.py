
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

import math
from dataclasses import dataclass
from typing import Any
from typing import Dict

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.tensor_grid import tensor_grid
from hinge_minimax.relunet.relu_network import ReluNetwork

SCALAR_SUP_RESOLUTION = 4097
DEFAULT_SUP_RESOLUTION = 33


@dataclass(frozen=True)
class NetworkBudget:
    """
    The class of networks with depth <= G, width <= N, at most S nonzero
    parameters, parameters bounded by B and sup norm on [0,1]^d at most F.
    """

    # pylint: disable=invalid-name
    G: int
    N: int
    S: int
    B: float
    F: float = math.inf

    def __post_init__(self):
        if self.G <= 0 or self.N < 1 or self.S <= 0 or self.B <= 0.0 or self.F <= 0.0:
            raise ParameterError(f"Invalid network budget {self}")

    def admits(self, usage: "BudgetUsage") -> bool:
        """
        :param usage: Measured accounts of a network
        :return: True when all five accounts are within budget
        """
        return usage.depth <= self.G and usage.width <= self.N and usage.nnz <= self.S \
            and usage.max_abs <= self.B and usage.sup_estimate <= self.F

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary; an infinite F becomes "inf"
        """
        return {"G": self.G, "N": self.N, "S": self.S, "B": self.B,
                "F": "inf" if math.isinf(self.F) else self.F}


@dataclass(frozen=True)
class BudgetUsage:
    """
    Measured accounts of one network.
    """

    depth: int
    width: int
    nnz: int
    max_abs: float
    sup_estimate: float

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return {"depth": self.depth, "width": self.width, "nnz": self.nnz,
                "max_abs": self.max_abs, "sup_estimate": self.sup_estimate}


def budget_of(net: ReluNetwork, sup_grid_resolution: int = None) -> BudgetUsage:
    """
    :param net: The network
    :param sup_grid_resolution: Points per axis of the sup-norm grid;
            4097 for scalar inputs and 33 otherwise when None
    :return: depth L, the largest hidden width, the nonzero parameter count,
            the largest parameter magnitude and the grid sup norm on [0,1]^d
    """
    if sup_grid_resolution is None:
        sup_grid_resolution = SCALAR_SUP_RESOLUTION if net.input_dim == 1 else DEFAULT_SUP_RESOLUTION
    arrays = net.parameter_arrays()
    nnz = int(sum(np.count_nonzero(array) for array in arrays))
    max_abs = float(max((np.max(np.abs(array)) for array in arrays if array.size), default=0.0))
    width = max(net.hidden_sizes(), default=0)
    points = tensor_grid(net.input_dim, sup_grid_resolution)
    sup_estimate = float(np.max(np.abs(net.forward(points))))
    return BudgetUsage(net.depth, width, nnz, max_abs, sup_estimate)
