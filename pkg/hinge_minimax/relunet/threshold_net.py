
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

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.relunet.relu_network import ReluNetwork


def threshold_exponent(delta: float) -> int:
    """
    :param delta: Threshold width in (0, 1/2]
    :return: k = ceil(-log2 delta) + 1
    """
    if not 0.0 < delta <= 0.5:
        raise ParameterError(f"delta must lie in (0, 1/2], got {delta}")
    return math.ceil(-math.log(delta) / math.log(2.0)) + 1


def build_threshold_net(delta: float) -> ReluNetwork:
    """
    The scalar network
    l(t) = 2 s(2^k s(2 s(t) - 1)) - 2 s(2^k s(2 s(t) - 1) - 1) - 1,
    equal to -1 for t <= 1/2 and to +1 for t >= 1/2 + 2^(-k-1).

    All parameters are 0 or +-1: the factor 2 comes from two unit
    edges into each unit and 2^k from k - 1 doubling layers after it.
    Depth is k + 3, width 3 and there are 4k + 17 nonzero parameters.

    :param delta: Threshold width in (0, 1/2]
    :return: The network
    """
    k = threshold_exponent(delta)
    pair = np.ones((2, 2))
    weights = [np.ones((2, 1)), pair]
    shifts = [np.zeros(2), np.ones(2)]
    for _ in range(k - 1):
        weights.append(pair)
        shifts.append(np.zeros(2))
    # s(2^k u) and s(2^k u - 1)
    weights.append(pair)
    shifts.append(np.array([0.0, 1.0]))
    # Their difference lies in [0,1]; the third unit is the constant 1
    weights.append(np.array([[1.0, -1.0], [1.0, -1.0], [0.0, 0.0]]))
    shifts.append(np.array([0.0, 0.0, -1.0]))
    weights.append(np.array([[1.0, 1.0, -1.0]]))
    return ReluNetwork(weights, shifts, input_dim=1)
