
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
from typing import Sequence

import numpy as np
from scipy.spatial.distance import cdist

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.tensor_grid import tensor_grid

DEFAULT_PROBE_RESOLUTION = 33


def probe_values(members: Sequence[Callable], probe_points: np.ndarray) -> np.ndarray:
    """
    :return: A (members, probes) array of member values
    """
    return np.vstack([np.asarray(member(probe_points), dtype=float).reshape(-1) for member in members])


def covering_number_estimate(members, gamma: float, probe_points: np.ndarray = None, dim: int = None) -> int:
    """
    Greedy gamma-cover in the sup distance over the probe points: each
    round takes the member whose gamma-ball holds the most members not
    yet covered.  The result is the size of an actual cover, so it bounds
    the grid covering number from above.

    :param members: A sequence of vectorized functions, or an object with a members list
    :param gamma: Radius, > 0
    :param probe_points: An (m, d) array; a tensor grid on [0,1]^dim when None
    :param dim: Input dimension used for the default probe grid
    :return: Number of centers of the greedy cover
    """
    if gamma <= 0.0:
        raise ParameterError(f"Covering radius must be positive, got {gamma}")
    members = list(getattr(members, "members", members))
    if not members:
        return 0
    if probe_points is None:
        if dim is None:
            raise ParameterError("Need probe points or an input dimension")
        probe_points = tensor_grid(dim, DEFAULT_PROBE_RESOLUTION)

    values = probe_values(members, probe_points)
    within = cdist(values, values, metric="chebyshev") <= gamma
    uncovered = np.ones(len(members), dtype=bool)
    centers = 0
    while np.any(uncovered):
        gains = np.sum(within[:, uncovered], axis=1)
        best = int(np.argmax(gains))
        uncovered &= ~within[best]
        centers += 1
    return centers
