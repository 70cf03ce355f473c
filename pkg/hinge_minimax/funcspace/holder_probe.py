
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
from typing import Tuple

import numpy as np
from scipy.spatial.distance import pdist

from hinge_minimax.funcspace.tensor_grid import tensor_grid

# Grid points used for the all-pairs difference quotient
PAIR_POINT_CAP = 2048


def holder_parts(function: Callable[[np.ndarray], np.ndarray], beta: float,
                 grid_resolution: int, dim: int = 1) -> Tuple[float, float, np.ndarray]:
    """
    :param function: Vectorized map from (m, dim) arrays to (m,) arrays
    :param beta: Smoothness order; the quotient uses exponent min(beta, 1)
    :param grid_resolution: Points per axis
    :param dim: Input dimension
    :return: (grid sup norm, largest grid difference quotient,
              the two points realizing that quotient as a (2, dim) array)
    """
    points = tensor_grid(dim, grid_resolution)
    sup_norm = float(np.max(np.abs(function(points))))

    pair_resolution = grid_resolution
    while pair_resolution > 2 and pair_resolution ** dim > PAIR_POINT_CAP:
        pair_resolution -= 1
    pair_points = tensor_grid(dim, pair_resolution, cap=PAIR_POINT_CAP)
    values = function(pair_points)

    distances = pdist(pair_points)
    differences = pdist(values.reshape(-1, 1), metric="cityblock")
    quotients = differences / np.power(distances, min(beta, 1.0))

    worst = int(np.argmax(quotients))
    # pdist orders pairs like the upper triangle
    rows, columns = np.triu_indices(pair_points.shape[0], k=1)
    witness = np.vstack([pair_points[rows[worst]], pair_points[columns[worst]]])
    return sup_norm, float(quotients[worst]), witness


def holder_seminorm_probe(function: Callable[[np.ndarray], np.ndarray], beta: float,
                          grid_resolution: int, dim: int = 1) -> float:
    """
    Grid sup norm plus the largest grid difference quotient of order
    min(beta, 1).  A lower bound on the Hoelder norm for beta <= 1 and
    a necessary-condition probe above that.

    :param function: Vectorized map from (m, dim) arrays to (m,) arrays
    :param beta: Smoothness order
    :param grid_resolution: Points per axis
    :param dim: Input dimension
    :return: The probe value
    """
    sup_norm, quotient, _ = holder_parts(function, beta, grid_resolution, dim)
    return sup_norm + quotient
