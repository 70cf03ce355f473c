
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

"""
The J function and the lower bound it gives on the sum of the excess
misclassification risks of one classifier under two distributions.
"""
import itertools
from typing import Callable
from typing import Sequence

import numpy as np

from hinge_minimax.dist.marginal_spec import MarginalSpec
from hinge_minimax.dist.quadrature import DEFAULT_RESOLUTION
from hinge_minimax.dist.quadrature import DistributionQuadrature
from hinge_minimax.errors.capacity_error import CapacityError
from hinge_minimax.errors.parameter_error import ParameterError

BRUTE_FORCE_CELL_CAP = 16


def j_function(x, y):
    """
    :param x: Values in [0,1]
    :param y: Values in [0,1]
    :return: min{x+y, 2-x-y} - min{x, 1-x} - min{y, 1-y}, elementwise
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any((x < 0.0) | (x > 1.0) | (y < 0.0) | (y > 1.0)):
        raise ParameterError("J is defined on [0,1] x [0,1]")
    value = np.minimum(x + y, 2.0 - x - y) - np.minimum(x, 1.0 - x) - np.minimum(y, 1.0 - y)
    return float(value) if value.ndim == 0 else value


def excess_sum_separation(eta1: Callable, eta2: Callable, marginal: MarginalSpec,
                          resolution: int = DEFAULT_RESOLUTION) -> float:
    """
    :param eta1: Conditional probability of the first law
    :param eta2: Conditional probability of the second law
    :param marginal: The shared marginal
    :param resolution: Quadrature cells per unit length
    :return: The integral of J(eta1, eta2), a lower bound on
            inf_f of the summed excess 0-1 risks under both laws
    """
    quadrature = DistributionQuadrature(marginal, [eta1, eta2], resolution)
    values1 = np.clip(eta1(quadrature.points), 0.0, 1.0)
    values2 = np.clip(eta2(quadrature.points), 0.0, 1.0)
    return quadrature.expect(j_function(values1, values2))


def brute_force_excess_sum(masses: Sequence[float], eta1: Sequence[float],
                           eta2: Sequence[float]) -> float:
    """
    Minimizes the summed excess 0-1 risks over every sign pattern of a
    classifier that is constant on each cell of a partition.

    :param masses: Marginal mass of each cell
    :param eta1: Value of the first eta on each cell
    :param eta2: Value of the second eta on each cell
    :return: The exhaustive minimum
    """
    masses = np.asarray(masses, dtype=float)
    eta1 = np.asarray(eta1, dtype=float)
    eta2 = np.asarray(eta2, dtype=float)
    cells = masses.shape[0]
    if cells > BRUTE_FORCE_CELL_CAP:
        raise CapacityError(2 ** cells, 2 ** BRUTE_FORCE_CELL_CAP, "sign patterns")

    patterns = np.array(list(itertools.product((-1.0, 1.0), repeat=cells)))

    def excess(eta):
        bayes = np.where(2.0 * eta - 1.0 >= 0.0, 1.0, -1.0)
        wrong = patterns != bayes[None, :]
        return wrong @ (masses * np.abs(2.0 * eta - 1.0))

    return float(np.min(excess(eta1) + excess(eta2)))
