
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
Risk functionals of classifiers under a distribution, by quadrature
against the marginal or by Monte Carlo draws of X.
"""
import logging
from typing import Callable

import numpy as np
from scipy.special import entr

from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.quadrature import DEFAULT_RESOLUTION
from hinge_minimax.dist.quadrature import DistributionQuadrature
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.losses import conditional_risk
from hinge_minimax.risk.risk_report import RiskReport

QUADRATURE = "quadrature"
MONTE_CARLO = "monte_carlo"

# Below this many draws the Monte Carlo estimate is flagged as imprecise
MIN_PRECISE_SAMPLES = 100

LOGGER = logging.getLogger(__name__)


def bayes_integrand(loss: LossKind, eta) -> np.ndarray:
    """
    :param loss: Which loss
    :param eta: eta(x) at some points
    :return: The smallest conditional risk at each point
    """
    eta = np.asarray(eta, dtype=float)
    loss = LossKind(loss)
    if loss == LossKind.ZERO_ONE:
        return np.minimum(eta, 1.0 - eta)
    if loss == LossKind.HINGE:
        return 1.0 - np.abs(2.0 * eta - 1.0)
    # entr(0) = 0 gives the limit at eta in {0, 1}
    return entr(eta) + entr(1.0 - eta)


def evaluate(function: Callable, points: np.ndarray) -> np.ndarray:
    """
    :param function: A classifier, vectorized over (m, d) arrays
    :param points: An (m, d) array
    :return: Its (m,) real values
    """
    return np.asarray(function(points), dtype=float).reshape(-1)


# pylint: disable=too-many-arguments,too-many-positional-arguments
def excess_risk(function: Callable, dist: DistributionSpec, loss: LossKind,
                method: str = QUADRATURE, resolution: int = DEFAULT_RESOLUTION,
                samples: int = 100_000, seed: int = 0) -> RiskReport:
    """
    :param function: The classifier f, a vectorized real-valued map
    :param dist: The distribution
    :param loss: Which loss
    :param method: "quadrature" or "monte_carlo"
    :param resolution: Quadrature cells per unit length
    :param samples: Monte Carlo draws of X
    :param seed: Monte Carlo seed
    :return: A RiskReport
    """
    loss = LossKind(loss)
    if method == QUADRATURE:
        quadrature = DistributionQuadrature.for_distribution(dist, [function], resolution)
        eta = dist.eta_values(quadrature.points)
        risk_value = quadrature.expect(conditional_risk(loss, evaluate(function, quadrature.points), eta))
        bayes = quadrature.expect(bayes_integrand(loss, eta))
        return RiskReport(loss.value, risk_value, bayes, risk_value - bayes, method)

    if method != MONTE_CARLO:
        raise ParameterError(f"Unknown risk method '{method}'")
    if samples < 1:
        raise ParameterError(f"Need at least one Monte Carlo draw, got {samples}")
    warning = samples < MIN_PRECISE_SAMPLES
    if warning:
        LOGGER.warning("Monte Carlo risk with only %s draws is imprecise", samples)

    points = dist.marginal.sample(samples, np.random.default_rng(seed))
    eta = dist.eta_values(points)
    risks = conditional_risk(loss, evaluate(function, points), eta)
    bayes = bayes_integrand(loss, eta)
    differences = risks - bayes
    error = float(np.std(differences, ddof=1) / np.sqrt(samples)) if samples > 1 else float("inf")
    return RiskReport(loss.value, float(np.mean(risks)), float(np.mean(bayes)),
                      float(np.mean(differences)), method, error, samples, warning)


def risk(function: Callable, dist: DistributionSpec, loss: LossKind,
         resolution: int = DEFAULT_RESOLUTION) -> float:
    """
    :return: The risk of the function by quadrature
    """
    return excess_risk(function, dist, loss, QUADRATURE, resolution).risk
