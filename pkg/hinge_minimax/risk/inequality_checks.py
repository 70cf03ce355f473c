
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
Numerical checks of the inequalities relating excess risks of
different losses, and of the variance bound for the hinge loss.
"""
import math
from typing import Callable

import numpy as np

from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.noise_profile import NoiseProfile
from hinge_minimax.dist.quadrature import DEFAULT_RESOLUTION
from hinge_minimax.dist.quadrature import DistributionQuadrature
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.losses import loss_value
from hinge_minimax.risk.losses import truncate
from hinge_minimax.risk.predicate_report import PredicateReport
from hinge_minimax.risk.risk_evaluator import evaluate
from hinge_minimax.risk.risk_evaluator import excess_risk
from hinge_minimax.risk.truncated_function import TruncatedFunction


def variance_bound_check(function: Callable, dist: DistributionSpec, profile: NoiseProfile,
                         resolution: int = DEFAULT_RESOLUTION) -> PredicateReport:
    """
    Checks that the L2 distance to the Bayes classifier is controlled by
    the hinge excess risk:
    int |f - g|^2 dP_X <= 6 (E^hinge(f))^(s/(s+1)) max{1, alpha, 1/tau}.

    :param function: A classifier with values in [-1, 1]
    :param dist: A distribution satisfying the noise condition of the profile
    :param profile: The noise profile
    :param resolution: Quadrature cells per unit length
    :return: A PredicateReport with one row
    """
    quadrature = DistributionQuadrature.for_distribution(dist, [function], resolution)
    values = evaluate(function, quadrature.points)
    bayes = dist.bayes_classifier(quadrature.points)
    lhs = quadrature.expect((values - bayes) ** 2)

    hinge_excess = max(0.0, excess_risk(function, dist, LossKind.HINGE, resolution=resolution).excess)
    # 0^0 = 1
    power = math.pow(hinge_excess, profile.exponent_ratio()) if profile.exponent_ratio() > 0.0 else 1.0
    rhs = 6.0 * power * profile.variance_constant()

    report = PredicateReport("variance_bound")
    report.add("l2_distance_vs_hinge_excess", lhs, rhs)
    return report


def comparison_check(function: Callable, dist: DistributionSpec,
                     resolution: int = DEFAULT_RESOLUTION) -> PredicateReport:
    """
    Checks E(f) <= E^hinge(T_1 o f) and E(f) <= sqrt(2) (E^logistic(f))^(1/2).

    :param function: A real-valued classifier
    :param dist: The distribution
    :param resolution: Quadrature cells per unit length
    :return: A PredicateReport with one row per inequality
    """
    truncated = TruncatedFunction(function, 1.0, dist.d)
    zero_one = excess_risk(function, dist, LossKind.ZERO_ONE, resolution=resolution).excess
    hinge = excess_risk(truncated, dist, LossKind.HINGE, resolution=resolution).excess
    logistic = max(0.0, excess_risk(function, dist, LossKind.LOGISTIC, resolution=resolution).excess)

    report = PredicateReport("comparison")
    report.add("zero_one_vs_truncated_hinge", zero_one, hinge)
    report.add("zero_one_vs_logistic", zero_one, math.sqrt(2.0) * math.sqrt(logistic))
    return report


def truncation_check(margins, labels=(-1.0, 1.0)) -> PredicateReport:
    """
    Checks hinge(y T_1(t)) <= hinge(y t) pointwise on a margin grid.

    :param margins: Values t
    :param labels: Labels y
    :return: A PredicateReport with the worst row per label
    """
    margins = np.asarray(margins, dtype=float)
    report = PredicateReport("hinge_truncation")
    for label in labels:
        truncated = loss_value(LossKind.HINGE, label * truncate(1.0, margins))
        plain = loss_value(LossKind.HINGE, label * margins)
        worst = int(np.argmax(truncated - plain))
        report.add(f"label_{int(label):+d}", float(truncated[worst]), float(plain[worst]))
    return report
