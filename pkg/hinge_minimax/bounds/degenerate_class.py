
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

import logging
from typing import Sequence

import numpy as np

from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.marginal_spec import MarginalSpec
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.chom_factory import constant
from hinge_minimax.funcspace.chom_factory import single_core
from hinge_minimax.funcspace.compositional_function import CompositionalFunction
from hinge_minimax.funcspace.grid_table_core import GridTableCore
from hinge_minimax.funcspace.holder_probe import holder_seminorm_probe
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.predicate_report import PredicateReport
from hinge_minimax.risk.risk_evaluator import excess_risk

TABLE_CELLS = 3
NORM_PROBE_RESOLUTION = 65

LOGGER = logging.getLogger(__name__)


def minus_one(points) -> np.ndarray:
    """
    :return: The constant classifier -1
    """
    return np.full(np.asarray(points).shape[0], -1.0)


def random_member(radius: float, d: int, beta: float, rng: np.random.Generator) -> CompositionalFunction:
    """
    :return: A random multilinear table function of all d coordinates,
            scaled so its probed Hoelder norm equals the radius
    """
    table = rng.random((TABLE_CELLS + 1,) * d)
    norm = holder_seminorm_probe(GridTableCore(table), beta, NORM_PROBE_RESOLUTION, d)
    scaled = GridTableCore(table * radius / norm)
    return single_core(d, scaled, tuple(range(1, d + 1)), beta, radius)


# pylint: disable=too-many-arguments,too-many-positional-arguments
def degenerate_class_check(radius: float, n: int, seeds: Sequence[int], d: int = 1,
                           beta: float = 1.0, tolerance: float = 1e-12) -> PredicateReport:
    """
    When the Hoelder radius is at most 1/2 every eta of the class stays
    below 1/2, so the constant -1 is a Bayes classifier.  Checks that its
    excess misclassification risk vanishes on sampled members: the
    constant eta = radius and, per seed, n random members.

    :param radius: The Hoelder radius r of the class
    :param n: Random members per seed
    :param seeds: Seeds of the random members
    :param d: Input dimension
    :param beta: Smoothness order, at most 1 for the table members
    :param tolerance: Allowed excess
    :return: A PredicateReport with one row per member
    """
    if radius <= 0.0 or n < 0 or d < 1:
        raise ParameterError(f"Need r > 0, n >= 0 and d >= 1, got {radius}, {n}, {d}")
    marginal = MarginalSpec.lebesgue(d)
    report = PredicateReport("degenerate_class", tolerance)
    members = [("constant", constant(d, min(radius, 1.0), beta, radius))]
    for seed in seeds:
        rng = np.random.default_rng(seed)
        members.extend((f"seed{seed}_member{index}", random_member(min(radius, 1.0), d, beta, rng))
                       for index in range(n))
    for name, eta in members:
        excess = excess_risk(minus_one, DistributionSpec(eta, marginal), LossKind.ZERO_ONE).excess
        report.add(name, excess, 0.0)
    LOGGER.info("Constant -1 classifier over %d members with r=%s: %s", len(members), radius,
                "passed" if report.passed else "failed")
    return report
