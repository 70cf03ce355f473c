
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
The oracle inequality for empirical phi-risk minimizers, evaluated as a
calculator and checked by simulation.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List

import numpy as np

from hinge_minimax.bounds.oracle_params import OracleParams
from hinge_minimax.bounds.oracle_params import hinge_oracle_params
from hinge_minimax.bounds.oracle_report import OracleReport
from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.sampler import sample
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.finite_classifier_set import FiniteClassifierSet
from hinge_minimax.estimators.finite_erm import erm_finite
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.risk_evaluator import excess_risk

# Stands in for eps = 0 when theta > 0, where the variance term blows up
SMALL_EPS = 1e-6
EPS_GRID = (0.0, 0.5, 1.0)

LOGGER = logging.getLogger(__name__)


def oracle_rhs(p: OracleParams) -> float:
    """
    :param p: The oracle parameters
    :return: |2+eps| J gamma + 8 M (1+eps) log W / n
             + 8 (Gamma (1+eps)^2 log W / (n eps^theta))^(1/(2-theta))
             + (1+eps) approx_term, with 0^0 = 1 and z/0 = inf
    """
    log_w = math.log(p.W)
    cover = abs(2.0 + p.eps) * p.J * p.gamma
    bias = 8.0 * p.M * (1.0 + p.eps) * log_w / p.n
    eps_power = p.eps ** p.theta
    if eps_power == 0.0:
        return math.inf
    variance = 8.0 * (p.Gamma * (1.0 + p.eps) ** 2 * log_w / (p.n * eps_power)) ** (1.0 / (2.0 - p.theta))
    return cover + bias + variance + (1.0 + p.eps) * p.approx_term


def eps_grid(theta: float) -> List[float]:
    """
    :return: The epsilons the bound is minimized over
    """
    return [SMALL_EPS if eps == 0.0 and theta > 0.0 else eps for eps in EPS_GRID]


# pylint: disable=too-many-arguments,too-many-positional-arguments,too-many-locals
def oracle_verify(classifiers: FiniteClassifierSet, dist: DistributionSpec, n: int,
                  replications: int, seed: int = 0, max_workers: int = 4) -> OracleReport:
    """
    Draws samples of size n, runs hinge ERM over the class on each and
    averages the excess hinge risk of the selected classifier.  Members
    take values in {-1,+1}, so truncation at 1 leaves them unchanged.

    :param classifiers: A finite class of {-1,+1}-valued classifiers
    :param dist: A distribution with a declared noise profile
    :param n: Sample size
    :param replications: Number of samples drawn, >= 2
    :param seed: Master seed; replication seeds are spawned from it
    :param max_workers: Threads running replications
    :return: The OracleReport
    """
    if dist.noise is None:
        raise ParameterError(f"Distribution '{dist.name}' declares no noise profile")
    if replications < 2 or n < 1:
        raise ParameterError(f"Need n >= 1 and at least two replications, got {n}, {replications}")

    member_excess = np.array([excess_risk(member, dist, LossKind.HINGE).excess
                              for member in classifiers.members])
    seeds = [int(child.generate_state(1)[0]) for child in np.random.SeedSequence(seed).spawn(replications)]

    def replicate(replication_seed: int) -> float:
        index = erm_finite(sample(dist, n, replication_seed), classifiers, LossKind.HINGE)
        return float(member_excess[index])

    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as executor:
        excesses = np.array(list(executor.map(replicate, seeds)))

    approx_term = max(0.0, float(np.min(member_excess)))
    base = hinge_oracle_params(n, len(classifiers), dist.noise, approx_term)
    rhs_by_eps = {eps: oracle_rhs(base.with_eps(eps)) for eps in eps_grid(base.theta)}
    report = OracleReport(n=n, replications=replications, members=len(classifiers),
                          lhs=float(np.mean(excesses)),
                          standard_error=float(np.std(excesses, ddof=1) / math.sqrt(replications)),
                          approx_term=approx_term, rhs=min(rhs_by_eps.values()), rhs_by_eps=rhs_by_eps)
    LOGGER.info("Oracle check n=%d over %d members: mean excess %.5g (se %.2g) vs bound %.5g",
                n, len(classifiers), report.lhs, report.standard_error, report.rhs)
    return report
