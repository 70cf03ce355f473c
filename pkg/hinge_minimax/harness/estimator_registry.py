
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
The estimators a rate experiment can run, keyed by config name.
Each takes (data, config, seed) and returns a vectorized classifier.
"""
import dataclasses
import math
from typing import Callable
from typing import Dict

from hinge_minimax.dist.dataset import Dataset
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.covering_net_estimator import covering_net_estimator
from hinge_minimax.estimators.finite_erm import erm_finite
from hinge_minimax.estimators.gradient_erm import erm_gradient
from hinge_minimax.estimators.hyperparam_schedule import hyperparam_schedule
from hinge_minimax.estimators.threshold_classifier_set import ThresholdClassifierSet
from hinge_minimax.harness.experiment_config import COVERING_NET
from hinge_minimax.harness.experiment_config import GRADIENT_ERM
from hinge_minimax.harness.experiment_config import THRESHOLD
from hinge_minimax.harness.experiment_config import ExperimentConfig
from hinge_minimax.risk.loss_kind import LossKind

Estimator = Callable[[Dataset, ExperimentConfig, int], Callable]


def run_covering_net(data: Dataset, cfg: ExperimentConfig, seed: int) -> Callable:
    """
    ERM over a covering net of the configured space, radius shrinking with n.
    """
    return covering_net_estimator(data, cfg.space, cfg.noise.s, cfg.noise.tau, seed,
                                  LossKind.HINGE, cfg.member_cap)


def run_gradient_erm(data: Dataset, cfg: ExperimentConfig, seed: int) -> Callable:
    """
    Hinge-loss training of a network sized by the hyperparameter schedule.
    """
    space = cfg.space
    budget = hyperparam_schedule(len(data), space.beta, space.q, space.d_lower, cfg.noise.s,
                                 cfg.schedule_a, cfg.schedule_b)
    training = dataclasses.replace(cfg.training, seed=seed)
    return erm_gradient(data, budget, LossKind.HINGE, training)


def run_threshold(data: Dataset, cfg: ExperimentConfig, seed: int) -> Callable:
    """
    ERM over axis thresholds at multiples of 1 / (factor * n) on the
    coordinate eta reads.
    """
    del seed
    axis = int(cfg.distribution.get("axis", 1)) - 1
    if not 0 <= axis < data.dim:
        raise ParameterError(f"Threshold axis {axis + 1} outside dimension {data.dim}")
    classifiers = ThresholdClassifierSet(axis, max(1, math.ceil(cfg.threshold_grid_factor * len(data))))
    return classifiers[erm_finite(data, classifiers, LossKind.HINGE)]


ESTIMATORS: Dict[str, Estimator] = {
    COVERING_NET: run_covering_net,
    GRADIENT_ERM: run_gradient_erm,
    THRESHOLD: run_threshold,
}


def estimator_for(name: str) -> Estimator:
    """
    :param name: A config estimator name
    :return: The function running it
    """
    if name not in ESTIMATORS:
        raise ParameterError(f"Unknown estimator '{name}', expected one of {sorted(ESTIMATORS)}")
    return ESTIMATORS[name]
