
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
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Tuple

import numpy as np

from hinge_minimax.dist.dataset import Dataset
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.train_config import TrainConfig
from hinge_minimax.relunet.network_budget import NetworkBudget
from hinge_minimax.relunet.network_budget import budget_of
from hinge_minimax.relunet.network_trainer import NetworkTrainer
from hinge_minimax.relunet.network_trainer import initial_network
from hinge_minimax.relunet.relu_network import ReluNetwork
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.losses import empirical_risk

LOGGER = logging.getLogger(__name__)


def architecture(budget: NetworkBudget, cfg: TrainConfig, input_dim: int) -> Tuple[int, int]:
    """
    :return: (depth, width) of the trained networks, inside the budget and the config caps
    """
    if budget.S < input_dim:
        raise ParameterError(f"A budget of S={budget.S} nonzero parameters cannot read {input_dim} inputs")
    return min(budget.G, cfg.max_depth), min(budget.N, cfg.max_width)


def zero_network(input_dim: int, depth: int, width: int) -> ReluNetwork:
    """
    :return: The network with all parameters 0
    """
    sizes = [input_dim] + [width] * depth + [1]
    return ReluNetwork([np.zeros((rows, columns)) for columns, rows in zip(sizes[:-1], sizes[1:])],
                       [np.zeros(width) for _ in range(depth)])


def cap_sup_norm(net: ReluNetwork, budget: NetworkBudget) -> ReluNetwork:
    """
    :return: The network with its output layer scaled so its grid sup norm is at most F
    """
    if math.isinf(budget.F):
        return net
    sup = budget_of(net).sup_estimate
    if sup <= budget.F:
        return net
    weights = [weight.copy() for weight in net.weights]
    weights[-1] *= budget.F / sup
    return ReluNetwork(weights, [shift.copy() for shift in net.shifts])


def erm_gradient(data: Dataset, budget: NetworkBudget, loss: LossKind = LossKind.HINGE,
                 cfg: TrainConfig = None) -> ReluNetwork:
    """
    Approximate empirical risk minimization over a network budget:
    projected gradient descent from several seeded starts, keeping the
    network of smallest empirical loss.  The zero network, which every
    budget contains, competes as well.

    :param data: A nonempty sample
    :param budget: The class to search
    :param loss: HINGE or LOGISTIC
    :param cfg: Training configuration
    :return: The selected network
    """
    cfg = cfg or TrainConfig()
    loss = LossKind(loss)
    if len(data) == 0:
        raise ParameterError("Gradient ERM needs at least one sample")
    if loss == LossKind.ZERO_ONE:
        raise ParameterError("Gradient ERM needs a differentiable surrogate loss")
    depth, width = architecture(budget, cfg, data.dim)
    trainer_kwargs = {
        "loss": loss.value,
        "steps": cfg.steps,
        "learning_rate": cfg.learning_rate,
        "max_magnitude": budget.B if cfg.project else None,
        "max_nonzero": budget.S if cfg.project else None,
        "batch_size": cfg.batch_size,
    }
    seeds = [int(child.generate_state(1)[0]) for child in np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)]

    def train(seed: int) -> ReluNetwork:
        start = initial_network(data.dim, depth, width, seed, budget.B)
        return cap_sup_norm(NetworkTrainer(seed=seed, **trainer_kwargs).fit(start, data.x, data.y), budget)

    if cfg.max_workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.max_workers) as executor:
            candidates = list(executor.map(train, seeds))
    else:
        candidates = [train(seed) for seed in seeds]
    candidates.append(zero_network(data.dim, depth, width))

    losses = [empirical_risk(loss, net(data.x), data.y) for net in candidates]
    best = int(np.argmin(losses))
    LOGGER.info("Gradient ERM (depth %d, width %d, %d restarts): best %s loss %.6g from candidate %d",
                depth, width, cfg.restarts, loss.value, losses[best], best)
    return candidates[best]
