
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
from typing import List
from typing import Optional

import numpy as np
from scipy.special import expit

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.relunet.relu_network import ReluNetwork
from hinge_minimax.relunet.relu_network import relu

SQUARED = "squared"
HINGE = "hinge"
LOGISTIC = "logistic"

LOGGER = logging.getLogger(__name__)


def initial_network(input_dim: int, depth: int, width: int, seed: int,
                    max_magnitude: Optional[float] = None) -> ReluNetwork:
    """
    :param input_dim: Number of inputs
    :param depth: Number of hidden layers, >= 1
    :param width: Units per hidden layer
    :param seed: Seed of the random initialization
    :param max_magnitude: Optional bound B on every parameter
    :return: A randomly initialized network
    """
    if depth < 1 or width < 1:
        raise ParameterError(f"Need depth and width >= 1, got {depth}, {width}")
    rng = np.random.default_rng(seed)
    sizes = [input_dim] + [width] * depth + [1]
    weights = [rng.normal(0.0, math.sqrt(2.0 / fan_in), size=(fan_out, fan_in))
               for fan_in, fan_out in zip(sizes[:-1], sizes[1:])]
    shifts = [rng.uniform(-0.5, 0.5, size=width) for _ in range(depth)]
    if max_magnitude is not None:
        weights = [np.clip(weight, -max_magnitude, max_magnitude) for weight in weights]
        shifts = [np.clip(shift, -max_magnitude, max_magnitude) for shift in shifts]
    return ReluNetwork(weights, shifts)


class NetworkTrainer():
    """
    Gradient descent for ReluNetworks with a self-tuning step: gradients
    come from the full batch or from seeded minibatches, and a step is
    kept only when the full training loss does not increase, after which the
    step grows by 10%; a rejected step is undone and halved.  After every
    step the parameters are projected back into the budget: entries are
    clipped to [-B, B] and only the S largest in magnitude are kept.
    """

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def __init__(self, loss: str = SQUARED, steps: int = 2000, learning_rate: float = 0.05,
                 max_magnitude: Optional[float] = None, max_nonzero: Optional[int] = None,
                 batch_size: Optional[int] = None, seed: int = 0):
        """
        :param loss: "squared", "hinge" or "logistic"
        :param steps: Number of attempted steps
        :param learning_rate: Initial step size
        :param max_magnitude: B, or None for no clipping
        :param max_nonzero: S, or None for no sparsity constraint
        :param batch_size: Minibatch size, or None for full-batch gradients
        :param seed: Seed of the minibatch draws
        """
        if loss not in (SQUARED, HINGE, LOGISTIC):
            raise ParameterError(f"Unknown training loss '{loss}'")
        self.loss = loss
        self.steps = int(steps)
        self.learning_rate = float(learning_rate)
        self.max_magnitude = max_magnitude
        self.max_nonzero = max_nonzero
        self.batch_size = batch_size
        self.seed = int(seed)

    def objective(self, outputs: np.ndarray, targets: np.ndarray) -> float:
        """
        :param outputs: Network outputs
        :param targets: Regression targets or labels in {-1, +1}
        :return: The mean training loss
        """
        if self.loss == SQUARED:
            return float(np.mean((outputs - targets) ** 2))
        margins = targets * outputs
        if self.loss == HINGE:
            return float(np.mean(np.maximum(0.0, 1.0 - margins)))
        return float(np.mean(np.logaddexp(0.0, -margins)))

    def output_gradient(self, outputs: np.ndarray, targets: np.ndarray) -> np.ndarray:
        """
        :return: Derivative of the mean loss with respect to each output
        """
        count = outputs.shape[0]
        if self.loss == SQUARED:
            return 2.0 * (outputs - targets) / count
        margins = targets * outputs
        if self.loss == HINGE:
            return -targets * (margins < 1.0) / count
        return -targets * expit(-margins) / count

    @staticmethod
    def gradients(net: ReluNetwork, points: np.ndarray, output_gradient: np.ndarray) -> List[np.ndarray]:
        """
        Backpropagation through the network.

        :return: Gradients shaped like net.parameter_arrays()
        """
        hidden = [points]
        active = []
        for weight, shift in zip(net.weights[:-1], net.shifts):
            pre = hidden[-1] @ weight.T - shift
            active.append(pre > 0.0)
            hidden.append(relu(pre))

        weight_grads = [None] * len(net.weights)
        shift_grads = [None] * len(net.shifts)
        upstream = output_gradient.reshape(-1, 1)
        weight_grads[-1] = upstream.T @ hidden[-1]
        for layer in range(net.depth - 1, -1, -1):
            upstream = (upstream @ net.weights[layer + 1]) * active[layer]
            shift_grads[layer] = -np.sum(upstream, axis=0)
            weight_grads[layer] = upstream.T @ hidden[layer]
        return weight_grads + shift_grads

    def project(self, arrays: List[np.ndarray]) -> List[np.ndarray]:
        """
        :param arrays: Parameter arrays
        :return: Copies clipped to [-B, B] with all but the S largest entries zeroed
        """
        arrays = [array.copy() for array in arrays]
        if self.max_magnitude is not None:
            arrays = [np.clip(array, -self.max_magnitude, self.max_magnitude) for array in arrays]
        if self.max_nonzero is not None:
            flat = np.concatenate([array.ravel() for array in arrays])
            if np.count_nonzero(flat) > self.max_nonzero:
                cutoff = np.sort(np.abs(flat))[::-1][self.max_nonzero - 1] if self.max_nonzero > 0 else np.inf
                kept = 0
                for array in arrays:
                    mask = np.abs(array) >= cutoff
                    # Ties at the cutoff are kept in parameter order until S is reached
                    allowed = max(0, self.max_nonzero - kept)
                    positions = np.flatnonzero(mask)
                    mask.flat[positions[allowed:]] = False
                    kept += min(allowed, positions.shape[0])
                    array[~mask] = 0.0
        return arrays

    def fit(self, net: ReluNetwork, points: np.ndarray, targets: np.ndarray) -> ReluNetwork:
        """
        :param net: Starting network; it is not modified
        :param points: An (m, d) array
        :param targets: An (m,) array
        :return: The trained network
        """
        points = np.asarray(points, dtype=float)
        targets = np.asarray(targets, dtype=float).reshape(-1)
        count = len(net.weights)
        arrays = self.project(net.parameter_arrays())
        current = ReluNetwork(arrays[:count], arrays[count:])
        loss = self.objective(current.forward(points), targets)
        rate = self.learning_rate
        rng = np.random.default_rng(self.seed)

        for _ in range(self.steps):
            batch = slice(None)
            if self.batch_size is not None and self.batch_size < points.shape[0]:
                batch = rng.choice(points.shape[0], size=self.batch_size, replace=False)
            grads = self.gradients(current, points[batch],
                                   self.output_gradient(current.forward(points[batch]), targets[batch]))
            candidate_arrays = self.project([array - rate * grad
                                             for array, grad in zip(current.parameter_arrays(), grads)])
            candidate = ReluNetwork(candidate_arrays[:count], candidate_arrays[count:])
            candidate_loss = self.objective(candidate.forward(points), targets)
            if candidate_loss <= loss:
                current, loss = candidate, candidate_loss
                rate *= 1.1
            else:
                rate *= 0.5
                if rate < 1e-12:
                    break

        LOGGER.debug("Training ended with %s loss %.6g", self.loss, loss)
        return current
