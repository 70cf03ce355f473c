
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
Explicit ReLU approximation of compositional functions, built one
component at a time and refined until a measured sup-error target holds.
"""
import logging
from typing import Dict
from typing import List
from typing import Tuple

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.errors.resolution_cap_error import ResolutionCapError
from hinge_minimax.funcspace.compositional_function import CompositionalFunction
from hinge_minimax.funcspace.constant_core import ConstantCore
from hinge_minimax.funcspace.coordinate_core import CoordinateCore
from hinge_minimax.funcspace.core import Core
from hinge_minimax.funcspace.holder_component import HolderComponent
from hinge_minimax.funcspace.max_component import MaxComponent
from hinge_minimax.funcspace.tensor_grid import tensor_grid
from hinge_minimax.relunet.gadgets import constant_stack
from hinge_minimax.relunet.gadgets import interpolation_1d_stack
from hinge_minimax.relunet.gadgets import kuhn_2d_stack
from hinge_minimax.relunet.gadgets import kuhn_2d_values
from hinge_minimax.relunet.gadgets import max_stack
from hinge_minimax.relunet.layer_stack import LayerStack
from hinge_minimax.relunet.layer_stack import parallel
from hinge_minimax.relunet.network_trainer import NetworkTrainer
from hinge_minimax.relunet.network_trainer import initial_network
from hinge_minimax.relunet.relu_network import ReluNetwork

DEFAULT_START_RESOLUTION = 8
DEFAULT_RESOLUTION_CAP = 1024

# Dense matrices of the two-variable interpolant grow like cells^4
KUHN_CELL_CAP = 32
TRAINED_WIDTH_CAP = 64
TRAINING_STEPS = 1500

VALIDATION_GRID_RESOLUTION = 4097
VALIDATION_GRID_CAP = 200_000
VALIDATION_SAMPLES = 4096

LOGGER = logging.getLogger(__name__)


def _selection(input_dim: int, index: int) -> LayerStack:
    row = np.zeros((1, input_dim))
    row[0, index] = 1.0
    return LayerStack.linear(row)


def _one_variable(core: Core, resolution: int) -> LayerStack:
    uniform = np.linspace(0.0, 1.0, resolution + 1)
    extra = [value for value in core.breakpoints().get(0, [])
             if 0.0 < value < 1.0 and np.min(np.abs(uniform - value)) > 1e-9]
    knots = np.unique(np.concatenate([uniform, extra]))
    points = np.zeros((knots.shape[0], core.dim))
    points[:, 0] = knots
    return interpolation_1d_stack(knots, core(points))


def _trained(core: Core, resolution: int, seed: int) -> LayerStack:
    width = min(resolution, TRAINED_WIDTH_CAP)
    points = np.vstack([tensor_grid(core.dim, 9),
                        np.random.default_rng(seed).random((2048, core.dim))])
    net = initial_network(core.dim, 2, width, seed)
    trainer = NetworkTrainer(steps=TRAINING_STEPS, learning_rate=0.01, seed=seed)
    return LayerStack.from_network(trainer.fit(net, points, core(points)))


class ChomApproximator():
    """
    Builds a ReLU network for a CompositionalFunction at a given
    resolution.  Each component becomes a LayerStack reading the whole
    layer input; the stacks of one layer run in parallel and layers are
    chained, so the network mirrors the layer structure of f.

    Constant and coordinate cores are exact, maxima are exact trees of
    pairwise maxima, one-variable cores are interpolated on uniform
    knots refined by their breakpoints, two-variable cores use the
    triangulated grid interpolant and wider cores a trained network.
    """

    def __init__(self, f: CompositionalFunction, seed: int = 0):
        """
        :param f: The function to approximate
        :param seed: Seed for the trained components
        """
        self.f = f
        self.seed = int(seed)
        self._cache: Dict[Tuple[int, int, int], LayerStack] = {}

    def component_stack(self, layer_index: int, position: int, resolution: int) -> LayerStack:
        """
        :param layer_index: Which layer of f
        :param position: Which component of that layer
        :param resolution: Interpolation intervals per axis
        :return: A one-output stack reading the whole layer input
        """
        component = self.f.layers[layer_index][position]
        input_dim = component.input_dim
        columns = [index - 1 for index in component.active_indices]
        if isinstance(component, MaxComponent):
            return max_stack(input_dim, columns)
        if not isinstance(component, HolderComponent):
            raise ParameterError(f"Cannot approximate component {component!r}")

        core = component.core
        if isinstance(core, ConstantCore):
            return constant_stack(input_dim, core.value)
        if isinstance(core, CoordinateCore):
            return _selection(input_dim, columns[core.index - 1])
        if core.first_variable_only or core.dim == 1:
            return _one_variable(core, resolution).embed(input_dim, columns[:1])

        if core.dim == 2:
            effective = min(resolution, KUHN_CELL_CAP)
        else:
            effective = min(resolution, TRAINED_WIDTH_CAP)
        key = (layer_index, position, effective)
        if key not in self._cache:
            if core.dim == 2:
                self._cache[key] = kuhn_2d_stack(effective, kuhn_2d_values(core, effective))
            else:
                self._cache[key] = _trained(core, effective, self.seed + 7919 * layer_index + position)
        return self._cache[key].embed(input_dim, columns)

    def build(self, resolution: int) -> ReluNetwork:
        """
        :param resolution: Interpolation intervals per axis
        :return: The network of the chained layer approximations
        """
        stack = None
        for layer_index, layer in enumerate(self.f.layers):
            layer_stack = parallel([self.component_stack(layer_index, position, resolution)
                                    for position in range(len(layer))])
            stack = layer_stack if stack is None else stack.then(layer_stack)
        return stack.to_network()


def validation_points(f: CompositionalFunction, samples: int = VALIDATION_SAMPLES, seed: int = 0) -> np.ndarray:
    """
    :param f: The function being approximated
    :param samples: Number of uniform random points added to the grid
    :param seed: Seed of the random points
    :return: A tensor grid over the coordinates f reads, with the other
            coordinates at 1/2, followed by random points of the cube
    """
    active = f.active_input_indices()
    grid = tensor_grid(max(1, len(active)), VALIDATION_GRID_RESOLUTION, cap=VALIDATION_GRID_CAP)
    points = np.full((grid.shape[0], f.d), 0.5)
    if active:
        points[:, active] = grid
    return np.vstack([points, np.random.default_rng(seed).random((samples, f.d))])


def sup_error(net: ReluNetwork, f: CompositionalFunction, points: np.ndarray) -> float:
    """
    :return: max |net(x) - f(x)| over the points
    """
    return float(np.max(np.abs(net.forward(points) - f(points, check_range=False))))


# pylint: disable=too-many-arguments,too-many-positional-arguments
def approximate_chom(f: CompositionalFunction, delta: float,
                     start_resolution: int = DEFAULT_START_RESOLUTION,
                     resolution_cap: int = DEFAULT_RESOLUTION_CAP,
                     seed: int = 0, target_error: float = None) -> ReluNetwork:
    """
    Doubles the interpolation resolution until the measured sup error
    against f is at most delta / 7.

    :param f: A validated compositional function
    :param delta: Threshold width in (0, 1/2]
    :param start_resolution: First resolution tried
    :param resolution_cap: Largest resolution tried
    :param seed: Seed for validation points and trained components
    :param target_error: Overrides the delta / 7 target
    :return: The approximating network
    """
    if not 0.0 < delta <= 0.5:
        raise ParameterError(f"delta must lie in (0, 1/2], got {delta}")
    if start_resolution < 1 or resolution_cap < start_resolution:
        raise ParameterError(f"Bad resolution range [{start_resolution}, {resolution_cap}]")
    target = delta / 7.0 if target_error is None else float(target_error)

    approximator = ChomApproximator(f, seed)
    points = validation_points(f, seed=seed)
    best = np.inf
    resolution = start_resolution
    tried: List[int] = []
    while True:
        net = approximator.build(resolution)
        error = sup_error(net, f, points)
        tried.append(resolution)
        best = min(best, error)
        LOGGER.debug("Resolution %d gives sup error %.3e (target %.3e)", resolution, error, target)
        if error <= target:
            LOGGER.info("Approximated f to sup error %.3e at resolution %d, depth %d",
                        error, resolution, net.depth)
            return net
        if 2 * resolution > resolution_cap:
            LOGGER.warning("Resolutions %s never reached sup error %.3e", tried, target)
            raise ResolutionCapError(best, target, resolution)
        resolution *= 2
