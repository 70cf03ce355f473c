
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

from typing import List
from typing import Sequence

import numpy as np
from scipy.linalg import block_diag

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.relunet.relu_network import ReluNetwork
from hinge_minimax.relunet.relu_network import relu


class LayerStack():
    """
    A ReLU network with any number of outputs, used while assembling
    networks from gadgets.  Same layout as ReluNetwork: weights
    W_0..W_L and shifts v_1..v_L.
    """

    def __init__(self, weights: Sequence[np.ndarray], shifts: Sequence[np.ndarray]):
        self.weights: List[np.ndarray] = [np.atleast_2d(np.asarray(w, dtype=float)) for w in weights]
        self.shifts: List[np.ndarray] = [np.asarray(v, dtype=float).reshape(-1) for v in shifts]
        if len(self.shifts) != len(self.weights) - 1:
            raise ParameterError("A stack needs one shift vector per hidden layer")

    @classmethod
    def from_network(cls, net: ReluNetwork) -> "LayerStack":
        """
        :return: A stack with the layers of the network
        """
        return cls(net.weights, net.shifts)

    @classmethod
    def linear(cls, matrix) -> "LayerStack":
        """
        :param matrix: An (outputs, inputs) matrix
        :return: The depth-0 stack x -> matrix x
        """
        return cls([matrix], [])

    @property
    def input_dim(self) -> int:
        """
        :return: Number of inputs
        """
        return self.weights[0].shape[1]

    @property
    def output_dim(self) -> int:
        """
        :return: Number of outputs
        """
        return self.weights[-1].shape[0]

    @property
    def depth(self) -> int:
        """
        :return: Number of hidden layers
        """
        return len(self.shifts)

    def forward(self, points: np.ndarray) -> np.ndarray:
        """
        :param points: An (m, input_dim) array
        :return: An (m, output_dim) array
        """
        hidden = np.asarray(points, dtype=float)
        for weight, shift in zip(self.weights[:-1], self.shifts):
            hidden = relu(hidden @ weight.T - shift)
        return hidden @ self.weights[-1].T

    def then(self, outer: "LayerStack") -> "LayerStack":
        """
        :param outer: A stack reading this stack's outputs
        :return: outer o self; depths add and the two affine maps at the seam merge
        """
        if outer.input_dim != self.output_dim:
            raise ParameterError(f"Cannot feed {self.output_dim} outputs into {outer.input_dim} inputs")
        seam = outer.weights[0] @ self.weights[-1]
        return LayerStack(self.weights[:-1] + [seam] + outer.weights[1:], self.shifts + outer.shifts)

    def embed(self, input_dim: int, indices: Sequence[int]) -> "LayerStack":
        """
        :param input_dim: The wider input dimension
        :param indices: 0-based coordinates of the wider input this stack reads, in order
        :return: The same map reading selected coordinates of a wider input
        """
        selection = np.zeros((len(indices), input_dim))
        selection[np.arange(len(indices)), list(indices)] = 1.0
        return LayerStack.linear(selection).then(self)

    def padded(self, depth: int) -> "LayerStack":
        """
        Adds hidden layers after the last one using s(z) - s(-z) = z, so
        outputs of either sign pass through unchanged.

        :param depth: Target depth, at least the current one
        :return: A stack of exactly that depth computing the same map
        """
        extra = depth - self.depth
        if extra < 0:
            raise ParameterError(f"Cannot pad depth {self.depth} down to {depth}")
        if extra == 0:
            return self
        outputs = self.output_dim
        last = self.weights[-1]
        weights = self.weights[:-1] + [np.vstack([last, -last])]
        shifts = self.shifts + [np.zeros(2 * outputs)]
        for _ in range(extra - 1):
            weights.append(np.eye(2 * outputs))
            shifts.append(np.zeros(2 * outputs))
        weights.append(np.hstack([np.eye(outputs), -np.eye(outputs)]))
        return LayerStack(weights, shifts)

    def to_network(self) -> ReluNetwork:
        """
        :return: The ReluNetwork of a one-output stack
        """
        return ReluNetwork(self.weights, self.shifts)


def parallel(stacks: Sequence[LayerStack]) -> LayerStack:
    """
    :param stacks: Stacks reading the same inputs
    :return: One stack whose outputs are theirs, concatenated in order
    """
    if not stacks:
        raise ParameterError("Nothing to run in parallel")
    if len({stack.input_dim for stack in stacks}) != 1:
        raise ParameterError("Parallel stacks must share their inputs")
    depth = max(stack.depth for stack in stacks)
    padded = [stack.padded(depth) for stack in stacks]
    weights = [np.vstack([stack.weights[0] for stack in padded])]
    for layer in range(1, depth + 1):
        weights.append(block_diag(*[stack.weights[layer] for stack in padded]))
    shifts = [np.concatenate([stack.shifts[layer] for stack in padded]) for layer in range(depth)]
    return LayerStack(weights, shifts)


def compose(outer: ReluNetwork, inner: ReluNetwork) -> ReluNetwork:
    """
    :param outer: A network with one input
    :param inner: A network with one output
    :return: The network of outer o inner
    """
    return LayerStack.from_network(inner).then(LayerStack.from_network(outer)).to_network()


def pad_depth(net: ReluNetwork, depth: int) -> ReluNetwork:
    """
    :return: A network of the given depth computing the same function
    """
    return LayerStack.from_network(net).padded(depth).to_network()


def stack_parallel(nets: Sequence[ReluNetwork], combination: Sequence[float]) -> ReluNetwork:
    """
    :param nets: Networks on the same inputs
    :param combination: One coefficient per network
    :return: The network of sum_i combination[i] * nets[i]
    """
    stack = parallel([LayerStack.from_network(net) for net in nets])
    return stack.then(LayerStack.linear(np.atleast_2d(combination))).to_network()
