
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

from unittest import TestCase

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.relunet.gadgets import constant_stack
from hinge_minimax.relunet.gadgets import interpolation_1d_stack
from hinge_minimax.relunet.gadgets import kuhn_2d_stack
from hinge_minimax.relunet.gadgets import kuhn_2d_values
from hinge_minimax.relunet.gadgets import max_stack
from hinge_minimax.relunet.layer_stack import LayerStack
from hinge_minimax.relunet.layer_stack import compose
from hinge_minimax.relunet.layer_stack import pad_depth
from hinge_minimax.relunet.layer_stack import parallel
from hinge_minimax.relunet.layer_stack import stack_parallel
from hinge_minimax.relunet.network_budget import budget_of
from hinge_minimax.relunet.network_trainer import initial_network
from hinge_minimax.relunet.threshold_net import build_threshold_net


class TestLayerStack(TestCase):
    """
    Tests network assembly and the exact gadgets.
    """

    def setUp(self):
        self.rng = np.random.default_rng(11)

    def test_compose(self):
        """
        Tests that composition evaluates outer(inner(x)) and adds depths.
        """
        inner = initial_network(2, 2, 4, seed=1)
        outer = build_threshold_net(0.1)
        net = compose(outer, inner)
        points = self.rng.random((200, 2))
        np.testing.assert_allclose(net(points), outer(inner(points).reshape(-1, 1)), atol=1e-9)
        self.assertEqual(net.depth, inner.depth + outer.depth)

    def test_compose_budget_arithmetic(self):
        """
        Tests that depths add and parameter counts follow the merged seam.
        """
        inner = initial_network(1, 1, 3, seed=2)
        outer = build_threshold_net(0.25)
        total = budget_of(compose(outer, inner))
        seam = outer.weights[0] @ inner.weights[-1]
        predicted = budget_of(outer).nnz + budget_of(inner).nnz \
            - np.count_nonzero(outer.weights[0]) - np.count_nonzero(inner.weights[-1]) \
            + np.count_nonzero(seam)
        self.assertEqual(total.nnz, predicted)
        self.assertEqual(total.depth, budget_of(outer).depth + budget_of(inner).depth)
        self.assertEqual(total.width, max(budget_of(outer).width, budget_of(inner).width))

    def test_padding(self):
        """
        Tests that padding keeps the function, for outputs of both signs.
        """
        net = initial_network(3, 1, 5, seed=3)
        padded = pad_depth(net, 4)
        self.assertEqual(padded.depth, 4)
        points = self.rng.random((100, 3))
        np.testing.assert_allclose(padded(points), net(points), atol=1e-12)
        with self.assertRaises(ParameterError):
            pad_depth(padded, 2)

    def test_parallel(self):
        """
        Tests parallel stacks of different depths and their linear combination.
        """
        nets = [initial_network(2, depth, 3, seed=depth) for depth in (1, 2, 3)]
        points = self.rng.random((50, 2))
        stacked = parallel([LayerStack.from_network(net) for net in nets])
        self.assertEqual(stacked.output_dim, 3)
        self.assertEqual(stacked.depth, 3)
        np.testing.assert_allclose(stacked.forward(points),
                                   np.column_stack([net(points) for net in nets]), atol=1e-12)
        combined = stack_parallel(nets, [1.0, -2.0, 0.5])
        np.testing.assert_allclose(combined(points),
                                   nets[0](points) - 2.0 * nets[1](points) + 0.5 * nets[2](points),
                                   atol=1e-12)

    def test_embed(self):
        """
        Tests reading chosen coordinates of a wider input.
        """
        net = initial_network(2, 2, 3, seed=4)
        wide = LayerStack.from_network(net).embed(5, [3, 1])
        points = self.rng.random((40, 5))
        np.testing.assert_allclose(wide.forward(points)[:, 0], net(points[:, [3, 1]]), atol=1e-12)

    def test_constant(self):
        """
        Tests the constant gadget.
        """
        stack = constant_stack(3, -0.7)
        np.testing.assert_allclose(stack.forward(self.rng.random((10, 3)))[:, 0], -0.7)

    def test_interpolation_1d(self):
        """
        Tests that the 1-D gadget reproduces its knot values and is linear between.
        """
        knots = np.array([0.0, 0.2, 0.5, 1.0])
        values = np.array([0.3, -0.1, 0.9, 0.4])
        stack = interpolation_1d_stack(knots, values)
        points = np.linspace(0.0, 1.0, 501)
        np.testing.assert_allclose(stack.forward(points.reshape(-1, 1))[:, 0],
                                   np.interp(points, knots, values), atol=1e-12)
        with self.assertRaises(ParameterError):
            interpolation_1d_stack([0.1, 1.0], [0.0, 1.0])

    def test_kuhn_affine_exact(self):
        """
        Tests that the triangulated interpolant reproduces affine functions.
        """
        def affine(points):
            return 0.2 + 0.5 * points[:, 0] - 0.3 * points[:, 1]

        stack = kuhn_2d_stack(4, kuhn_2d_values(affine, 4))
        points = self.rng.random((500, 2))
        np.testing.assert_allclose(stack.forward(points)[:, 0], affine(points), atol=1e-10)
        self.assertEqual(stack.depth, 3)

    def test_kuhn_nodes(self):
        """
        Tests that the interpolant hits arbitrary nodal values.
        """
        values = self.rng.random((6, 6))
        stack = kuhn_2d_stack(5, values)
        axis = np.linspace(0.0, 1.0, 6)
        first, second = np.meshgrid(axis, axis, indexing="ij")
        nodes = np.column_stack([first.ravel(), second.ravel()])
        np.testing.assert_allclose(stack.forward(nodes)[:, 0], values.ravel(), atol=1e-10)

    def test_max(self):
        """
        Tests the max tree against numpy for odd and even index counts.
        """
        points = self.rng.uniform(-1.0, 1.0, (300, 6))
        for indices in ([2], [0, 4], [0, 1, 5], [5, 4, 3, 2, 1]):
            stack = max_stack(6, indices)
            np.testing.assert_allclose(stack.forward(points)[:, 0],
                                       np.max(points[:, indices], axis=1), atol=1e-12)
