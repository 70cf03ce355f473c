
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
from hinge_minimax.relunet.network_budget import budget_of
from hinge_minimax.relunet.network_trainer import NetworkTrainer
from hinge_minimax.relunet.network_trainer import initial_network


class TestNetworkTrainer(TestCase):
    """
    Tests gradient training with budget projection.
    """

    def test_gradients_match_differences(self):
        """
        Tests backpropagation against central finite differences.
        """
        net = initial_network(2, 2, 3, seed=4)
        points = np.random.default_rng(1).random((30, 2))
        targets = np.sin(3.0 * points[:, 0])
        trainer = NetworkTrainer()
        grads = trainer.gradients(net, points, trainer.output_gradient(net(points), targets))
        arrays = net.parameter_arrays()
        count = len(net.weights)
        step = 1e-6
        for array_index in (0, 1, count):
            for position in range(min(3, arrays[array_index].size)):
                plus = [array.copy() for array in arrays]
                minus = [array.copy() for array in arrays]
                plus[array_index].flat[position] += step
                minus[array_index].flat[position] -= step
                rebuilt_plus = type(net)(plus[:count], plus[count:])
                rebuilt_minus = type(net)(minus[:count], minus[count:])
                numeric = (trainer.objective(rebuilt_plus(points), targets)
                           - trainer.objective(rebuilt_minus(points), targets)) / (2.0 * step)
                self.assertAlmostEqual(grads[array_index].flat[position], numeric, places=5)

    def test_squared_loss_decreases(self):
        """
        Tests that training never raises the loss.
        """
        points = np.linspace(0.0, 1.0, 64).reshape(-1, 1)
        targets = np.abs(points[:, 0] - 0.5)
        net = initial_network(1, 1, 8, seed=2)
        trainer = NetworkTrainer(steps=300)
        trained = trainer.fit(net, points, targets)
        self.assertLessEqual(trainer.objective(trained(points), targets),
                             trainer.objective(net(points), targets))

    def test_hinge_separable(self):
        """
        Tests that separable 1-D data is fit with small hinge loss.
        """
        points = np.concatenate([np.linspace(0.0, 0.3, 20), np.linspace(0.7, 1.0, 20)]).reshape(-1, 1)
        labels = np.where(points[:, 0] > 0.5, 1.0, -1.0)
        trainer = NetworkTrainer(loss="hinge", steps=2000, learning_rate=0.1)
        trained = trainer.fit(initial_network(1, 1, 8, seed=0), points, labels)
        self.assertTrue(np.all(np.sign(trained(points)) == labels))
        self.assertLess(trainer.objective(trained(points), labels), 0.1)

    def test_projection(self):
        """
        Tests that projected networks respect B and S.
        """
        net = initial_network(3, 2, 6, seed=9)
        trainer = NetworkTrainer(max_magnitude=0.3, max_nonzero=15)
        arrays = trainer.project(net.parameter_arrays())
        count = len(net.weights)
        usage = budget_of(type(net)(arrays[:count], arrays[count:]))
        self.assertLessEqual(usage.max_abs, 0.3)
        self.assertLessEqual(usage.nnz, 15)

        points = np.random.default_rng(3).random((50, 3))
        trained = trainer.fit(net, points, points[:, 0])
        usage = budget_of(trained)
        self.assertLessEqual(usage.max_abs, 0.3)
        self.assertLessEqual(usage.nnz, 15)

    def test_minibatch(self):
        """
        Tests that minibatch gradients still never raise the full loss.
        """
        points = np.random.default_rng(5).random((200, 2))
        targets = points[:, 0] * points[:, 1]
        net = initial_network(2, 2, 6, seed=1)
        trainer = NetworkTrainer(steps=200, batch_size=32, seed=4)
        trained = trainer.fit(net, points, targets)
        self.assertLessEqual(trainer.objective(trained(points), targets),
                             trainer.objective(net(points), targets))

    def test_bad_loss(self):
        """
        Tests that unknown losses are refused.
        """
        with self.assertRaises(ParameterError):
            NetworkTrainer(loss="absolute")
        with self.assertRaises(ParameterError):
            initial_network(2, 0, 3, seed=0)
