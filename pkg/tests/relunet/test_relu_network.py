
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

import tempfile
from unittest import TestCase

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.relunet.network_serializer import NetworkSerializer
from hinge_minimax.relunet.network_trainer import initial_network
from hinge_minimax.relunet.relu_network import ReluNetwork


class TestReluNetwork(TestCase):
    """
    Tests the forward pass and the JSON form of ReluNetwork.
    """

    def test_identity(self):
        """
        Tests the depth-0 network W_0 = [1].
        """
        net = ReluNetwork([[[1.0]]], [])
        self.assertEqual(net.depth, 0)
        self.assertAlmostEqual(float(net(0.4)[0]), 0.4)

    def test_relu_identity_trick(self):
        """
        Tests that s(x) - s(-x) reproduces negative inputs.
        """
        net = ReluNetwork([[[1.0], [-1.0]], [[1.0, -1.0]]], [[0.0, 0.0]])
        self.assertAlmostEqual(float(net(-0.3)[0]), -0.3)
        self.assertEqual(net.hidden_sizes(), [2])

    def test_shifts(self):
        """
        Tests that shifts enter as s_v(z) = max{0, z - v}.
        """
        net = ReluNetwork([[[1.0]], [[1.0]]], [[0.25]])
        np.testing.assert_allclose(net(np.array([[0.0], [0.25], [0.75]])), [0.0, 0.0, 0.5])

    def test_batch_shape(self):
        """
        Tests that a batch of points gives one output per point.
        """
        net = initial_network(3, 2, 5, seed=1)
        points = np.random.default_rng(0).random((17, 3))
        self.assertEqual(net.forward(points).shape, (17,))

    def test_dimension_mismatch(self):
        """
        Tests that inputs of the wrong dimension are refused.
        """
        net = initial_network(2, 1, 4, seed=0)
        with self.assertRaises(ParameterError):
            net.forward(np.zeros((5, 3)))

    def test_bad_shapes(self):
        """
        Tests construction errors.
        """
        with self.assertRaises(ParameterError):
            ReluNetwork([np.ones((2, 1)), np.ones((1, 2))], [])
        with self.assertRaises(ParameterError):
            ReluNetwork([np.ones((2, 1)), np.ones((2, 2))], [np.zeros(2)])
        with self.assertRaises(ParameterError):
            ReluNetwork([np.ones((2, 1)), np.ones((1, 3))], [np.zeros(2)])
        with self.assertRaises(ParameterError):
            ReluNetwork([[[np.nan]]], [])

    def test_dict_round_trip(self):
        """
        Tests that to_dict() and from_dict() reproduce parameters exactly.
        """
        net = initial_network(2, 3, 4, seed=5)
        doc = net.to_dict()
        self.assertEqual(doc["input_dim"], 2)
        self.assertEqual(len(doc["layers"]), 4)
        self.assertEqual(doc["layers"][-1]["v"], [])
        restored = ReluNetwork.from_dict(doc)
        for mine, theirs in zip(net.parameter_arrays(), restored.parameter_arrays()):
            np.testing.assert_array_equal(mine, theirs)

    def test_serializer(self):
        """
        Tests writing and reading networks through JSON files.
        """
        nets = [initial_network(1, 2, 3, seed=seed) for seed in range(3)]
        points = np.linspace(0.0, 1.0, 11).reshape(-1, 1)
        with tempfile.TemporaryDirectory() as folder:
            serializer = NetworkSerializer(folder)
            serializer.persist(nets[0], "single")
            restored = serializer.restore("single")
            np.testing.assert_array_equal(restored(points), nets[0](points))

            serializer.persist_list(nets, "several")
            restored_list = serializer.restore_list("several")
            self.assertEqual(len(restored_list), 3)
            for net, restored in zip(nets, restored_list):
                np.testing.assert_array_equal(restored(points), net(points))

            self.assertIsNone(serializer.restore("missing"))
            self.assertEqual(serializer.restore_list("missing"), [])
