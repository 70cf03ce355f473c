
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

import math
from unittest import TestCase

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.relunet.network_budget import BudgetUsage
from hinge_minimax.relunet.network_budget import NetworkBudget
from hinge_minimax.relunet.network_budget import budget_of
from hinge_minimax.relunet.relu_network import ReluNetwork


class TestNetworkBudget(TestCase):
    """
    Tests budget accounting and class membership.
    """

    def test_zero_network(self):
        """
        Tests that the zero network has no nonzero parameters and sup norm 0.
        """
        net = ReluNetwork([np.zeros((4, 2)), np.zeros((1, 4))], [np.zeros(4)])
        usage = budget_of(net)
        self.assertEqual(usage.nnz, 0)
        self.assertEqual(usage.sup_estimate, 0.0)
        self.assertEqual(usage.depth, 1)
        self.assertEqual(usage.width, 4)
        self.assertEqual(usage.max_abs, 0.0)

    def test_counts(self):
        """
        Tests nonzero counts over weights and shifts, magnitude and sup norm.
        """
        net = ReluNetwork([[[2.0], [0.0]], [[1.0, -0.5]]], [[0.5, 0.0]])
        usage = budget_of(net)
        self.assertEqual(usage.nnz, 4)
        self.assertEqual(usage.max_abs, 2.0)
        # s(2x - 0.5) peaks at x = 1
        self.assertAlmostEqual(usage.sup_estimate, 1.5)

    def test_membership(self):
        """
        Tests that membership needs all five accounts within budget.
        """
        usage = BudgetUsage(depth=3, width=4, nnz=20, max_abs=1.0, sup_estimate=2.0)
        self.assertTrue(NetworkBudget(3, 4, 20, 1.0).admits(usage))
        self.assertTrue(NetworkBudget(3, 4, 20, 1.0, 2.0).admits(usage))
        self.assertFalse(NetworkBudget(2, 4, 20, 1.0).admits(usage))
        self.assertFalse(NetworkBudget(3, 3, 20, 1.0).admits(usage))
        self.assertFalse(NetworkBudget(3, 4, 19, 1.0).admits(usage))
        self.assertFalse(NetworkBudget(3, 4, 20, 0.5).admits(usage))
        self.assertFalse(NetworkBudget(3, 4, 20, 1.0, 1.9).admits(usage))

    def test_invalid_budget(self):
        """
        Tests that nonpositive accounts are refused.
        """
        for args in ((0, 1, 1, 1.0), (1, 0, 1, 1.0), (1, 1, 0, 1.0), (1, 1, 1, 0.0)):
            with self.assertRaises(ParameterError):
                NetworkBudget(*args)

    def test_to_dict(self):
        """
        Tests that an infinite F is written as a string.
        """
        doc = NetworkBudget(3, 4, 5, 1.0).to_dict()
        self.assertEqual(doc["F"], "inf")
        self.assertTrue(math.isinf(NetworkBudget(3, 4, 5, 1.0).F))
