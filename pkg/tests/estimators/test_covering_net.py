
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
from scipy import stats

from hinge_minimax.errors.capacity_error import CapacityError
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.covering_net import build_covering_net
from hinge_minimax.estimators.covering_net import covering_net_size
from hinge_minimax.estimators.covering_net import log_size_slope
from hinge_minimax.estimators.covering_space import CoveringSpace
from hinge_minimax.funcspace.max_component import MaxComponent


class TestCoveringNet(TestCase):
    """
    Tests the materialized covering nets of compositional classes.
    """

    def setUp(self):
        self.line = CoveringSpace(q=0, K=1, d_star=0, d_lower=1, beta=1.0, radius=1.0, d=1)
        self.t = np.linspace(0.0, 1.0, 1001).reshape(-1, 1)

    def test_space(self):
        """
        Tests refused spaces and the dictionary form.
        """
        with self.assertRaises(ParameterError):
            CoveringSpace(q=1, K=1, d_star=0, d_lower=2, beta=1.0, radius=1.0, d=3)
        with self.assertRaises(ParameterError):
            CoveringSpace(q=0, K=1, d_star=0, d_lower=1, beta=0.0, radius=1.0, d=1)
        self.assertEqual(CoveringSpace.from_dict(self.line.to_dict()), self.line)

    def test_one_variable_net(self):
        """
        Tests the size, member values and the trailing max member.
        """
        net = build_covering_net(self.line, 0.5)
        self.assertEqual(len(net), 259)
        self.assertEqual(covering_net_size(self.line, 0.5), 259)
        for member in net.members[::16]:
            values = member(self.t)
            self.assertTrue(np.all((values >= 0.0) & (values <= 1.0)))

        with_max = CoveringSpace(q=0, K=1, d_star=1, d_lower=1, beta=1.0, radius=1.0, d=1)
        net = build_covering_net(with_max, 0.5)
        self.assertEqual(len(net), 260)
        self.assertIsInstance(net.members[-1].layers[0][0], MaxComponent)

    def test_nearest_member(self):
        """
        Tests that some member lies within xi of a Lipschitz target.
        """
        net = build_covering_net(self.line, 0.5)
        target = 0.5 + 0.45 * np.sin(2.0 * self.t[:, 0])
        distances = [np.max(np.abs(member(self.t) - target)) for member in net.members]
        self.assertLessEqual(min(distances), 0.5)

    def test_constants_covered(self):
        """
        Tests that xi = 1 still covers the constants.
        """
        net = build_covering_net(self.line, 1.0)
        self.assertEqual(len(net), 17)
        for value in np.linspace(0.0, 1.0, 11):
            distances = [np.max(np.abs(member(self.t) - value)) for member in net.members]
            self.assertLessEqual(min(distances), 1.0)

    def test_two_layer_net(self):
        """
        Tests a q = 1 net: both slots choose from 17 grid cores and one max.
        """
        space = CoveringSpace(q=1, K=1, d_star=1, d_lower=1, beta=1.0, radius=1.0, d=1)
        net = build_covering_net(space, 1.0)
        self.assertEqual(len(net), 18 * 18)
        self.assertEqual(covering_net_size(space, 1.0), 324)
        for member in net.members[::11]:
            values = member(self.t)
            self.assertTrue(np.all((values >= 0.0) & (values <= 1.0)))

    def test_size_growth(self):
        """
        Tests log |net| growing linearly in 1/xi and log log |net| with slope near d*/beta.
        """
        logs = [math.log(covering_net_size(self.line, 2.0 ** -power)) for power in (3, 4, 5)]
        for smaller, larger in zip(logs[:-1], logs[1:]):
            self.assertGreater(larger / smaller, 1.6)
            self.assertLess(larger / smaller, 2.4)
        radii = [2.0 ** -power for power in range(1, 6)]
        slope = log_size_slope(self.line, radii)
        self.assertAlmostEqual(slope, 1.0, delta=0.3)
        fit = stats.linregress([math.log(1.0 / xi) for xi in radii],
                               [math.log(math.log(covering_net_size(self.line, xi))) for xi in radii])
        self.assertAlmostEqual(slope, fit.slope, places=12)
        self.assertGreater(fit.rvalue ** 2, 0.9)

    def test_capacity(self):
        """
        Tests that an oversized net is refused with its exact size.
        """
        with self.assertRaises(CapacityError) as context:
            build_covering_net(self.line, 0.125)
        self.assertEqual(context.exception.required_size, covering_net_size(self.line, 0.125))
