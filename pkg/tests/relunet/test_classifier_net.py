
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

from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.marginal_spec import MarginalSpec
from hinge_minimax.funcspace.chom_factory import constant
from hinge_minimax.funcspace.chom_factory import single_core
from hinge_minimax.funcspace.coordinate_core import CoordinateCore
from hinge_minimax.funcspace.power_core import PowerCore
from hinge_minimax.relunet.classifier_net import build_classifier_net
from hinge_minimax.relunet.classifier_net import check_sign_regions
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.risk_evaluator import excess_risk


class TestClassifierNet(TestCase):
    """
    Tests the threshold network composed with the approximation of f.
    """

    def setUp(self):
        self.points = np.random.default_rng(21).random((5000, 2))

    def test_confident_positive(self):
        """
        Tests that 2f - 1 >= 2 delta everywhere gives the constant +1.
        """
        net = build_classifier_net(constant(2, 0.9), 0.1)
        np.testing.assert_allclose(net(self.points), 1.0, atol=1e-9)

    def test_confident_negative(self):
        """
        Tests that 2f - 1 <= -2 delta everywhere gives the constant -1.
        """
        net = build_classifier_net(constant(2, 0.1), 0.1)
        np.testing.assert_allclose(net(self.points), -1.0, atol=1e-9)

    def test_sign_regions(self):
        """
        Tests +1 on {2f - 1 > delta} and -1 on {2f - 1 < -delta} for a smooth f.
        """
        f = single_core(2, PowerCore(2.0), (2,), radius=2.0)
        for delta in (0.2, 0.05):
            net = build_classifier_net(f, delta)
            self.assertEqual(check_sign_regions(net, f, delta, self.points), 0)
            values = net(self.points)
            self.assertTrue(np.all(np.abs(values) <= 1.0 + 1e-9))

    def test_hinge_excess(self):
        """
        Tests the excess hinge risk bound 2 alpha delta^(s+1) with eta(x) = x_1,
        whose noise exponent is s = 1 with alpha = 1.
        """
        f = single_core(1, CoordinateCore(), (1,))
        dist = DistributionSpec(f, MarginalSpec.lebesgue(1))
        for delta in (0.2, 0.1, 0.05):
            net = build_classifier_net(f, delta)
            report = excess_risk(net, dist, LossKind.HINGE)
            self.assertLessEqual(report.excess, 2.0 * delta ** 2)
            self.assertGreaterEqual(report.excess, -1e-9)
