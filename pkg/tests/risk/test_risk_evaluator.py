
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
import timeout_decorator

from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.marginal_spec import MarginalSpec
from hinge_minimax.funcspace import chom_factory
from hinge_minimax.funcspace.ramp_core import RampCore
from hinge_minimax.funcspace.step_core import StepCore
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.risk_evaluator import excess_risk
from hinge_minimax.risk.truncated_function import TruncatedFunction


def step_function(edges, values, d: int = 1):
    """
    :return: A q = 0 function that is constant on the cells of the first coordinate
    """
    return chom_factory.single_core(d, StepCore(edges, values), (1,))


def random_step_pair(rng, cells: int):
    """
    :return: A random piecewise-constant eta and classifier on shared cells
    """
    edges = np.concatenate([[0.0], np.sort(rng.uniform(0.05, 0.95, cells - 1)), [1.0]])
    eta = step_function(edges, rng.uniform(0.0, 1.0, cells))
    classifier = step_function(edges, rng.uniform(-2.0, 2.0, cells))
    return eta, classifier


class TestRiskEvaluator(TestCase):
    """
    Tests quadrature and Monte Carlo risks.
    """

    def setUp(self):
        self.dist = DistributionSpec(chom_factory.constant(2, 0.3), MarginalSpec.lebesgue(2))

    def test_bayes_classifier(self):
        """
        Tests that the Bayes classifier has zero excess.
        """
        eta = chom_factory.single_core(1, RampCore(0.0, 1.0), (1,))
        dist = DistributionSpec(eta, MarginalSpec.lebesgue(1))
        report = excess_risk(dist.bayes_classifier, dist, LossKind.ZERO_ONE)
        self.assertAlmostEqual(report.excess, 0.0, places=12)
        self.assertAlmostEqual(report.bayes_risk, 0.25, places=4)

    def test_constant_classifiers(self):
        """
        Tests excesses of constant classifiers when eta = 0.3.
        """
        plus = chom_factory.constant(2, 1.0)
        zero = chom_factory.constant(2, 0.0)
        self.assertAlmostEqual(excess_risk(plus, self.dist, LossKind.ZERO_ONE).excess, 0.4)
        report = excess_risk(zero, self.dist, LossKind.HINGE)
        self.assertAlmostEqual(report.risk, 1.0)
        self.assertAlmostEqual(report.bayes_risk, 0.6)
        self.assertAlmostEqual(report.excess, 0.4)

    def test_logistic_bayes_at_boundary(self):
        """
        Tests that the logistic Bayes risk is 0 when eta is 0 or 1.
        """
        dist = DistributionSpec(step_function([0.0, 0.5, 1.0], [0.0, 1.0]), MarginalSpec.lebesgue(1))
        report = excess_risk(chom_factory.constant(1, 1.0), dist, LossKind.LOGISTIC)
        self.assertEqual(report.bayes_risk, 0.0)
        self.assertGreater(report.excess, 0.0)

    def test_bayes_hinge_identity(self):
        """
        Tests that the hinge risk of sgn(2 eta - 1) is the integral of 1 - |2 eta - 1|.
        """
        eta = chom_factory.single_core(1, RampCore(0.2, 0.8), (1,))
        dist = DistributionSpec(eta, MarginalSpec.lebesgue(1))
        report = excess_risk(dist.bayes_classifier, dist, LossKind.HINGE)
        self.assertAlmostEqual(report.excess, 0.0, places=12)
        # 1 - |2 eta - 1| is 0 off [0.2, 0.8] and a tent of height 1 on it
        self.assertAlmostEqual(report.bayes_risk, 0.3, places=4)

    def test_sign_invariance(self):
        """
        Tests that truncation does not change the excess 0-1 risk.
        """
        rng = np.random.default_rng(5)
        eta, classifier = random_step_pair(rng, 12)
        dist = DistributionSpec(eta, MarginalSpec.lebesgue(1))
        plain = excess_risk(classifier, dist, LossKind.ZERO_ONE).excess
        for bound in (0.1, 1.0, 3.0):
            truncated = TruncatedFunction(classifier, bound, 1)
            self.assertAlmostEqual(excess_risk(truncated, dist, LossKind.ZERO_ONE).excess, plain)

    def test_precision_warning(self):
        """
        Tests the flag on small Monte Carlo runs.
        """
        report = excess_risk(chom_factory.constant(2, 1.0), self.dist, LossKind.ZERO_ONE,
                             method="monte_carlo", samples=50)
        self.assertTrue(report.precision_warning)
        report = excess_risk(chom_factory.constant(2, 1.0), self.dist, LossKind.ZERO_ONE,
                             method="monte_carlo", samples=500)
        self.assertFalse(report.precision_warning)
        self.assertAlmostEqual(report.excess, 0.4)

    @timeout_decorator.timeout(300)
    def test_monte_carlo_consistency(self):
        """
        Tests Monte Carlo excesses against quadrature on 20 random distributions.
        """
        rng = np.random.default_rng(17)
        for index in range(20):
            eta, classifier = random_step_pair(rng, 8)
            dist = DistributionSpec(eta, MarginalSpec.lebesgue(1))
            for loss in (LossKind.ZERO_ONE, LossKind.HINGE):
                exact = excess_risk(classifier, dist, loss).excess
                estimate = excess_risk(classifier, dist, loss, method="monte_carlo",
                                       samples=100_000, seed=index)
                self.assertLessEqual(abs(estimate.excess - exact),
                                     4.0 * estimate.error_estimate + 1e-12)
