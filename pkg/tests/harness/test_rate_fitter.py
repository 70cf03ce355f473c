
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

from hinge_minimax.errors.fit_error import FitError
from hinge_minimax.harness.rate_fitter import fit_rate


class TestRateFitter(TestCase):
    """
    Tests the log-log least squares fit.
    """

    def test_exact_power_law(self):
        """
        Tests that 3 n^(-1/2) gives slope -1/2 and intercept log 3 exactly.
        """
        points = [(n, 3.0 * n ** -0.5) for n in (100, 200, 400, 800, 1600)]
        fit = fit_rate(points)
        self.assertAlmostEqual(fit.slope, -0.5, places=10)
        self.assertAlmostEqual(fit.intercept, math.log(3.0), places=10)
        self.assertLess(fit.ci_halfwidth, 1e-8)
        self.assertAlmostEqual(fit.r_squared, 1.0, places=10)
        np.testing.assert_allclose(fit.predict([100, 1600]), [0.3, 0.075], rtol=1e-9)

    def test_constant(self):
        """
        Tests that constant values give slope 0.
        """
        fit = fit_rate([(n, 0.25) for n in (10, 20, 40, 80)])
        self.assertAlmostEqual(fit.slope, 0.0, places=12)
        self.assertTrue(fit.contains(0.0))

    def test_noisy_coverage(self):
        """
        Tests that with 1% multiplicative noise the interval covers the true slope in most trials.
        """
        rng = np.random.default_rng(11)
        sizes = [128 * 2 ** power for power in range(7)]
        covered = 0
        for _ in range(100):
            points = [(n, 2.0 * n ** (-1.0 / 3.0) * (1.0 + 0.01 * rng.normal())) for n in sizes]
            covered += fit_rate(points).contains(-1.0 / 3.0)
        self.assertGreaterEqual(covered, 90)

    def test_refusals(self):
        """
        Tests too few points, nonpositive values and a single sample size.
        """
        with self.assertRaises(FitError):
            fit_rate([(10, 1.0), (20, 0.5), (40, 0.25)])
        with self.assertRaises(FitError):
            fit_rate([(10, 1.0), (20, 0.5), (40, 0.0), (80, 0.1)])
        with self.assertRaises(FitError):
            fit_rate([(10, 1.0), (20, 0.5), (40, math.nan), (80, 0.1)])
        with self.assertRaises(FitError):
            fit_rate([(10, 1.0)] * 5)
