
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
from hinge_minimax.estimators.hyperparam_schedule import covering_radius
from hinge_minimax.estimators.hyperparam_schedule import hyperparam_schedule
from hinge_minimax.estimators.hyperparam_schedule import width_exponent


class TestHyperparamSchedule(TestCase):
    """
    Tests the network and covering-radius schedules.
    """

    def test_width_exponent(self):
        """
        Tests d* / (d* + (s+2) beta min(1,beta)^q) on known cases.
        """
        self.assertAlmostEqual(width_exponent(1.0, 0, 1, 0.0), 1.0 / 3.0)
        self.assertAlmostEqual(width_exponent(0.5, 2, 1, 0.0), 1.0 / (1.0 + 2.0 * 0.125))
        self.assertEqual(width_exponent(1.0, 0, 1, math.inf), 0.0)

    def test_infinite_noise_exponent(self):
        """
        Tests that s = inf gives sizes independent of n.
        """
        small = hyperparam_schedule(10, 1.0, 0, 1, math.inf, a=2.5, b=3.0)
        large = hyperparam_schedule(10**6, 1.0, 0, 1, math.inf, a=2.5, b=3.0)
        self.assertEqual(small, large)
        self.assertEqual((small.G, small.N, small.S), (3, 3, 8))
        self.assertEqual(small.B, 1.0)
        self.assertTrue(math.isinf(small.F))

    def test_doubling_n(self):
        """
        Tests that doubling n scales N like 2^(1/3) times the log correction.
        """
        for n in (10**4, 10**5, 10**6):
            before = hyperparam_schedule(n, 1.0, 0, 1, 0.0, a=1000.0)
            after = hyperparam_schedule(2 * n, 1.0, 0, 1, 0.0, a=1000.0)
            expected = 2.0 ** (1.0 / 3.0) * math.log(n) / math.log(2 * n)
            self.assertAlmostEqual(after.N / before.N, expected, delta=0.01)

    def test_shape(self):
        """
        Tests S / (N log n) in [a/2, 2a] and log n <= G <= b log n for n in [10^2, 10^6].
        """
        for n in np.unique(np.logspace(2, 6, 60).astype(int)):
            budget = hyperparam_schedule(int(n), 1.0, 0, 1, 0.0, a=1.0, b=2.0)
            ratio = budget.S / (budget.N * math.log(n))
            self.assertGreaterEqual(ratio, 0.5, msg=f"n={n}")
            self.assertLessEqual(ratio, 2.0, msg=f"n={n}")
            self.assertGreaterEqual(budget.G, math.log(n))
            self.assertLessEqual(budget.G, 2.0 * math.log(n))

    def test_depth_ignores_b(self):
        """
        Tests that the depth is ceil(a log n) whatever b is.
        """
        for b in (0.5, 1.0, 2.0, 10.0):
            budget = hyperparam_schedule(1000, 1.0, 0, 1, 0.0, a=3.0, b=b)
            self.assertEqual(budget.G, math.ceil(3.0 * math.log(1000)))
        self.assertEqual(hyperparam_schedule(1000, 1.0, 0, 1, 0.0, a=3.0, b=1.0).G, 21)

    def test_preconditions(self):
        """
        Tests refused arguments.
        """
        with self.assertRaises(ParameterError):
            hyperparam_schedule(2, 1.0, 0, 1, 0.0)
        with self.assertRaises(ParameterError):
            hyperparam_schedule(100, 1.0, 0, 1, 0.0, a=0.0)
        with self.assertRaises(ParameterError):
            covering_radius(100, 1.0, 0, 1, 0.0, tau=0.0)

    def test_covering_radius(self):
        """
        Tests xi = (min(tau,1)/3) n^(-1/(s+2+d*/(beta min(1,beta)^q))).
        """
        self.assertAlmostEqual(covering_radius(128, 1.0, 0, 1, 0.0, 1.0), 0.0661417, places=6)
        self.assertAlmostEqual(covering_radius(128, 1.0, 0, 1, 0.0, 5.0), 0.0661417, places=6)
        self.assertAlmostEqual(covering_radius(1000, 1.0, 0, 1, 1.0, 0.5), (0.5 / 3.0) * 1000 ** -0.25)
        self.assertAlmostEqual(covering_radius(1000, 1.0, 0, 1, math.inf, 0.6), 0.2)
