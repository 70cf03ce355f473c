
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
from scipy import integrate

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.bump import bump
from hinge_minimax.funcspace.bump import bump_grid_sum
from hinge_minimax.funcspace.bump import bump_mass
from hinge_minimax.funcspace.bump import count_nonzero_translates
from hinge_minimax.funcspace.bump_spec import BumpSpec
from hinge_minimax.funcspace.bump_sum_core import BumpSumCore


class TestBump(TestCase):
    """
    Tests bump profiles and bump grid sums.
    """

    def setUp(self):
        self.spec = BumpSpec(dim=1, inner_radius=0.2, outer_radius=0.45, beta=1.0)

    def test_plateau_and_support(self):
        """
        Tests the value 1 at the origin and 0 outside the support.
        """
        self.assertEqual(bump(self.spec, [0.0]), 1.0)
        self.assertEqual(bump(self.spec, [0.49]), 0.0)
        spec2 = BumpSpec(dim=2, inner_radius=0.2, outer_radius=0.45, beta=2.5)
        self.assertEqual(bump(spec2, [0.1, -0.15]), 1.0)
        self.assertEqual(bump(spec2, [0.1, -0.46]), 0.0)

    def test_transition_is_monotone(self):
        """
        Tests that the transition is strictly inside (0,1) and nonincreasing.
        """
        middle = bump(self.spec, [0.325])
        self.assertGreater(middle, 0.0)
        self.assertLess(middle, 1.0)
        values = bump(self.spec, np.linspace(0.0, 0.5, 1001).reshape(-1, 1))
        self.assertTrue(np.all(np.diff(values) <= 1e-15))

    def test_smoothstep_degree(self):
        """
        Tests the transition degree for small and large smoothness.
        """
        self.assertEqual(self.spec.degree, 3)
        self.assertEqual(BumpSpec(1, 0.1, 0.4, 3.5).degree, 7)
        for beta, degree in ((1.0, 3), (2.0, 3), (2.5, 5), (3.0, 5), (4.0, 7)):
            spec = BumpSpec(1, 0.1, 0.3, beta)
            self.assertEqual(spec.degree, degree, beta)
            self.assertEqual(spec.degree, 2 * spec.order + 1)

    def test_smoothstep_joins(self):
        """
        Tests that the transition polynomial has k vanishing derivatives
        at both ends, which an even degree cannot give.
        """
        for beta in (1.0, 2.5, 3.0, 4.0, 6.0):
            spec = BumpSpec(1, 0.1, 0.3, beta)
            k = spec.order
            step = np.polynomial.Polynomial([0.0] * (k + 1) + spec.smoothstep_coefficients())
            self.assertEqual(step.degree(), spec.degree)
            self.assertAlmostEqual(step(0.0), 0.0)
            self.assertAlmostEqual(step(1.0), 1.0, places=9)
            for derivative in range(1, k + 1):
                self.assertAlmostEqual(step.deriv(derivative)(0.0), 0.0, places=6)
                self.assertAlmostEqual(step.deriv(derivative)(1.0), 0.0, places=6)

    def test_bad_radii(self):
        """
        Tests that inverted radii are refused.
        """
        with self.assertRaises(ParameterError):
            BumpSpec(1, 0.3, 0.2, 1.0)

    def test_lower_bound_radii(self):
        """
        Tests the radii used by the lower-bound construction.
        """
        spec = BumpSpec.for_lower_bound(1, 1.0, 0.0)
        self.assertAlmostEqual(spec.inner_radius, 1.0 / 3.0)
        self.assertAlmostEqual(spec.outer_radius, 0.375)
        spec = BumpSpec.for_lower_bound(2, 1.0, 1.0)
        self.assertAlmostEqual(spec.inner_radius, 0.5 - 1.0 / 3.0)
        self.assertAlmostEqual(spec.outer_radius, 0.25)

    def test_grid_sum_at_center(self):
        """
        Tests the peak value amplitude / Q^beta at an active center.
        """
        code = np.array([0, 1, 0, 0])
        self.assertAlmostEqual(bump_grid_sum(4, code, 0.5, 1.0, self.spec, [3.0 / 8.0]), 0.125)
        self.assertEqual(bump_grid_sum(4, code, 0.5, 1.0, self.spec, [1.0 / 8.0]), 0.0)

    def test_zero_code(self):
        """
        Tests that an all-zero code gives zero everywhere.
        """
        points = np.random.default_rng(3).random((500, 2))
        spec2 = BumpSpec(2, 0.2, 0.45, 1.0)
        values = bump_grid_sum(3, np.zeros((3, 3)), 1.0, 1.0, spec2, points)
        self.assertTrue(np.all(values == 0.0))

    def test_grid_sum_integral(self):
        """
        Tests that one active cell integrates to amplitude / Q^beta * mass / Q.
        """
        code = np.array([1, 0])
        numeric, _ = integrate.quad(lambda t: bump_grid_sum(2, code, 0.8, 1.5, self.spec, [t]),
                                    0.0, 1.0, points=[0.025, 0.15, 0.35, 0.475], limit=200)
        expected = 0.8 / 2 ** 1.5 * bump_mass(self.spec) / 2
        self.assertAlmostEqual(numeric, expected, places=7)

    def test_disjoint_support(self):
        """
        Tests that at most one translate is nonzero at any point.
        """
        spec2 = BumpSpec(2, 0.2, 0.45, 1.0)
        points = np.random.default_rng(11).random((20000, 2))
        counts = count_nonzero_translates(5, np.ones((5, 5)), spec2, points)
        self.assertLessEqual(int(counts.max()), 1)
        self.assertGreater(int(counts.sum()), 0)

    def test_scale_law(self):
        """
        Tests that the sup norm of a coded sum is amplitude / Q^beta.
        """
        code = np.zeros((4, 4), dtype=int)
        code[1, 2] = 1
        spec2 = BumpSpec(2, 0.2, 0.45, 2.0)
        core = BumpSumCore(4, code, 0.6, 2.0, spec2)
        axis = np.linspace(0.0, 1.0, 161)
        grid = np.stack(np.meshgrid(axis, axis, indexing="ij"), axis=-1).reshape(-1, 2)
        self.assertAlmostEqual(float(np.max(core(grid))), 0.6 / 16.0)
        self.assertAlmostEqual(core.peak(), 0.6 / 16.0)
