
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

from hinge_minimax.errors.domain_error import DomainError
from hinge_minimax.errors.range_violation_error import RangeViolationError
from hinge_minimax.funcspace.chom_factory import coordinates_then_core
from hinge_minimax.funcspace.chom_factory import single_core
from hinge_minimax.funcspace.chom_factory import single_max
from hinge_minimax.funcspace.compositional_function import CompositionalFunction
from hinge_minimax.funcspace.compositional_function import eval_chom
from hinge_minimax.funcspace.constant_core import ConstantCore
from hinge_minimax.funcspace.coordinate_core import CoordinateCore
from hinge_minimax.funcspace.holder_component import HolderComponent
from hinge_minimax.funcspace.power_core import PowerCore
from hinge_minimax.funcspace.ramp_core import RampCore


class TestCompositionalFunction(TestCase):
    """
    Tests evaluation of compositional functions.
    """

    def test_max_component(self):
        """
        Tests that a single max component returns the larger coordinate.
        """
        f = single_max(2, (1, 2))
        self.assertEqual(eval_chom(f, [0.3, 0.7]), 0.7)

    def test_identity_then_square(self):
        """
        Tests a two-layer composition of identities and a square.
        """
        f = coordinates_then_core(3, PowerCore(2.0))
        self.assertAlmostEqual(eval_chom(f, [0.5, 0.1, 0.9]), 0.25)

    def test_max_matches_bruteforce(self):
        """
        Tests the vectorized max against a per-point Python max.
        """
        f = single_max(5, (2, 4, 5))
        points = np.random.default_rng(7).random((10000, 5))
        brute = np.array([max(row[1], row[3], row[4]) for row in points])
        np.testing.assert_array_equal(f(points), brute)

    def test_domain_error(self):
        """
        Tests that points outside the cube are refused.
        """
        f = single_core(2, RampCore(0.25, 0.75), (1,), radius=2.0)
        with self.assertRaises(DomainError):
            eval_chom(f, [1.5, 0.0])

    def test_range_violation(self):
        """
        Tests that an intermediate output above 1 raises with the layer index.
        """
        first = [HolderComponent(2, (1,), ConstantCore(1.5), 1.0, 2.0)]
        second = [HolderComponent(1, (1,), CoordinateCore(), 1.0, 2.0)]
        f = CompositionalFunction(2, 1, 1, 1, 1, 1.0, 2.0, [first, second])
        with self.assertRaises(RangeViolationError) as context:
            eval_chom(f, [0.2, 0.2])
        self.assertEqual(context.exception.layer, 0)

    def test_breakpoints_follow_input_coordinates(self):
        """
        Tests that core kinks are reported against the input coordinate read.
        """
        f = single_core(3, RampCore(0.25, 0.75), (2,), radius=2.0)
        self.assertEqual(f.breakpoints(), {1: [0.25, 0.75]})
        self.assertEqual(f.active_input_indices(), [1])
