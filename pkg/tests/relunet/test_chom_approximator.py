
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

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.errors.resolution_cap_error import ResolutionCapError
from hinge_minimax.funcspace.callable_core import CallableCore
from hinge_minimax.funcspace.chom_factory import constant
from hinge_minimax.funcspace.chom_factory import coordinates_then_core
from hinge_minimax.funcspace.chom_factory import single_core
from hinge_minimax.funcspace.chom_factory import single_max
from hinge_minimax.funcspace.coordinate_core import CoordinateCore
from hinge_minimax.funcspace.power_core import PowerCore
from hinge_minimax.funcspace.ramp_core import RampCore
from hinge_minimax.relunet.chom_approximator import approximate_chom
from hinge_minimax.relunet.chom_approximator import sup_error
from hinge_minimax.relunet.chom_approximator import validation_points


class TestChomApproximator(TestCase):
    """
    Tests ReLU approximation of compositional functions.
    """

    def assert_contract(self, f, net, delta):
        """
        Checks the delta / 7 sup error on the validation points and on fresh ones.
        """
        self.assertLessEqual(sup_error(net, f, validation_points(f)), delta / 7.0)
        fresh = np.random.default_rng(99).random((2000, f.d))
        self.assertLessEqual(sup_error(net, f, fresh), delta / 7.0 + 1e-9)

    def test_constant_exact(self):
        """
        Tests that constants are represented exactly.
        """
        f = constant(2, 0.3)
        net = approximate_chom(f, 0.1)
        self.assertLess(sup_error(net, f, validation_points(f)), 1e-12)

    def test_coordinate_exact(self):
        """
        Tests that f(x) = x_1 is represented exactly.
        """
        f = single_core(1, CoordinateCore(), (1,))
        net = approximate_chom(f, 0.1)
        self.assertLess(sup_error(net, f, validation_points(f)), 1e-12)

    def test_ramp_breakpoints(self):
        """
        Tests that a ramp with off-grid kinks is exact once its breakpoints are knots.
        """
        f = single_core(2, RampCore(0.23, 0.71), (2,), radius=3.0)
        net = approximate_chom(f, 0.1)
        self.assertLess(sup_error(net, f, validation_points(f)), 1e-12)

    def test_square(self):
        """
        Tests that x_1^2 meets the delta / 7 contract.
        """
        f = single_core(1, PowerCore(2.0), (1,), radius=2.0)
        for delta in (0.5, 0.1, 0.01):
            self.assert_contract(f, approximate_chom(f, delta), delta)

    def test_two_variable_core(self):
        """
        Tests a product core read through coordinates 1 and 3 of three.
        """
        core = CallableCore(lambda points: points[:, 0] * points[:, 1], dim=2, name="product")
        f = single_core(3, core, (1, 3), radius=2.0)
        self.assert_contract(f, approximate_chom(f, 0.1), 0.1)

    def test_max_exact(self):
        """
        Tests that maximum components are exact.
        """
        f = single_max(4, (1, 3, 4))
        net = approximate_chom(f, 0.2)
        self.assertLess(sup_error(net, f, validation_points(f)), 1e-12)

    def test_composition(self):
        """
        Tests a two-layer function: coordinates copied, then a square.
        """
        f = coordinates_then_core(2, PowerCore(2.0), radius=2.0)
        net = approximate_chom(f, 0.05)
        self.assert_contract(f, net, 0.05)
        self.assertEqual(net.input_dim, 2)

    def test_resolution_cap(self):
        """
        Tests that an unreachable target reports the achieved error.
        """
        f = single_core(1, PowerCore(0.5), (1,))
        with self.assertRaises(ResolutionCapError) as context:
            approximate_chom(f, 0.01, resolution_cap=16)
        self.assertEqual(context.exception.resolution, 16)
        self.assertGreater(context.exception.achieved_error, context.exception.target_error)
        self.assertAlmostEqual(context.exception.target_error, 0.01 / 7.0)

    @timeout_decorator.timeout(300)
    def test_three_variable_contract(self):
        """
        Tests that a trained approximation is returned only when it meets the target.
        """
        core = CallableCore(lambda points: np.mean(points, axis=1), dim=3, name="mean")
        f = single_core(3, core, (1, 2, 3))
        try:
            net = approximate_chom(f, 0.2, resolution_cap=16)
            self.assertLessEqual(sup_error(net, f, validation_points(f)), 0.2 / 7.0)
        except ResolutionCapError as error:
            self.assertGreater(error.achieved_error, error.target_error)

    def test_bad_arguments(self):
        """
        Tests the delta and resolution preconditions.
        """
        f = constant(1, 0.5)
        for delta in (0.0, 0.6):
            with self.assertRaises(ParameterError):
                approximate_chom(f, delta)
        with self.assertRaises(ParameterError):
            approximate_chom(f, 0.1, start_resolution=16, resolution_cap=8)
