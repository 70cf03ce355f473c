
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

from hinge_minimax.bounds.vg_code import required_size
from hinge_minimax.bounds.vg_code import vg_code
from hinge_minimax.errors.parameter_error import ParameterError


class TestVGCode(TestCase):
    """
    Tests the Varshamov-Gilbert codes.
    """

    def test_full_cube(self):
        """
        Tests that short codes are the whole cube.
        """
        code = vg_code(4)
        self.assertEqual(code.size, 16)
        self.assertEqual(code.min_distance(), 1)
        self.assertTrue(code.is_certified())

    def test_packings(self):
        """
        Tests the size and distance guarantees of packed codes by direct recheck.
        """
        for m in (16, 24, 40):
            code = vg_code(m, seed=m)
            self.assertGreaterEqual(code.size, required_size(m))
            words = code.words.astype(int)
            distances = np.sum(words[:, None, :] != words[None, :, :], axis=2)
            off_diagonal = distances[~np.eye(code.size, dtype=bool)]
            self.assertGreaterEqual(off_diagonal.min(), m / 8.0)
        self.assertGreaterEqual(vg_code(16).size, 5)

    def test_deterministic(self):
        """
        Tests that a seed fixes the code.
        """
        np.testing.assert_array_equal(vg_code(32, seed=7).words, vg_code(32, seed=7).words)

    def test_invalid(self):
        """
        Tests a length of one.
        """
        with self.assertRaises(ParameterError):
            vg_code(1)
