
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

import itertools
from unittest import TestCase

import numpy as np

from hinge_minimax.errors.capacity_error import CapacityError
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.chain_covering_net import ChainCoveringNet
from hinge_minimax.estimators.holder_grid import HolderGrid


def adjacent(table: np.ndarray, side: int, dim: int) -> bool:
    """
    :return: True when knots that are neighbors along an axis differ by at most one level
    """
    shaped = np.asarray(table).reshape((side,) * dim)
    return all(np.all(np.abs(np.diff(shaped, axis=axis)) <= 1) for axis in range(dim))


class TestHolderGrid(TestCase):
    """
    Tests the level-table nets of Hoelder functions and their chain form.
    """

    def test_sizes(self):
        """
        Tests cells, levels and the member count for xi = 1/2 and xi = 1.
        """
        grid = HolderGrid(1, 1.0, 1.0, 0.5)
        self.assertEqual(grid.cells, 4)
        self.assertEqual(grid.levels, 5)
        self.assertEqual(ChainCoveringNet(grid).count(), 259)

        coarse = HolderGrid(1, 1.0, 1.0, 1.0)
        self.assertEqual((coarse.cells, coarse.levels), (2, 3))
        self.assertEqual(ChainCoveringNet(coarse).count(), 17)

    def test_invalid(self):
        """
        Tests refused grids.
        """
        with self.assertRaises(ParameterError):
            HolderGrid(1, 1.0, 1.0, 0.0)
        with self.assertRaises(ParameterError):
            HolderGrid(1, 1.0, 1.0, 1.5)
        with self.assertRaises(ParameterError):
            HolderGrid(0, 1.0, 1.0, 0.5)
        with self.assertRaises(ParameterError):
            ChainCoveringNet(HolderGrid(2, 1.0, 1.0, 0.5))

    def test_chain_matches_tables(self):
        """
        Tests that unrank() walks the enumerated tables in order and rank() inverts it.
        """
        grid = HolderGrid(1, 1.0, 1.0, 0.5)
        chain = ChainCoveringNet(grid)
        tables = grid.tables(1000)
        self.assertEqual(tables.shape, (259, 5))
        for index in range(chain.count()):
            np.testing.assert_array_equal(chain.unrank(index), tables[index])
            self.assertEqual(chain.rank(tables[index]), index)
        with self.assertRaises(ParameterError):
            chain.unrank(259)
        with self.assertRaises(ParameterError):
            chain.rank([0, 2, 2, 2, 2])

    def test_two_variable_tables(self):
        """
        Tests the enumeration of 3 x 3 tables against brute force.
        """
        grid = HolderGrid(2, 1.0, 0.5, 1.0)
        self.assertEqual((grid.cells, grid.levels, grid.knots), (2, 3, 9))
        expected = [table for table in itertools.product(range(3), repeat=9) if adjacent(table, 3, 2)]
        np.testing.assert_array_equal(grid.tables(len(expected)), np.array(expected))
        with self.assertRaises(CapacityError):
            grid.tables(len(expected) - 1)

    def test_one_variable_cover(self):
        """
        Tests that rounding random Lipschitz targets lands within xi of them.
        """
        rng = np.random.default_rng(5)
        grid = HolderGrid(1, 1.0, 1.0, 0.1)
        t = np.linspace(0.0, 1.0, 2001).reshape(-1, 1)
        for _ in range(20):
            amplitude = rng.uniform(0.1, 0.45)
            frequency = rng.uniform(0.5, 1.0) / amplitude
            phase = rng.uniform(0.0, 2.0 * np.pi)

            def target(points, amplitude=amplitude, frequency=frequency, phase=phase):
                return 0.5 + amplitude * np.sin(frequency * points[:, 0] + phase)

            levels = grid.nearest_levels(target)
            self.assertTrue(adjacent(levels, grid.cells + 1, 1))
            error = np.max(np.abs(grid.core(levels)(t) - target(t)))
            self.assertLessEqual(error, grid.xi)

    def test_rough_cover(self):
        """
        Tests the cover for a target that is only Hoelder of order 1/2.
        """
        grid = HolderGrid(1, 0.5, 1.0, 0.25)
        self.assertEqual(grid.cells, 64)
        t = np.linspace(0.0, 1.0, 4001).reshape(-1, 1)
        for center in (0.0, 0.3, 0.77):

            def target(points, center=center):
                return 0.1 + 0.4 * np.sqrt(np.abs(points[:, 0] - center))

            levels = grid.nearest_levels(target)
            self.assertTrue(adjacent(levels, grid.cells + 1, 1))
            self.assertLessEqual(np.max(np.abs(grid.core(levels)(t) - target(t))), grid.xi)

    def test_two_variable_cover(self):
        """
        Tests the cover of a smooth function of two variables.
        """
        grid = HolderGrid(2, 1.0, 1.0, 0.2)
        points = np.random.default_rng(8).random((5000, 2))

        def target(points):
            return 0.5 + 0.3 * np.sin(points[:, 0] + 2.0 * points[:, 1])

        levels = grid.nearest_levels(target)
        self.assertTrue(adjacent(levels, grid.cells + 1, 2))
        self.assertLessEqual(np.max(np.abs(grid.core(levels)(points) - target(points))), grid.xi)

    def test_chain_erm_brute_force(self):
        """
        Tests the Viterbi pass against scoring every member.
        """
        grid = HolderGrid(1, 1.0, 1.0, 0.5)
        chain = ChainCoveringNet(grid)
        rng = np.random.default_rng(13)
        coordinates = rng.random(150)
        labels = np.where(rng.random(150) < coordinates, 1.0, -1.0)

        scores = []
        for table in grid.tables(1000):
            predictions = np.where(2.0 * grid.core(table)(coordinates.reshape(-1, 1)) - 1.0 >= 0.0, 1.0, -1.0)
            scores.append(int(np.sum(predictions != labels)))
        rank, levels, mistakes = chain.erm(coordinates, labels)
        self.assertEqual(mistakes, min(scores))
        self.assertEqual(rank, int(np.argmin(scores)))
        np.testing.assert_array_equal(levels, chain.unrank(rank))
