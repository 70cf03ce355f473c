
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
from dataclasses import dataclass

import numpy as np

from hinge_minimax.errors.capacity_error import CapacityError
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.grid_table_core import GridTableCore

# Rounding slack when turning spacings into counts
COUNT_SLACK = 1e-9


@dataclass(frozen=True)
class HolderGrid:
    """
    Finite net for the functions of d* variables with values in [0,1]
    that are Hoelder of order min(1, beta) with constant r.

    Members are multilinear interpolants of level tables on a uniform
    knot grid.  Knot values are multiples of xi / 2, and knots that are
    neighbors along an axis differ by at most one level.  The knot
    spacing makes r (sqrt(d*) h)^min(1, beta) <= xi / 2, so rounding a
    target down to the levels at the knots lands within xi of it.
    """

    d_lower: int
    beta: float
    radius: float
    xi: float

    def __post_init__(self):
        if self.d_lower < 1 or self.beta <= 0.0 or self.radius <= 0.0 or not 0.0 < self.xi <= 1.0:
            raise ParameterError(f"Invalid Hoelder grid {self}")

    @property
    def knot_spacing(self) -> float:
        """
        :return: The largest admissible knot spacing h
        """
        exponent = min(1.0, self.beta)
        return (self.xi / (2.0 * self.radius)) ** (1.0 / exponent) / math.sqrt(self.d_lower)

    @property
    def cells(self) -> int:
        """
        :return: Intervals per axis
        """
        return max(1, math.ceil(1.0 / self.knot_spacing - COUNT_SLACK))

    @property
    def level_step(self) -> float:
        """
        :return: Spacing xi / 2 of the value levels
        """
        return self.xi / 2.0

    @property
    def levels(self) -> int:
        """
        :return: Number of value levels in [0,1]
        """
        return math.floor(1.0 / self.level_step + COUNT_SLACK) + 1

    @property
    def knots(self) -> int:
        """
        :return: Number of knots of one table
        """
        return (self.cells + 1) ** self.d_lower

    def member_radius(self) -> float:
        """
        :return: A Hoelder radius every member respects: members have sup norm
                at most 1 and Lipschitz constant at most sqrt(d*) * cells * xi / 2
        """
        return max(1.0, math.sqrt(self.d_lower) * self.cells * self.level_step)

    def level_values(self, levels) -> np.ndarray:
        """
        :param levels: Integer level indices
        :return: The corresponding values
        """
        return np.asarray(levels, dtype=float) * self.level_step

    def quantize(self, values) -> np.ndarray:
        """
        :param values: Function values in [0,1]
        :return: Level indices rounded down
        """
        levels = np.floor(np.asarray(values, dtype=float) / self.level_step + COUNT_SLACK)
        return np.clip(levels, 0, self.levels - 1).astype(int)

    def knot_points(self) -> np.ndarray:
        """
        :return: The knots as a (knots, d*) array in table (C) order
        """
        axis = np.linspace(0.0, 1.0, self.cells + 1)
        mesh = np.meshgrid(*([axis] * self.d_lower), indexing="ij")
        return np.stack([coordinates.ravel() for coordinates in mesh], axis=1)

    def core(self, levels) -> GridTableCore:
        """
        :param levels: One table of level indices, flattened in C order
        :return: The member core
        """
        shape = (self.cells + 1,) * self.d_lower
        return GridTableCore(self.level_values(levels).reshape(shape))

    def nearest_levels(self, function) -> np.ndarray:
        """
        :param function: A vectorized map of (m, d*) arrays with values in [0,1]
        :return: The level table of the member rounding the function down at the knots
        """
        return self.quantize(function(self.knot_points()))

    def tables(self, cap: int) -> np.ndarray:
        """
        Enumerates every admissible level table, extending partial tables
        knot by knot in C order; the result is in lexicographic order.

        :param cap: Largest number of tables allowed
        :return: A (count, knots) integer array
        """
        shape = (self.cells + 1,) * self.d_lower
        strides = [int(np.prod(shape[axis + 1:])) for axis in range(self.d_lower)]
        offsets = np.array([-1, 0, 1], dtype=np.int32)
        tables = np.arange(self.levels, dtype=np.int32).reshape(-1, 1)
        for knot in range(1, self.knots):
            position = np.unravel_index(knot, shape)
            neighbors = [knot - strides[axis] for axis in range(self.d_lower) if position[axis] > 0]
            rows = np.repeat(tables, 3, axis=0)
            candidates = rows[:, neighbors[0]] + np.tile(offsets, tables.shape[0])
            allowed = (candidates >= 0) & (candidates < self.levels)
            for neighbor in neighbors[1:]:
                allowed &= np.abs(candidates - rows[:, neighbor]) <= 1
            tables = np.column_stack([rows[allowed], candidates[allowed]])
            # Every partial table has at least one extension, so counts never shrink
            if tables.shape[0] > cap:
                raise CapacityError(tables.shape[0], cap, "level tables")
        return tables
