
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

from typing import Tuple

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.core import Core


def locate_cells(coordinates: np.ndarray, cells: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Finds the cell of a uniform partition of [0,1] into `cells` intervals
    holding each coordinate, and the local position inside that cell.
    The right end point 1 belongs to the last cell.

    :param coordinates: Array of values in [0,1]
    :param cells: Number of intervals
    :return: A tuple (index, fraction) with index in [0, cells-1]
            and fraction in [0,1]
    """
    scaled = np.asarray(coordinates, dtype=float) * cells
    index = np.clip(np.floor(scaled).astype(int), 0, cells - 1)
    fraction = scaled - index
    return index, fraction


def interpolate_segment(left: np.ndarray, right: np.ndarray, fraction: np.ndarray) -> np.ndarray:
    """
    The one formula used everywhere a piecewise-linear table is evaluated,
    so that every consumer sees bit-identical values.
    """
    return left + fraction * (right - left)


class GridTableCore(Core):
    """
    Piecewise-multilinear interpolant of a dense value table on the
    uniform grid {0, 1/m, ..., 1}^dim.
    """

    kind = "grid_table"

    def __init__(self, values):
        """
        :param values: Array of shape (m+1,)*dim with m >= 1
        """
        table = np.array(values, dtype=float)
        if table.ndim < 1 or min(table.shape) < 2 or len(set(table.shape)) != 1:
            raise ParameterError(f"Grid table needs a cubic shape with >= 2 knots, got {table.shape}")
        super().__init__(table.ndim)
        table.setflags(write=False)
        self.values = table
        self.cells = table.shape[0] - 1
        self._interpolator = None
        if self.dim > 1:
            axes = tuple(np.linspace(0.0, 1.0, self.cells + 1) for _ in range(self.dim))
            self._interpolator = RegularGridInterpolator(axes, table, method="linear",
                                                         bounds_error=False, fill_value=None)

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        if self._interpolator is not None:
            return self._interpolator(np.clip(points, 0.0, 1.0))
        index, fraction = locate_cells(points[:, 0], self.cells)
        return interpolate_segment(self.values[index], self.values[index + 1], fraction)

    def to_dict(self):
        return {"kind": self.kind, "shape": list(self.values.shape),
                "values": self.values.ravel().tolist()}

    @classmethod
    def from_dict(cls, doc):
        """
        :param doc: Dictionary made by to_dict()
        :return: A new GridTableCore
        """
        return cls(np.asarray(doc["values"], dtype=float).reshape(doc["shape"]))

    def breakpoints(self):
        knots = np.linspace(0.0, 1.0, self.cells + 1).tolist()
        return {axis: knots for axis in range(self.dim)}
