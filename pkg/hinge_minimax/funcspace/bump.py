
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

"""
Bump functions and disjointly supported sums of their translates.
"""
import itertools

import numpy as np
from scipy import integrate

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.bump_spec import BumpSpec
from hinge_minimax.funcspace.grid_table_core import locate_cells


def _batch(x, dim: int):
    array = np.asarray(x, dtype=float)
    single = array.ndim == 0 or (array.ndim == 1 and array.shape[0] == dim)
    return array.reshape(-1, dim), single


def bump(spec: BumpSpec, x):
    """
    :param spec: The bump to evaluate
    :param x: One point of dimension spec.dim, or an (m, dim) batch
    :return: A float for one point, an (m,) array for a batch
    """
    points, single = _batch(x, spec.dim)
    values = spec(points)
    return float(values[0]) if single else values


def grid_centers(grid_size: int, dim: int) -> np.ndarray:
    """
    :param grid_size: Q, the number of cells per axis
    :param dim: Number of axes
    :return: Array of shape (Q,)*dim + (dim,) holding the cell centers (2k+1)/(2Q)
    """
    axis = (2.0 * np.arange(grid_size) + 1.0) / (2.0 * grid_size)
    mesh = np.meshgrid(*([axis] * dim), indexing="ij")
    return np.stack(mesh, axis=-1)


def check_code(grid_size: int, code, dim: int) -> np.ndarray:
    """
    :param grid_size: Q
    :param code: Binary array of shape (Q,)*dim
    :param dim: Number of axes
    :return: The code as an int8 array, validated
    """
    code = np.asarray(code, dtype=np.int8)
    if code.shape != (grid_size,) * dim:
        raise ParameterError(f"Code shape {code.shape} does not match grid {(grid_size,) * dim}")
    if np.any((code != 0) & (code != 1)):
        raise ParameterError("Code entries must be 0 or 1")
    return code


# pylint: disable=too-many-arguments,too-many-positional-arguments
def bump_grid_sum(grid_size: int, code, amplitude: float, beta: float, spec: BumpSpec, x):
    """
    Evaluates sum over cell centers a of (amplitude / Q^beta) * T(a) * bump(Q (x - a)).

    Each x lies in one cell of the grid and, since the bump support radius
    is at most 1/2, only that cell's translate can be nonzero there.

    :param grid_size: Q >= 1
    :param code: Binary array T of shape (Q,)*d*
    :param amplitude: Amplitude, at most 1
    :param beta: Scale exponent
    :param spec: The bump profile
    :param x: One point of dimension d*, or an (m, d*) batch
    :return: A float for one point, an (m,) array for a batch
    """
    if grid_size < 1:
        raise ParameterError(f"Grid size must be >= 1, got {grid_size}")
    if amplitude > 1.0:
        raise ParameterError(f"Amplitude must be <= 1, got {amplitude}")
    code = check_code(grid_size, code, spec.dim)
    points, single = _batch(x, spec.dim)

    cell, _ = locate_cells(points, grid_size)
    centers = (2.0 * cell + 1.0) / (2.0 * grid_size)
    bits = code[tuple(cell[:, axis] for axis in range(spec.dim))]
    values = (amplitude / grid_size ** beta) * bits * spec(grid_size * (points - centers))
    return float(values[0]) if single else values


def count_nonzero_translates(grid_size: int, code, spec: BumpSpec, x) -> np.ndarray:
    """
    Brute-force count of how many translated bumps are nonzero at each point.

    :return: An (m,) integer array
    """
    code = check_code(grid_size, code, spec.dim)
    points, _ = _batch(x, spec.dim)
    counts = np.zeros(points.shape[0], dtype=int)
    for cell in itertools.product(range(grid_size), repeat=spec.dim):
        if code[cell] == 0:
            continue
        center = (2.0 * np.asarray(cell) + 1.0) / (2.0 * grid_size)
        counts += spec(grid_size * (points - center)) > 0.0
    return counts


def bump_mass(spec: BumpSpec) -> float:
    """
    :param spec: The bump profile
    :return: The integral of the bump over R^dim
    """
    dim = spec.dim
    plateau = (2.0 * spec.inner_radius) ** dim

    def shell(radius):
        # d/dt of the volume (2t)^dim of the sup-norm ball
        return float(spec.profile(radius)) * 2.0 * dim * (2.0 * radius) ** (dim - 1)

    transition, _ = integrate.quad(shell, spec.inner_radius, spec.outer_radius)
    return plateau + transition
