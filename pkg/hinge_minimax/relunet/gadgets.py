
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
Small exact ReLU constructions the approximating networks are built from.
"""
from typing import Sequence

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.relunet.layer_stack import LayerStack


def constant_stack(input_dim: int, value: float) -> LayerStack:
    """
    :param input_dim: Number of inputs
    :param value: The constant
    :return: x -> value, through one unit s_{-1}(0) = 1
    """
    return LayerStack([np.zeros((1, input_dim)), [[value]]], [[-1.0]])


def interpolation_1d_stack(knots: Sequence[float], values: Sequence[float]) -> LayerStack:
    """
    Piecewise-linear interpolant on [0,1] with one hidden layer:
    y_0 + s_0 t + sum_j (s_j - s_{j-1}) s(t - t_j), where the first
    knot is 0 so that s(t - 0) = t on [0,1].

    :param knots: Increasing knots starting at 0 and ending at 1
    :param values: Values at the knots
    :return: A one-input stack
    """
    knots = np.asarray(knots, dtype=float)
    values = np.asarray(values, dtype=float)
    if knots.shape != values.shape or knots.shape[0] < 2 or knots[0] != 0.0 \
            or np.any(np.diff(knots) <= 0.0):
        raise ParameterError("Interpolation needs increasing knots from 0 with one value each")

    slopes = np.diff(values) / np.diff(knots)
    changes = np.concatenate([[slopes[0]], np.diff(slopes)])
    # One unit per knot except the last, plus the constant unit
    first = np.concatenate([np.ones(knots.shape[0] - 1), [0.0]]).reshape(-1, 1)
    shifts = np.concatenate([knots[:-1], [-1.0]])
    output = np.concatenate([changes, [values[0]]]).reshape(1, -1)
    return LayerStack([first, output], [shifts])


def _hat_rows(forms: np.ndarray, offsets: np.ndarray):
    # Units s(form - t) for t = offset-1, offset, offset+1 give the hat at offset
    return np.repeat(forms, 3 * offsets.shape[0], axis=0), \
        (offsets[:, None] + np.array([-1.0, 0.0, 1.0])[None, :]).ravel()


def kuhn_2d_stack(cells: int, values: np.ndarray) -> LayerStack:
    """
    Continuous piecewise-linear interpolant on the triangulation of the
    uniform grid with `cells` intervals per axis whose diagonals run
    along (1,1).  The nodal basis function at node (p, q) is
    min{hat(a - p), hat(b - q), hat(a - b - p + q)} with a = cells * x,
    b = cells * y and hat(t) = max{0, 1 - |t|}; each hat is
    s(t+1) - 2 s(t) + s(t-1) and each minimum min{u, w} = u - s(u - w).

    :param cells: Intervals per axis
    :param values: (cells+1, cells+1) nodal values
    :return: A two-input stack of depth 3
    """
    values = np.asarray(values, dtype=float)
    if values.shape != (cells + 1, cells + 1):
        raise ParameterError(f"Need {(cells + 1, cells + 1)} nodal values, got {values.shape}")
    nodes = np.argwhere(values != 0.0)
    if nodes.shape[0] == 0:
        return constant_stack(2, 0.0)

    grid = np.arange(cells + 1, dtype=float)
    differences = np.arange(-cells, cells + 1, dtype=float)
    forms = np.array([[cells, 0.0], [0.0, cells], [cells, -cells]])
    rows_a, shifts_a = _hat_rows(forms[0:1], grid)
    rows_b, shifts_b = _hat_rows(forms[1:2], grid)
    rows_d, shifts_d = _hat_rows(forms[2:3], differences)
    first = np.vstack([rows_a, rows_b, rows_d])
    first_shifts = np.concatenate([shifts_a, shifts_b, shifts_d])
    base_b = rows_a.shape[0]
    base_d = base_b + rows_b.shape[0]
    hat_pattern = np.array([1.0, -2.0, 1.0])

    node_count = nodes.shape[0]
    second = np.zeros((3 * node_count, first.shape[0]))
    third = np.zeros((2 * node_count, 3 * node_count))
    output = np.zeros((1, 2 * node_count))
    for row, (p, q) in enumerate(nodes):
        hat_a = slice(3 * p, 3 * p + 3)
        hat_b = slice(base_b + 3 * q, base_b + 3 * q + 3)
        offset = int(p - q + cells)
        hat_d = slice(base_d + 3 * offset, base_d + 3 * offset + 3)
        # s(hat_a), s(hat_a - hat_b), s(hat_d)
        second[3 * row, hat_a] = hat_pattern
        second[3 * row + 1, hat_a] = hat_pattern
        second[3 * row + 1, hat_b] -= hat_pattern
        second[3 * row + 2, hat_d] = hat_pattern
        # m = min(hat_a, hat_b); units s(m) and s(m - hat_d)
        third[2 * row, 3 * row:3 * row + 2] = [1.0, -1.0]
        third[2 * row + 1, 3 * row:3 * row + 3] = [1.0, -1.0, -1.0]
        output[0, 2 * row:2 * row + 2] = values[p, q] * np.array([1.0, -1.0])

    return LayerStack([first, second, third, output],
                      [first_shifts, np.zeros(second.shape[0]), np.zeros(third.shape[0])])


def kuhn_2d_values(function, cells: int) -> np.ndarray:
    """
    :param function: Vectorized map of (m, 2) arrays
    :param cells: Intervals per axis
    :return: The (cells+1, cells+1) nodal values of the function
    """
    axis = np.linspace(0.0, 1.0, cells + 1)
    first, second = np.meshgrid(axis, axis, indexing="ij")
    points = np.column_stack([first.ravel(), second.ravel()])
    return np.asarray(function(points), dtype=float).reshape(cells + 1, cells + 1)


def max_stack(input_dim: int, indices: Sequence[int]) -> LayerStack:
    """
    Maximum of the selected inputs by a tree of pairwise maxima
    max{a, b} = s(a - b) + s(b) - s(-b).  Depth is ceil(log2 len(indices)).

    :param input_dim: Number of inputs
    :param indices: 0-based inputs to take the maximum of
    :return: A one-output stack
    """
    if not indices:
        raise ParameterError("Need at least one index")
    # Each current value is a row expressing it in the current units
    values = np.zeros((len(indices), input_dim))
    values[np.arange(len(indices)), list(indices)] = 1.0
    weights = []
    shifts = []
    while values.shape[0] > 1:
        rows = []
        sums = []
        for start in range(0, values.shape[0], 2):
            if start + 1 < values.shape[0]:
                a, b = values[start], values[start + 1]
                base = len(rows)
                rows.extend([a - b, b, -b])
                sums.append((base, [1.0, 1.0, -1.0]))
            else:
                c = values[start]
                base = len(rows)
                rows.extend([c, -c])
                sums.append((base, [1.0, -1.0]))
        weights.append(np.array(rows))
        shifts.append(np.zeros(len(rows)))
        values = np.zeros((len(sums), len(rows)))
        for row, (base, coefficients) in enumerate(sums):
            values[row, base:base + len(coefficients)] = coefficients
    weights.append(values)
    return LayerStack(weights, shifts)
