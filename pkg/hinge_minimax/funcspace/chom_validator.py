
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

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.compositional_function import CompositionalFunction
from hinge_minimax.funcspace.compositional_function import RANGE_TOLERANCE
from hinge_minimax.funcspace.holder_component import HolderComponent
from hinge_minimax.funcspace.holder_probe import holder_parts
from hinge_minimax.funcspace.tensor_grid import tensor_grid
from hinge_minimax.funcspace.validation_report import CheckResult
from hinge_minimax.funcspace.validation_report import ValidationReport

DEFAULT_GRID_RESOLUTION = 33

# Relative slack on sampled norms, so cores sitting exactly on the radius pass
NORM_TOLERANCE = 1e-9


def _check_structure(f: CompositionalFunction, report: ValidationReport):
    problems = []
    if len(f.layers) != f.q + 1:
        problems.append(f"expected {f.q + 1} layers, got {len(f.layers)}")
    for layer_index, layer in enumerate(f.layers):
        expected_outputs = 1 if layer_index == f.q else f.K
        expected_input = f.d if layer_index == 0 else f.K
        if len(layer) != expected_outputs:
            problems.append(f"layer {layer_index} has {len(layer)} outputs, expected {expected_outputs}")
        for component in layer:
            if component.input_dim != expected_input:
                problems.append(f"layer {layer_index} component reads dimension {component.input_dim},"
                                f" expected {expected_input}")
    report.add(CheckResult("structure", not problems, "; ".join(problems)))


def _check_dimensions(f: CompositionalFunction, report: ValidationReport):
    passed = f.d_lower <= f.d and f.d_lower * f.q <= f.K * f.q and f.d_lower >= 1
    report.add(CheckResult("dimension_condition", passed,
                           f"d*={f.d_lower}, d={f.d}, q={f.q}, K={f.K}"))


def _check_indices(f: CompositionalFunction, report: ValidationReport):
    for layer_index, component in f.components():
        indices = component.active_indices
        in_range = all(1 <= index <= component.input_dim for index in indices) \
            and len(set(indices)) == len(indices)
        if isinstance(component, HolderComponent):
            sized = len(indices) == f.d_lower
        else:
            sized = 1 <= len(indices) <= f.d_star
        report.add(CheckResult(f"indices[{layer_index}]", in_range and sized,
                               f"{type(component).__name__} indices {list(indices)}"))


def _check_cores(f: CompositionalFunction, grid_resolution: int, report: ValidationReport):
    for layer_index, component in f.components():
        if not isinstance(component, HolderComponent):
            continue
        sup_norm, quotient, witness = holder_parts(component.core, f.beta, grid_resolution,
                                                   component.d_lower)
        limit = f.radius * (1.0 + NORM_TOLERANCE)
        report.add(CheckResult(f"sup_norm[{layer_index}]", sup_norm <= limit,
                               f"sampled sup norm {sup_norm:.6g} vs radius {f.radius:.6g}",
                               value=sup_norm))
        report.add(CheckResult(f"holder_quotient[{layer_index}]", quotient <= limit,
                               f"sampled quotient {quotient:.6g} vs radius {f.radius:.6g}",
                               value=quotient, witness=witness.tolist()))


def _check_range(f: CompositionalFunction, grid_resolution: int, report: ValidationReport):
    if f.q == 0:
        report.add(CheckResult("range", True, "no intermediate layers"))
        return
    points = tensor_grid(f.d, grid_resolution)
    outputs = f.layer_outputs(points)
    worst_excess = 0.0
    witness = None
    for layer_index in range(f.q):
        values = outputs[layer_index]
        excess = np.maximum(values - 1.0, -values).max(axis=1)
        row = int(np.argmax(excess))
        if excess[row] > worst_excess:
            worst_excess = float(excess[row])
            witness = {"layer": layer_index, "point": points[row].tolist(),
                       "values": values[row].tolist()}
    passed = worst_excess <= RANGE_TOLERANCE
    report.add(CheckResult("range", passed,
                           "intermediate outputs inside [0,1]" if passed
                           else f"intermediate output leaves [0,1] by {worst_excess:.6g}",
                           value=worst_excess, witness=None if passed else [witness]))


def validate_chom(f: CompositionalFunction,
                  grid_resolution: int = DEFAULT_GRID_RESOLUTION) -> ValidationReport:
    """
    Checks the structural, dimension, index, core-norm and range
    conditions of a compositional function on grids.  Norm checks are
    sampled, so passing is a necessary condition, not a certificate.

    :param f: The function to check
    :param grid_resolution: Points per axis of the validation grids, >= 2
    :return: A ValidationReport; failures carry witnesses
    """
    if grid_resolution < 2:
        raise ParameterError(f"Grid resolution must be >= 2, got {grid_resolution}")

    report = ValidationReport()
    _check_structure(f, report)
    _check_dimensions(f, report)
    _check_indices(f, report)
    if not report.passed:
        # Evaluation is meaningless on a malformed function
        return report

    _check_cores(f, grid_resolution, report)
    _check_range(f, grid_resolution, report)
    return report

