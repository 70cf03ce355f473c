
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

from typing import Dict
from typing import List
from typing import Sequence
from typing import Union

import numpy as np

from hinge_minimax.errors.domain_error import DomainError
from hinge_minimax.errors.range_violation_error import RangeViolationError
from hinge_minimax.funcspace.holder_component import HolderComponent
from hinge_minimax.funcspace.max_component import MaxComponent

Component = Union[HolderComponent, MaxComponent]

# Slack allowed on the [0,1] range of intermediate layers and on the cube
RANGE_TOLERANCE = 1e-12


class CompositionalFunction():
    """
    A function h_q o ... o h_0 on [0,1]^d whose layers are lists of
    components, each either a Hoelder component reading d* coordinates
    or a maximum over at most d_star coordinates.

    Layer 0 reads d coordinates, layers 1..q read K.  Layers before q
    produce K outputs that must stay inside [0,1]; layer q produces the
    single output.
    """

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def __init__(self, d: int, q: int, K: int, d_star: int, d_lower: int,
                 beta: float, radius: float, layers: Sequence[Sequence[Component]]):
        """
        :param d: Input dimension
        :param q: Number of layers minus one
        :param K: Width of the intermediate layers
        :param d_star: Largest index set a max component may use
        :param d_lower: Number of variables d* each Hoelder core reads
        :param beta: Smoothness order
        :param radius: Hoelder radius r
        :param layers: q+1 lists of components
        """
        # pylint: disable=invalid-name
        self.d = int(d)
        self.q = int(q)
        self.K = int(K)
        self.d_star = int(d_star)
        self.d_lower = int(d_lower)
        self.beta = float(beta)
        self.radius = float(radius)
        self.layers: List[List[Component]] = [list(layer) for layer in layers]

    def as_points(self, x) -> np.ndarray:
        """
        :param x: One point of dimension d, or an (m, d) batch
        :return: An (m, d) array, checked to lie in the unit cube
        """
        points = np.asarray(x, dtype=float).reshape(-1, self.d)
        outside = np.any((points < -RANGE_TOLERANCE) | (points > 1.0 + RANGE_TOLERANCE), axis=1)
        if np.any(outside):
            raise DomainError(f"Point {points[np.argmax(outside)].tolist()} is outside [0,1]^{self.d}")
        return points

    def layer_outputs(self, points: np.ndarray) -> List[np.ndarray]:
        """
        Evaluates every layer without any range checking.

        :param points: An (m, d) array
        :return: q+1 arrays, layer i of shape (m, len(layers[i]))
        """
        outputs = []
        current = points
        for layer in self.layers:
            current = np.column_stack([component(current) for component in layer])
            outputs.append(current)
        return outputs

    def __call__(self, x, check_range: bool = True) -> np.ndarray:
        """
        :param x: One point or an (m, d) batch in [0,1]^d
        :param check_range: When True, raise if an intermediate layer leaves [0,1]
        :return: An (m,) array
        """
        points = self.as_points(x)
        current = points
        for layer_index, layer in enumerate(self.layers):
            current = np.column_stack([component(current) for component in layer])
            if check_range and layer_index < self.q:
                bad = np.any((current < -RANGE_TOLERANCE) | (current > 1.0 + RANGE_TOLERANCE), axis=1)
                if np.any(bad):
                    row = int(np.argmax(bad))
                    raise RangeViolationError(layer_index, points[row], current[row])
        return current[:, 0]

    def active_input_indices(self) -> List[int]:
        """
        :return: Sorted 0-based input coordinates that layer 0 reads
        """
        used = set()
        for component in self.layers[0]:
            used.update(index - 1 for index in component.active_indices)
        return sorted(used)

    def breakpoints(self) -> Dict[int, List[float]]:
        """
        :return: Map from 0-based input coordinate to kink locations of layer-0 cores
        """
        merged = {}
        for component in self.layers[0]:
            if not isinstance(component, HolderComponent):
                continue
            for axis, values in component.core.breakpoints().items():
                coordinate = component.active_indices[axis] - 1
                merged.setdefault(coordinate, set()).update(values)
        return {axis: sorted(values) for axis, values in merged.items()}

    def components(self):
        """
        :return: Iterator of (layer index, component) pairs
        """
        for layer_index, layer in enumerate(self.layers):
            for component in layer:
                yield layer_index, component


def eval_chom(f: CompositionalFunction, x) -> float:
    """
    :param f: A compositional function
    :param x: A point of [0,1]^d
    :return: h_q(...h_0(x)...)
    """
    return float(f(x)[0])
