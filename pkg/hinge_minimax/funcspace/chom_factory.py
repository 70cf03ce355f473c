
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
Shortcuts for the compositional functions used throughout the package.
"""
from typing import Sequence

from hinge_minimax.funcspace.compositional_function import CompositionalFunction
from hinge_minimax.funcspace.constant_core import ConstantCore
from hinge_minimax.funcspace.coordinate_core import CoordinateCore
from hinge_minimax.funcspace.core import Core
from hinge_minimax.funcspace.holder_component import HolderComponent
from hinge_minimax.funcspace.max_component import MaxComponent


# pylint: disable=too-many-arguments,too-many-positional-arguments
def single_core(d: int, core: Core, active_indices: Sequence[int], beta: float = 1.0,
                radius: float = 1.0, d_star: int = 1) -> CompositionalFunction:
    """
    :return: A q = 0 function applying one core to the given coordinates
    """
    component = HolderComponent(d, tuple(active_indices), core, beta, radius)
    return CompositionalFunction(d, 0, 1, d_star, len(active_indices), beta, radius, [[component]])


def constant(d: int, value: float, beta: float = 1.0, radius: float = 1.0) -> CompositionalFunction:
    """
    :return: The q = 0 function x -> value, read through coordinate 1
    """
    return single_core(d, ConstantCore(value), (1,), beta, max(radius, abs(value)))


def single_max(d: int, active_indices: Sequence[int], d_star: int = None) -> CompositionalFunction:
    """
    :return: The q = 0 function x -> max of the given coordinates
    """
    if d_star is None:
        d_star = len(active_indices)
    component = MaxComponent(d, tuple(active_indices))
    return CompositionalFunction(d, 0, 1, d_star, 1, 1.0, 1.0, [[component]])


def coordinates_then_core(d: int, core: Core, beta: float = 1.0, radius: float = 1.0) -> CompositionalFunction:
    """
    A q = 1 function whose layer 0 copies the d coordinates through
    identity cores (K = d) and whose layer 1 applies the scalar `core`
    to the first of them.

    :return: The composed function
    """
    first = [HolderComponent(d, (index,), CoordinateCore(), beta, radius) for index in range(1, d + 1)]
    second = [HolderComponent(d, (1,), core, beta, radius)]
    return CompositionalFunction(d, 1, d, 1, 1, beta, radius, [first, second])


# pylint: disable=too-many-arguments,too-many-positional-arguments
def stacked(d: int, q: int, K: int, d_lower: int, beta: float, radius: float,
            first: Core, middle: Core, last: Core) -> CompositionalFunction:
    """
    A q >= 1 function that carries one signal through the first slot of
    every layer: layer 0 applies `first` to coordinates 1..d*, layers
    1..q-1 apply `middle`, layer q applies `last`.  Unused slots of the
    intermediate layers are the zero function.

    :return: The composed function
    """
    indices = tuple(range(1, d_lower + 1))

    def layer(input_dim: int, core: Core):
        zeros = [HolderComponent(input_dim, indices, ConstantCore(0.0, d_lower), beta, radius)
                 for _ in range(K - 1)]
        return [HolderComponent(input_dim, indices, core, beta, radius)] + zeros

    layers = [layer(d, first)]
    layers.extend(layer(K, middle) for _ in range(q - 1))
    layers.append([HolderComponent(K, indices, last, beta, radius)])
    return CompositionalFunction(d, q, K, 1, d_lower, beta, radius, layers)
