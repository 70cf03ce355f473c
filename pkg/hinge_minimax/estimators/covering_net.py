
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
Finite covering nets of compositional classes: every Hoelder slot draws
its core from a HolderGrid, every max slot an index subset, and members
are all combinations of slot choices.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import List
from typing import Sequence
from typing import Tuple

from scipy import stats

from hinge_minimax.errors.capacity_error import CapacityError
from hinge_minimax.estimators.chain_covering_net import ChainCoveringNet
from hinge_minimax.estimators.covering_space import CoveringSpace
from hinge_minimax.estimators.holder_grid import HolderGrid
from hinge_minimax.funcspace.compositional_function import CompositionalFunction
from hinge_minimax.funcspace.holder_component import HolderComponent
from hinge_minimax.funcspace.max_component import MaxComponent

DEFAULT_MEMBER_CAP = 200_000

LOGGER = logging.getLogger(__name__)


@dataclass
class CoveringNet:
    """
    The members of a covering net with its radius xi.
    """

    members: List[CompositionalFunction]
    radius: float
    space: CoveringSpace

    def __len__(self) -> int:
        return len(self.members)


def grid_for(space: CoveringSpace, xi: float) -> HolderGrid:
    """
    :return: The HolderGrid every Hoelder slot of the space draws from
    """
    return HolderGrid(space.d_lower, space.beta, space.radius, xi)


def holder_subsets(space: CoveringSpace, input_dim: int) -> List[Tuple[int, ...]]:
    """
    :return: 1-based index sets a Hoelder slot reading input_dim coordinates may use
    """
    return list(itertools.combinations(range(1, input_dim + 1), space.d_lower))


def max_subsets(space: CoveringSpace, input_dim: int) -> List[Tuple[int, ...]]:
    """
    :return: 1-based index sets of the max slots, smaller sets first
    """
    subsets = []
    for size in range(1, min(space.d_star, input_dim) + 1):
        subsets.extend(itertools.combinations(range(1, input_dim + 1), size))
    return subsets


def grid_member_count(grid: HolderGrid, cap: int) -> int:
    """
    :return: Number of HolderGrid members, exact for one variable;
            raises CapacityError above the cap for more
    """
    if grid.d_lower == 1:
        return ChainCoveringNet(grid).count()
    return grid.tables(cap).shape[0]


def slot_dims(space: CoveringSpace) -> List[int]:
    """
    :return: Input width of every slot, layer by layer and slot by slot
    """
    if space.q == 0:
        return [space.d]
    dims = [space.d] * space.K
    dims.extend([space.K] * (space.K * (space.q - 1)))
    dims.append(space.K)
    return dims


def covering_net_size(space: CoveringSpace, xi: float, cap: int = DEFAULT_MEMBER_CAP) -> int:
    """
    :param space: The class being covered
    :param xi: Covering radius in (0, 1]
    :param cap: Cap on the tables of multivariate grids
    :return: Number of members of the covering net
    """
    per_grid = grid_member_count(grid_for(space, xi), cap)
    size = 1
    for input_dim in slot_dims(space):
        size *= per_grid * len(holder_subsets(space, input_dim)) + len(max_subsets(space, input_dim))
    return size


def slot_choices(space: CoveringSpace, grid: HolderGrid, input_dim: int, cap: int) -> List:
    """
    :return: Components one slot may hold: grid cores on each index set
            in order, then the max components
    """
    tables = grid.tables(cap)
    radius = grid.member_radius()
    choices = []
    for subset in holder_subsets(space, input_dim):
        choices.extend(HolderComponent(input_dim, subset, grid.core(table), space.beta, radius)
                       for table in tables)
    choices.extend(MaxComponent(input_dim, subset) for subset in max_subsets(space, input_dim))
    return choices


def assemble(space: CoveringSpace, grid: HolderGrid, components: Sequence) -> CompositionalFunction:
    """
    :param components: One component per slot, in slot order
    :return: The member function
    """
    if space.q == 0:
        layers = [list(components)]
    else:
        width = space.K
        layers = [list(components[start:start + width])
                  for start in range(0, width * space.q, width)]
        layers.append([components[-1]])
    return CompositionalFunction(space.d, space.q, space.K, max(1, space.d_star), space.d_lower,
                                 space.beta, grid.member_radius(), layers)


def build_covering_net(space: CoveringSpace, xi: float, cap: int = DEFAULT_MEMBER_CAP) -> CoveringNet:
    """
    Members are ordered by their slot choices, the first slot varying slowest.

    :param space: The class being covered
    :param xi: Covering radius in (0, 1]
    :param cap: Largest number of members allowed
    :return: The materialized CoveringNet
    """
    grid = grid_for(space, xi)
    size = covering_net_size(space, xi, cap)
    if size > cap:
        raise CapacityError(size, cap, "covering net members")
    LOGGER.info("Covering net for xi=%g: %d members, %d cells, %d levels", xi, size, grid.cells, grid.levels)

    choices_by_dim = {}
    slots = []
    for input_dim in slot_dims(space):
        if input_dim not in choices_by_dim:
            choices_by_dim[input_dim] = slot_choices(space, grid, input_dim, cap)
        slots.append(choices_by_dim[input_dim])
    members = [assemble(space, grid, combination) for combination in itertools.product(*slots)]
    return CoveringNet(members, xi, space)


def log_size_slope(space: CoveringSpace, radii: Sequence[float], cap: int = DEFAULT_MEMBER_CAP) -> float:
    """
    :return: Least-squares slope of log log |net| against log(1/xi)
    """
    xs = [math.log(1.0 / xi) for xi in radii]
    ys = [math.log(math.log(covering_net_size(space, xi, cap))) for xi in radii]
    return float(stats.linregress(xs, ys).slope)
