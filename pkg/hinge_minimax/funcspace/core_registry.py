
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

from typing import Any
from typing import Dict

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.bump_sum_core import BumpSumCore
from hinge_minimax.funcspace.constant_core import ConstantCore
from hinge_minimax.funcspace.coordinate_core import CoordinateCore
from hinge_minimax.funcspace.core import Core
from hinge_minimax.funcspace.grid_table_core import GridTableCore
from hinge_minimax.funcspace.linear_combination_core import LinearCombinationCore
from hinge_minimax.funcspace.power_core import PowerCore
from hinge_minimax.funcspace.ramp_core import RampCore
from hinge_minimax.funcspace.step_core import StepCore

CORE_CLASSES = {
    core_class.kind: core_class
    for core_class in (BumpSumCore, ConstantCore, CoordinateCore, GridTableCore,
                       LinearCombinationCore, PowerCore, RampCore, StepCore)
}


def core_from_dict(doc: Dict[str, Any]) -> Core:
    """
    :param doc: A dictionary made by some Core.to_dict()
    :return: The reconstructed core
    """
    kind = doc.get("kind")
    core_class = CORE_CLASSES.get(kind)
    if core_class is None:
        raise ParameterError(f"Unknown core kind '{kind}'")
    return core_class.from_dict(doc)
