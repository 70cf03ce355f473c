
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

from typing import Sequence

from hinge_minimax.errors.hinge_minimax_error import HingeMinimaxError


class RangeViolationError(HingeMinimaxError):
    """
    Raised when an intermediate layer of a compositional function
    produces a value outside of [0,1].
    """

    def __init__(self, layer: int, point: Sequence[float], values: Sequence[float]):
        """
        Constructor.

        :param layer: Index of the offending layer
        :param point: The input point at which the violation occurred
        :param values: The offending layer output
        """
        self.layer = layer
        self.point = list(point)
        self.values = list(values)
        super().__init__(f"Layer {layer} output {self.values} leaves [0,1] at x={self.point}")
