
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

from hinge_minimax.errors.hinge_minimax_error import HingeMinimaxError


class ResolutionCapError(HingeMinimaxError):
    """
    Raised when an approximation cannot meet its sup-error target
    within the configured resolution cap.
    """

    def __init__(self, achieved_error: float, target_error: float, resolution: int):
        """
        Constructor.

        :param achieved_error: Best sup error reached
        :param target_error: The sup error that was asked for
        :param resolution: The last resolution tried
        """
        self.achieved_error = achieved_error
        self.target_error = target_error
        self.resolution = resolution
        super().__init__(f"Achieved sup error {achieved_error:.3e} > target {target_error:.3e}"
                         f" at resolution {resolution}")
