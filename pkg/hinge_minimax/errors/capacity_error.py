
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


class CapacityError(HingeMinimaxError):
    """
    Raised when an enumeration would exceed its configured cap.
    """

    def __init__(self, required_size: int, cap: int, what: str = "members"):
        """
        Constructor.

        :param required_size: Number of items the enumeration needs.
                For enumerations that are not counted in closed form this
                is a lower bound.
        :param cap: The configured cap
        :param what: Description of what is being enumerated
        """
        self.required_size = required_size
        self.cap = cap
        super().__init__(f"Need {required_size} {what}, cap is {cap}")
