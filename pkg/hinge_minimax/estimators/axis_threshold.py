
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

import numpy as np


class AxisThreshold():
    """
    x -> orientation * (+1 if x_axis >= threshold else -1).
    Exposes its coordinate and kink so quadrature grids align to it.
    """

    def __init__(self, axis: int, threshold: float, orientation: float = 1.0):
        """
        :param axis: 0-based coordinate read
        :param threshold: Where the sign flips
        :param orientation: +1.0 or -1.0
        """
        self.axis = int(axis)
        self.threshold = float(threshold)
        self.orientation = float(orientation)

    def __call__(self, points) -> np.ndarray:
        above = np.asarray(points, dtype=float)[:, self.axis] >= self.threshold
        return self.orientation * np.where(above, 1.0, -1.0)

    def active_input_indices(self) -> List[int]:
        """
        :return: The one coordinate read
        """
        return [self.axis]

    def breakpoints(self) -> Dict[int, List[float]]:
        """
        :return: The threshold as the only kink
        """
        return {self.axis: [self.threshold]}

    def __repr__(self) -> str:
        return f"AxisThreshold(axis={self.axis}, threshold={self.threshold}, orientation={self.orientation})"
