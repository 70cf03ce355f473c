
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

from hinge_minimax.funcspace.core import Core


class RampCore(Core):
    """
    Clamped linear ramp in the first variable: low_value for
    z_1 <= lower, high_value for z_1 >= upper, linear in between.
    """

    kind = "ramp"
    first_variable_only = True

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def __init__(self, lower: float, upper: float, low_value: float = 0.0,
                 high_value: float = 1.0, dim: int = 1):
        super().__init__(dim)
        if not upper > lower:
            raise ValueError(f"Ramp needs upper > lower, got [{lower}, {upper}]")
        self.lower = float(lower)
        self.upper = float(upper)
        self.low_value = float(low_value)
        self.high_value = float(high_value)

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        fraction = np.clip((points[:, 0] - self.lower) / (self.upper - self.lower), 0.0, 1.0)
        return self.low_value + (self.high_value - self.low_value) * fraction

    def slope(self) -> float:
        """
        :return: Slope of the linear piece
        """
        return (self.high_value - self.low_value) / (self.upper - self.lower)

    def to_dict(self):
        return {"kind": self.kind, "dim": self.dim, "lower": self.lower, "upper": self.upper,
                "low_value": self.low_value, "high_value": self.high_value}

    @classmethod
    def from_dict(cls, doc):
        """
        :param doc: Dictionary made by to_dict()
        :return: A new RampCore
        """
        return cls(doc["lower"], doc["upper"], doc.get("low_value", 0.0),
                   doc.get("high_value", 1.0), doc.get("dim", 1))

    def breakpoints(self):
        return {0: [self.lower, self.upper]}
