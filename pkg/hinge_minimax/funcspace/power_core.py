
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


class PowerCore(Core):
    """
    The core z -> offset + scale * |z_1|^exponent.

    Squares, the inner |z|^min(1, beta) layers of the lower-bound
    construction and their shifted final layer are all of this form.
    """

    kind = "power"
    first_variable_only = True

    def __init__(self, exponent: float, scale: float = 1.0, offset: float = 0.0, dim: int = 1):
        super().__init__(dim)
        self.exponent = float(exponent)
        self.scale = float(scale)
        self.offset = float(offset)

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        return self.offset + self.scale * np.power(np.abs(points[:, 0]), self.exponent)

    def to_dict(self):
        return {"kind": self.kind, "dim": self.dim, "exponent": self.exponent,
                "scale": self.scale, "offset": self.offset}

    @classmethod
    def from_dict(cls, doc):
        """
        :param doc: Dictionary made by to_dict()
        :return: A new PowerCore
        """
        return cls(doc["exponent"], doc.get("scale", 1.0), doc.get("offset", 0.0), doc.get("dim", 1))
