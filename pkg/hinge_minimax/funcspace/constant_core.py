
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


class ConstantCore(Core):
    """
    The core z -> c.
    """

    kind = "constant"

    def __init__(self, value: float, dim: int = 1):
        super().__init__(dim)
        self.value = float(value)

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        return np.full(points.shape[0], self.value)

    def to_dict(self):
        return {"kind": self.kind, "dim": self.dim, "value": self.value}

    @classmethod
    def from_dict(cls, doc):
        """
        :param doc: Dictionary made by to_dict()
        :return: A new ConstantCore
        """
        return cls(doc["value"], doc.get("dim", 1))
