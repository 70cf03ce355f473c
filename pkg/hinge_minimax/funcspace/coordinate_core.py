
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

from hinge_minimax.funcspace.core import Core


class CoordinateCore(Core):
    """
    The core z -> z_index, a coordinate projection.
    """

    kind = "coordinate"

    def __init__(self, dim: int = 1, index: int = 1):
        """
        :param dim: Number of variables
        :param index: 1-based coordinate returned
        """
        super().__init__(dim)
        self.index = int(index)

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        return points[:, self.index - 1].copy()

    def to_dict(self):
        return {"kind": self.kind, "dim": self.dim, "index": self.index}

    @classmethod
    def from_dict(cls, doc):
        """
        :param doc: Dictionary made by to_dict()
        :return: A new CoordinateCore
        """
        return cls(doc.get("dim", 1), doc.get("index", 1))
