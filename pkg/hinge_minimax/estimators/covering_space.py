
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

from dataclasses import asdict
from dataclasses import dataclass
from typing import Any
from typing import Dict

from hinge_minimax.errors.parameter_error import ParameterError


@dataclass(frozen=True)
class CoveringSpace:
    """
    Parameters (q, K, d_star, d*, beta, r, d) of the compositional class
    a covering net is built for.
    """

    # pylint: disable=invalid-name
    q: int
    K: int
    d_star: int
    d_lower: int
    beta: float
    radius: float
    d: int

    def __post_init__(self):
        if self.q < 0 or self.K < 1 or self.d_star < 0 or self.d_lower < 1 or self.d < 1:
            raise ParameterError(f"Invalid covering space {self}")
        if self.beta <= 0.0 or self.radius <= 0.0:
            raise ParameterError(f"Need beta > 0 and r > 0, got {self.beta}, {self.radius}")
        widest = self.d if self.q == 0 else min(self.d, self.K)
        if self.d_lower > widest:
            raise ParameterError(f"Cores of {self.d_lower} variables do not fit inputs of width {widest}")

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return asdict(self)

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "CoveringSpace":
        """
        :param doc: Dictionary made by to_dict()
        :return: A new CoveringSpace
        """
        return cls(int(doc["q"]), int(doc["K"]), int(doc.get("d_star", 0)), int(doc["d_lower"]),
                   float(doc["beta"]), float(doc["radius"]), int(doc["d"]))
