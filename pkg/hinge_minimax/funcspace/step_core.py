
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

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.core import Core


class StepCore(Core):
    """
    Piecewise-constant function of the first variable on the cells
    [edges[i], edges[i+1]).  The last cell is closed on the right.
    Not Hoelder continuous; used for piecewise-constant conditional
    probabilities in separation and divergence experiments.
    """

    kind = "step"
    first_variable_only = True

    def __init__(self, edges, values, dim: int = 1):
        """
        :param edges: Increasing cell edges from 0 to 1
        :param values: One value per cell
        :param dim: Number of variables
        """
        super().__init__(dim)
        self.edges = np.asarray(edges, dtype=float)
        self.values = np.asarray(values, dtype=float)
        if self.edges.ndim != 1 or self.values.shape != (self.edges.shape[0] - 1,) \
                or np.any(np.diff(self.edges) <= 0.0):
            raise ParameterError("Step core needs increasing edges and one value per cell")
        if self.edges[0] != 0.0 or self.edges[-1] != 1.0:
            raise ParameterError("Step core edges must run from 0 to 1")

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        cell = np.clip(np.searchsorted(self.edges, points[:, 0], side="right") - 1,
                       0, self.values.shape[0] - 1)
        return self.values[cell]

    def breakpoints(self):
        return {0: self.edges.tolist()}

    def to_dict(self):
        return {"kind": self.kind, "dim": self.dim, "edges": self.edges.tolist(),
                "values": self.values.tolist()}

    @classmethod
    def from_dict(cls, doc):
        """
        :param doc: Dictionary made by to_dict()
        :return: A new StepCore
        """
        return cls(doc["edges"], doc["values"], doc.get("dim", 1))
