
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

from hinge_minimax.funcspace.bump import bump_grid_sum
from hinge_minimax.funcspace.bump import check_code
from hinge_minimax.funcspace.bump_spec import BumpSpec
from hinge_minimax.funcspace.core import Core


class BumpSumCore(Core):
    """
    A core evaluating a coded, disjointly supported sum of bump translates.
    """

    kind = "bump_sum"

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def __init__(self, grid_size: int, code, amplitude: float, beta: float, spec: BumpSpec):
        super().__init__(spec.dim)
        self.grid_size = int(grid_size)
        self.code = check_code(self.grid_size, code, spec.dim)
        self.code.setflags(write=False)
        self.amplitude = float(amplitude)
        self.beta = float(beta)
        self.spec = spec

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        return bump_grid_sum(self.grid_size, self.code, self.amplitude, self.beta, self.spec, points)

    def peak(self) -> float:
        """
        :return: The sup norm, amplitude / Q^beta, when any code bit is set
        """
        if not np.any(self.code):
            return 0.0
        return self.amplitude / self.grid_size ** self.beta

    def to_dict(self):
        return {"kind": self.kind, "grid_size": self.grid_size, "code": self.code.ravel().tolist(),
                "amplitude": self.amplitude, "beta": self.beta, "spec": self.spec.to_dict()}

    @classmethod
    def from_dict(cls, doc):
        """
        :param doc: Dictionary made by to_dict()
        :return: A new BumpSumCore
        """
        spec = BumpSpec.from_dict(doc["spec"])
        code = np.asarray(doc["code"], dtype=np.int8).reshape((doc["grid_size"],) * spec.dim)
        return cls(doc["grid_size"], code, doc["amplitude"], doc["beta"], spec)

    def breakpoints(self):
        centers = (2.0 * np.arange(self.grid_size) + 1.0) / (2.0 * self.grid_size)
        offsets = np.array([-self.spec.outer_radius, -self.spec.inner_radius,
                            self.spec.inner_radius, self.spec.outer_radius]) / self.grid_size
        edges = np.arange(self.grid_size + 1) / float(self.grid_size)
        values = np.union1d(edges, (centers[:, None] + offsets[None, :]).ravel())
        return {axis: values.tolist() for axis in range(self.dim)}
