
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

from typing import List
from typing import Tuple

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.core import Core


class LinearCombinationCore(Core):
    """
    The core z -> offset + sum_i weight_i * core_i(z).
    All terms share the same input dimension.
    """

    kind = "linear_combination"

    def __init__(self, terms: List[Tuple[float, Core]], offset: float = 0.0):
        """
        :param terms: List of (weight, core) pairs
        :param offset: Constant added to the sum
        """
        if not terms:
            raise ParameterError("Linear combination needs at least one term")
        dims = {core.dim for _, core in terms}
        if len(dims) != 1:
            raise ParameterError(f"Terms disagree on input dimension: {sorted(dims)}")
        super().__init__(dims.pop())
        self.terms = [(float(weight), core) for weight, core in terms]
        self.offset = float(offset)

    def __call__(self, points):
        points = self.as_points(points, self.dim)
        total = np.full(points.shape[0], self.offset)
        for weight, core in self.terms:
            total += weight * core(points)
        return total

    def to_dict(self):
        return {"kind": self.kind, "offset": self.offset,
                "terms": [{"weight": weight, "core": core.to_dict()} for weight, core in self.terms]}

    @classmethod
    def from_dict(cls, doc):
        """
        :param doc: Dictionary made by to_dict()
        :return: A new LinearCombinationCore
        """
        # Avoid the circular import with the registry
        # pylint: disable=import-outside-toplevel
        from hinge_minimax.funcspace.core_registry import core_from_dict
        terms = [(term["weight"], core_from_dict(term["core"])) for term in doc["terms"]]
        return cls(terms, doc.get("offset", 0.0))

    def breakpoints(self):
        merged = {}
        for _, core in self.terms:
            for axis, values in core.breakpoints().items():
                merged.setdefault(axis, set()).update(values)
        return {axis: sorted(values) for axis, values in merged.items()}
