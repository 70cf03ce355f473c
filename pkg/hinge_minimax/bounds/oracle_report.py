
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

from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Dict

# Standard errors of slack allowed to the Monte Carlo mean
STANDARD_ERRORS = 3.0


@dataclass
class OracleReport:
    """
    A Monte Carlo estimate of the mean excess hinge risk of the
    empirical minimizer next to the oracle bound.
    """

    n: int
    replications: int
    members: int
    lhs: float
    standard_error: float
    approx_term: float
    rhs: float
    rhs_by_eps: Dict[float, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """
        :return: True when the mean is below the bound up to three standard errors
        """
        return self.lhs <= self.rhs + STANDARD_ERRORS * self.standard_error

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return {"n": self.n, "replications": self.replications, "members": self.members,
                "lhs": self.lhs, "standard_error": self.standard_error,
                "approx_term": self.approx_term, "rhs": self.rhs,
                "rhs_by_eps": {str(eps): value for eps, value in self.rhs_by_eps.items()},
                "passed": self.passed}
