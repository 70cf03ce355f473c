
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


@dataclass
class RiskReport:
    """
    A risk, the Bayes risk of the same loss and their difference.
    error_estimate is 0 for quadrature and one standard error for Monte Carlo.
    """

    loss: str
    risk: float
    bayes_risk: float
    excess: float
    method: str
    error_estimate: float = 0.0
    samples: int = 0
    precision_warning: bool = False

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return asdict(self)
