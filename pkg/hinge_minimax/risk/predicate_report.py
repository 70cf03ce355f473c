
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
from typing import List


@dataclass
class InequalityRow:
    """
    One checked inequality lhs <= rhs.
    """

    name: str
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        """
        :return: rhs - lhs
        """
        return self.rhs - self.lhs


@dataclass
class PredicateReport:
    """
    The outcome of checking one or more inequalities numerically.
    """

    name: str
    tolerance: float = 1e-9
    rows: List[InequalityRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """
        :return: True when every row holds within the tolerance
        """
        return all(row.slack >= -self.tolerance for row in self.rows)

    def add(self, name: str, lhs: float, rhs: float) -> InequalityRow:
        """
        :return: The appended row
        """
        row = InequalityRow(name, float(lhs), float(rhs))
        self.rows.append(row)
        return row

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return {"name": self.name, "passed": self.passed, "tolerance": self.tolerance,
                "rows": [{"name": row.name, "lhs": row.lhs, "rhs": row.rhs, "slack": row.slack}
                         for row in self.rows]}
