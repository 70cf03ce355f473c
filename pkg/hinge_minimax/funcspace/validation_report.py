
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
from typing import Optional


@dataclass
class CheckResult:
    """
    Outcome of one named check, with the worst point seen when it failed.
    """

    name: str
    passed: bool
    message: str = ""
    value: Optional[float] = None
    witness: Optional[List[Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return {"name": self.name, "passed": self.passed, "message": self.message,
                "value": self.value, "witness": self.witness}


@dataclass
class ValidationReport:
    """
    A list of check results.  The report passes when every check does.
    """

    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """
        :return: True when all checks passed
        """
        return all(check.passed for check in self.checks)

    def add(self, check: CheckResult):
        """
        :param check: The result to append
        """
        self.checks.append(check)

    def failures(self) -> List[CheckResult]:
        """
        :return: The failed checks
        """
        return [check for check in self.checks if not check.passed]

    def find(self, name: str) -> List[CheckResult]:
        """
        :param name: A check name, or a prefix of one
        :return: The checks whose name starts with it
        """
        return [check for check in self.checks if check.name.startswith(name)]

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return {"passed": self.passed, "checks": [check.to_dict() for check in self.checks]}
