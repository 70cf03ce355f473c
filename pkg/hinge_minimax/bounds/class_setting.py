
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

from leaf_common.parsers.dictionary_extractor import DictionaryExtractor

from hinge_minimax.errors.parameter_error import ParameterError


@dataclass(frozen=True)
class ClassSetting:
    """
    The class parameters a lower-bound construction is built for:
    smoothness beta, depth q, width K, input dimension d, core
    variables d*, noise exponent s with constant alpha, and the marginal
    density bound Lambda.
    """

    # pylint: disable=invalid-name
    beta: float
    q: int
    K: int
    d: int
    d_lower: int
    s: float
    alpha: float = 1.0
    density_bound: float = 2.0

    def __post_init__(self):
        if self.beta <= 0.0 or self.q < 0 or self.K < 1 or not 1 <= self.d_lower <= self.d:
            raise ParameterError(f"Invalid class setting {self}")
        if not self.s >= 0.0 or self.alpha <= 0.0 or not self.density_bound > 1.0:
            raise ParameterError(f"Invalid noise or density parameters in {self}")

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary; an infinite s becomes "inf"
        """
        doc = asdict(self)
        doc["s"] = "inf" if self.s == float("inf") else self.s
        return doc

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "ClassSetting":
        """
        :param doc: A "class" section of a config
        :return: A new ClassSetting
        """
        extractor = DictionaryExtractor(doc)
        return cls(beta=float(extractor.get("beta", 1.0)), q=int(extractor.get("q", 0)),
                   K=int(extractor.get("K", 1)), d=int(extractor.get("d", 1)),
                   d_lower=int(extractor.get("d_lower", 1)), s=float(extractor.get("s", 0.0)),
                   alpha=float(extractor.get("alpha", 1.0)),
                   density_bound=float(extractor.get("density_bound", 2.0)))
