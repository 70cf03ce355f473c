
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
from typing import Optional

from leaf_common.parsers.dictionary_extractor import DictionaryExtractor

from hinge_minimax.errors.parameter_error import ParameterError


@dataclass(frozen=True)
class TrainConfig:
    """
    How erm_gradient() searches a network budget.
    """

    learning_rate: float = 0.05
    steps: int = 2000
    batch_size: Optional[int] = None
    restarts: int = 3
    project: bool = True
    seed: int = 0
    max_depth: int = 3
    max_width: int = 32
    max_workers: int = 1

    def __post_init__(self):
        if self.steps < 1 or self.restarts < 1:
            raise ParameterError(f"Need steps >= 1 and restarts >= 1, got {self.steps}, {self.restarts}")
        if self.learning_rate <= 0.0 or self.max_depth < 1 or self.max_width < 1:
            raise ParameterError(f"Invalid training configuration {self}")

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return asdict(self)

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "TrainConfig":
        """
        :param doc: A "training" section of an experiment config; missing keys keep their defaults
        :return: A new TrainConfig
        """
        extractor = DictionaryExtractor(doc or {})
        defaults = cls()
        batch_size = extractor.get("batch_size", defaults.batch_size)
        return cls(learning_rate=float(extractor.get("learning_rate", defaults.learning_rate)),
                   steps=int(extractor.get("steps", defaults.steps)),
                   batch_size=None if batch_size is None else int(batch_size),
                   restarts=int(extractor.get("restarts", defaults.restarts)),
                   project=bool(extractor.get("project", defaults.project)),
                   seed=int(extractor.get("seed", defaults.seed)),
                   max_depth=int(extractor.get("max_depth", defaults.max_depth)),
                   max_width=int(extractor.get("max_width", defaults.max_width)),
                   max_workers=int(extractor.get("max_workers", defaults.max_workers)))
