
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

from typing import Callable
from typing import Optional

import numpy as np

from hinge_minimax.risk.losses import sgn


class SignClassifier():
    """
    The classifier x -> sgn(2 f(x) - 1) of a regression function f,
    with sgn(0) = +1.
    """

    def __init__(self, function: Callable, index: int = None):
        """
        :param function: Vectorized f with values in [0,1]
        :param index: Position of f in the set it was chosen from, if any
        """
        self.function = function
        self.index = index
        # Filled in by the estimators that select this classifier
        self.mistakes: Optional[int] = None
        self.empirical_risk: Optional[float] = None
        self.xi: Optional[float] = None
        self.seed: Optional[int] = None

    def __call__(self, points) -> np.ndarray:
        """
        :param points: An (m, d) array
        :return: An (m,) array of -1.0 and +1.0
        """
        return sgn(2.0 * np.asarray(self.function(points), dtype=float).reshape(-1) - 1.0)
