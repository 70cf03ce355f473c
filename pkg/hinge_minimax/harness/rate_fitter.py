
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

"""
Log-log least squares for empirical convergence rates.
"""
import math
from dataclasses import asdict
from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Sequence
from typing import Tuple

import numpy as np
from scipy import stats

from hinge_minimax.errors.fit_error import FitError

MIN_FIT_POINTS = 4
CONFIDENCE = 0.95


@dataclass(frozen=True)
class RateFit:
    """
    log value = intercept + slope * log n, with the half width of a
    two-sided confidence interval on the slope.
    """

    slope: float
    intercept: float
    ci_halfwidth: float
    r_squared: float
    points: int

    def contains(self, slope: float) -> bool:
        """
        :return: True when the slope lies inside the confidence interval
        """
        return abs(slope - self.slope) <= self.ci_halfwidth

    def predict(self, n) -> np.ndarray:
        """
        :return: The fitted power law at the given sample sizes
        """
        return np.exp(self.intercept) * np.power(np.asarray(n, dtype=float), self.slope)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return asdict(self)


def fit_rate(points: Sequence[Tuple[float, float]], confidence: float = CONFIDENCE) -> RateFit:
    """
    Ordinary least squares on (log n, log value).

    :param points: (n, value) pairs with positive values and at least two distinct n
    :param confidence: Coverage of the slope interval
    :return: The fit; the interval uses the t distribution with len(points) - 2 degrees of freedom
    """
    if len(points) < MIN_FIT_POINTS:
        raise FitError(f"A rate fit needs at least {MIN_FIT_POINTS} points, got {len(points)}")
    sizes = np.array([point[0] for point in points], dtype=float)
    values = np.array([point[1] for point in points], dtype=float)
    if np.any(sizes <= 0.0) or not np.all(np.isfinite(values)) or np.any(values <= 0.0):
        raise FitError(f"A rate fit needs positive sizes and values, got {list(zip(sizes, values))}")
    if np.unique(sizes).shape[0] < 2:
        raise FitError("A rate fit needs at least two distinct sample sizes")

    result = stats.linregress(np.log(sizes), np.log(values))
    quantile = stats.t.ppf(0.5 + confidence / 2.0, len(points) - 2)
    r_squared = float(result.rvalue ** 2) if math.isfinite(result.rvalue) else 1.0
    return RateFit(float(result.slope), float(result.intercept), float(quantile * result.stderr),
                   r_squared, len(points))
