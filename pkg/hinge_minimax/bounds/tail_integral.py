
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

import logging
import math
from typing import Tuple

import numpy as np
from scipy.integrate import quad

from hinge_minimax.errors.hinge_minimax_error import HingeMinimaxError
from hinge_minimax.errors.parameter_error import ParameterError

LOGGER = logging.getLogger(__name__)


def tail_integral_bound(A: float, a: float, b: float) -> Tuple[float, float]:
    """
    Bounds the integral over [0, inf) of min{A exp(-a t^b), 1} by
    2 (log A / a)^(1/b).  The numeric value splits the integral where
    the exponential drops below 1.

    :param A: >= 3
    :param a: > 0
    :param b: In [1, 2]
    :return: (bound, numeric integral)
    """
    # pylint: disable=invalid-name
    if A < 3.0 or a <= 0.0 or not 1.0 <= b <= 2.0:
        raise ParameterError(f"Need A >= 3, a > 0 and 1 <= b <= 2, got {A}, {a}, {b}")
    crossing = (math.log(A) / a) ** (1.0 / b)
    tail, error = quad(lambda t: A * np.exp(-a * t ** b), crossing, np.inf)
    numeric = crossing + tail
    bound = 2.0 * crossing
    LOGGER.debug("Tail integral A=%s a=%s b=%s: %.10g (quadrature error %.1e) <= %.10g",
                 A, a, b, numeric, error, bound)
    if numeric > bound:
        raise HingeMinimaxError(f"Tail integral {numeric} exceeds its bound {bound}")
    return bound, numeric
