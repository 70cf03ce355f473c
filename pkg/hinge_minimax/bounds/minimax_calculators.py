
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
Closed-form lower-bound evaluators and the minimax rate exponent.
"""
import math

from hinge_minimax.errors.parameter_error import ParameterError


def fano_lower_bound(v: float, u: float, M: int, n: int) -> float:
    """
    :param v: Lower bound on the summed excess risks of any pair of hypotheses
    :param u: Upper bound on the divergence of each hypothesis from the reference one
    :param M: Number of hypotheses besides the reference one, >= 2
    :param n: Sample size
    :return: v/4 (1 - (2nu + sqrt(2nu)) / log M); may be negative
    """
    # pylint: disable=invalid-name
    if v < 0.0 or u < 0.0 or M < 2 or n < 1:
        raise ParameterError(f"Need v, u >= 0, M >= 2 and n >= 1, got {v}, {u}, {M}, {n}")
    information = 2.0 * n * u
    return v / 4.0 * (1.0 - (information + math.sqrt(information)) / math.log(M))


def clamped(value: float) -> float:
    """
    :return: max(value, 0), the form callers report as a lower bound
    """
    return max(0.0, value)


def lecam_lower_bound(v: float, affinity: float) -> float:
    """
    :param v: Lower bound on the summed excess risks of the two hypotheses
    :param affinity: 1 - TV of the n-fold laws, in [0,1]
    :return: v/4 * affinity
    """
    if v < 0.0 or not 0.0 <= affinity <= 1.0:
        raise ParameterError(f"Need v >= 0 and affinity in [0,1], got {v}, {affinity}")
    return v / 4.0 * affinity


def rate_exponent(beta: float, q: int, d_lower: int, s: float) -> float:
    """
    :param beta: Smoothness order
    :param q: Depth parameter
    :param d_lower: Number of variables d*
    :param s: Noise exponent, possibly math.inf
    :return: The exponent of n in the minimax rate,
            beta min(1,beta)^q / (d*/(s+1) + (1 + 1/(s+1)) beta min(1,beta)^q)
    """
    if beta <= 0.0 or q < 0 or d_lower < 1 or not s >= 0.0:
        raise ParameterError(f"Invalid rate parameters beta={beta}, q={q}, d*={d_lower}, s={s}")
    if math.isinf(s):
        return 1.0
    smoothness = beta * min(1.0, beta) ** q
    return smoothness / (d_lower / (s + 1.0) + (1.0 + 1.0 / (s + 1.0)) * smoothness)
