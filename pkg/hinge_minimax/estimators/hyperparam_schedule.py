
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
Sizes and radii the estimators use as functions of the sample size.
"""
import math

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.relunet.network_budget import NetworkBudget


def smoothness_product(beta: float, q: int) -> float:
    """
    :return: beta * min(1, beta)^q, the effective smoothness of a q+1 layer composition
    """
    return beta * min(1.0, beta) ** q


def width_exponent(beta: float, q: int, d_lower: int, s: float) -> float:
    """
    :return: d* / (d* + (s+2) beta min(1,beta)^q); 0 when s is infinite
    """
    if math.isinf(s):
        return 0.0
    return d_lower / (d_lower + (s + 2.0) * smoothness_product(beta, q))


# pylint: disable=too-many-arguments,too-many-positional-arguments
def hyperparam_schedule(n: int, beta: float, q: int, d_lower: int, s: float,
                        a: float = 1.0, b: float = 2.0) -> NetworkBudget:
    """
    Network sizes growing with n: G ~ log n, N ~ X and S ~ X log n with
    X = (n / log^3 n)^width_exponent.  For s = inf the sizes do not depend on n.

    :param n: Sample size, at least 3
    :param beta: Smoothness order
    :param q: Number of layers minus one
    :param d_lower: Variables per Hoelder core
    :param s: Noise exponent, possibly inf
    :param a: Multiplier of all three sizes
    :param b: Extra multiplier of the nonzero count S when s is inf
    :return: A NetworkBudget with B = 1 and F = inf
    """
    if n < 3:
        raise ParameterError(f"The schedule needs n >= 3, got {n}")
    if a <= 0.0 or b <= 0.0:
        raise ParameterError(f"Schedule multipliers must be positive, got a={a}, b={b}")
    if math.isinf(s):
        return NetworkBudget(G=math.ceil(a), N=math.ceil(a), S=math.ceil(a * b), B=1.0)

    log_n = math.log(n)
    scale = (n / log_n ** 3) ** width_exponent(beta, q, d_lower, s)
    return NetworkBudget(G=math.ceil(a * log_n), N=math.ceil(a * scale), S=math.ceil(a * log_n * scale), B=1.0)


# pylint: disable=too-many-arguments,too-many-positional-arguments
def covering_radius(n: int, beta: float, q: int, d_lower: int, s: float, tau: float) -> float:
    """
    :return: xi = (min(tau, 1) / 3) * n^(-1 / (s + 2 + d* / (beta min(1,beta)^q)));
            the constant min(tau, 1) / 3 when s is infinite
    """
    if n < 1 or tau <= 0.0:
        raise ParameterError(f"Need n >= 1 and tau > 0, got n={n}, tau={tau}")
    constant = min(tau, 1.0) / 3.0
    if math.isinf(s):
        return constant
    return constant * n ** (-1.0 / (s + 2.0 + d_lower / smoothness_product(beta, q)))
