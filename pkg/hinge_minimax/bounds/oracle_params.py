
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

import math
from dataclasses import asdict
from dataclasses import dataclass
from typing import Any
from typing import Dict

from hinge_minimax.dist.noise_profile import NoiseProfile
from hinge_minimax.errors.parameter_error import ParameterError


@dataclass(frozen=True)
class OracleParams:
    """
    The quantities the oracle inequality for empirical phi-risk
    minimizers is stated in.

    W bounds the covering number of the class at radius gamma, M bounds
    the loss, Gamma and theta give the variance bound
    E[g^2] <= Gamma * (E[g])^theta, J is the Lipschitz constant of the
    loss, H the slack in its excess, and approx_term the approximation
    error inf_f (R(f) - Psi + H).
    """

    # pylint: disable=invalid-name
    n: int
    W: float
    M: float
    Gamma: float
    theta: float
    gamma: float
    J: float
    H: float = 0.0
    eps: float = 1.0
    approx_term: float = 0.0

    def __post_init__(self):
        if self.n < 1 or self.W < 3.0:
            raise ParameterError(f"Need n >= 1 and W >= 3, got n={self.n}, W={self.W}")
        if self.M <= 0.0 or self.Gamma <= 0.0 or self.J <= 0.0:
            raise ParameterError(f"M, Gamma and J must be positive in {self}")
        if not 0.0 <= self.theta <= 1.0:
            raise ParameterError(f"theta must lie in [0,1], got {self.theta}")
        if self.gamma < 0.0 or self.eps < 0.0 or self.H < 0.0:
            raise ParameterError(f"gamma, eps and H must be nonnegative in {self}")

    def with_eps(self, eps: float) -> "OracleParams":
        """
        :return: A copy with another epsilon
        """
        values = asdict(self)
        values["eps"] = eps
        return OracleParams(**values)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-ready dictionary
        """
        return asdict(self)


def hinge_oracle_params(n: int, size: int, profile: NoiseProfile, approx_term: float = 0.0,
                        eps: float = 1.0) -> OracleParams:
    """
    Specializes the oracle inequality to the hinge loss over a finite
    class of {-1,+1}-valued classifiers, which is its own exact cover.

    :param n: Sample size
    :param size: Number of classifiers in the class
    :param profile: The noise condition of the distribution
    :param approx_term: Smallest excess hinge risk in the class
    :param eps: The epsilon of the inequality
    :return: OracleParams with W = max(3, size), M = 2, Gamma = 6 max(alpha, 1/tau),
            theta = s / (s+1), gamma = 0 and J = 1
    """
    gamma_constant = 6.0 * max(profile.alpha, 0.0 if math.isinf(profile.tau) else 1.0 / profile.tau)
    return OracleParams(n=n, W=max(3.0, float(size)), M=2.0, Gamma=gamma_constant,
                        theta=profile.exponent_ratio(), gamma=0.0, J=1.0, H=0.0, eps=eps,
                        approx_term=approx_term)
