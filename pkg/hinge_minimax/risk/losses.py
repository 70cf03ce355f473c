
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
Pointwise losses, the sign convention and the truncation operator.
"""
import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.risk.loss_kind import LossKind


def truncate(bound: float, t):
    """
    :param bound: F > 0
    :param t: Real values
    :return: t clamped to [-F, F]
    """
    if not bound > 0.0:
        raise ParameterError(f"Truncation level must be positive, got {bound}")
    value = np.clip(np.asarray(t, dtype=float), -bound, bound)
    return float(value) if value.ndim == 0 else value


def sgn(t) -> np.ndarray:
    """
    :param t: Real values
    :return: +1 where t >= 0, -1 elsewhere
    """
    return np.where(np.asarray(t, dtype=float) >= 0.0, 1.0, -1.0)


def loss_value(loss: LossKind, margin):
    """
    :param loss: Which loss
    :param margin: Values of y * f(x)
    :return: The loss; zero_one counts margin < 0 as an error and refuses
            a margin of exactly 0, whose outcome depends on the label under sgn(0) = +1
    """
    margin = np.asarray(margin, dtype=float)
    loss = LossKind(loss)
    if loss == LossKind.HINGE:
        value = np.maximum(0.0, 1.0 - margin)
    elif loss == LossKind.LOGISTIC:
        value = np.logaddexp(0.0, -margin)
    else:
        if np.any(margin == 0.0):
            raise ParameterError("zero_one needs sgn(f) and y separately at f = 0; use empirical_risk")
        value = (margin < 0.0).astype(float)
    return float(value) if value.ndim == 0 else value


def conditional_risk(loss: LossKind, predictions, eta) -> np.ndarray:
    """
    :param loss: Which loss
    :param predictions: f(x) at some points
    :param eta: eta(x) at the same points
    :return: E[loss(Y f(X)) | X = x], pointwise
    """
    predictions = np.asarray(predictions, dtype=float)
    eta = np.asarray(eta, dtype=float)
    loss = LossKind(loss)
    if loss == LossKind.ZERO_ONE:
        signs = sgn(predictions)
        return np.where(signs > 0.0, 1.0 - eta, eta)
    return eta * loss_value(loss, predictions) + (1.0 - eta) * loss_value(loss, -predictions)


def empirical_risk(loss: LossKind, predictions, labels) -> float:
    """
    :param loss: Which loss
    :param predictions: f(X_i)
    :param labels: Y_i in {-1, +1}
    :return: The sample mean of loss(Y_i f(X_i)); zero_one compares sgn(f) with Y
    """
    predictions = np.asarray(predictions, dtype=float)
    labels = np.asarray(labels, dtype=float)
    if LossKind(loss) == LossKind.ZERO_ONE:
        return float(np.mean(sgn(predictions) != labels))
    return float(np.mean(loss_value(loss, labels * predictions)))
