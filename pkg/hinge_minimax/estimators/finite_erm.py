
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

import numpy as np

from hinge_minimax.dist.dataset import Dataset
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.risk.loss_kind import LossKind

LOGGER = logging.getLogger(__name__)


def erm_finite(data: Dataset, classifiers, loss: LossKind = LossKind.HINGE) -> int:
    """
    :param data: A nonempty sample
    :param classifiers: A FiniteClassifierSet or ThresholdClassifierSet
    :param loss: Which loss
    :return: The lowest index among members of smallest empirical loss
    """
    if len(data) == 0 or len(classifiers) == 0:
        raise ParameterError("Finite ERM needs data and at least one classifier")
    losses = classifiers.empirical_losses(data, loss)
    index = int(np.argmin(losses))
    LOGGER.debug("Finite ERM over %d members picked %d with %s loss %.6g",
                 len(classifiers), index, LossKind(loss).value, losses[index])
    return index
