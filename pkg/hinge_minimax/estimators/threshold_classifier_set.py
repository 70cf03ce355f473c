
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

import numpy as np

from hinge_minimax.dist.dataset import Dataset
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.axis_threshold import AxisThreshold
from hinge_minimax.estimators.finite_classifier_set import losses_from_mistakes
from hinge_minimax.risk.loss_kind import LossKind


class ThresholdClassifierSet():
    """
    Axis-aligned threshold classifiers on one coordinate.  Members
    0..T are x -> +1 if x_axis >= j/T else -1, members T+1..2T+1 the
    same thresholds with the opposite orientation.  Mistake counts for
    all members come from one sort of the sample.
    """

    def __init__(self, axis: int, grid_size: int):
        """
        :param axis: 0-based coordinate the thresholds read
        :param grid_size: T, the number of threshold intervals
        """
        if axis < 0 or grid_size < 1:
            raise ParameterError(f"Need axis >= 0 and grid size >= 1, got {axis}, {grid_size}")
        self.axis = int(axis)
        self.grid_size = int(grid_size)
        self.thresholds = np.linspace(0.0, 1.0, self.grid_size + 1)

    def __len__(self) -> int:
        return 2 * (self.grid_size + 1)

    def __getitem__(self, index: int) -> AxisThreshold:
        if not 0 <= index < len(self):
            raise IndexError(index)
        threshold = self.thresholds[index % (self.grid_size + 1)]
        orientation = 1.0 if index <= self.grid_size else -1.0
        return AxisThreshold(self.axis, threshold, orientation)

    def mistakes(self, data: Dataset) -> np.ndarray:
        """
        :param data: The sample
        :return: Mistake counts of every member, in member order
        """
        order = np.argsort(data.x[:, self.axis], kind="stable")
        coordinates = data.x[order, self.axis]
        positives = np.concatenate([[0], np.cumsum(data.y[order] > 0.0)])
        below = np.searchsorted(coordinates, self.thresholds, side="left")
        positives_below = positives[below]
        total_positives = positives[-1]
        negatives_above = (len(data) - below) - (total_positives - positives_below)
        upward = positives_below + negatives_above
        return np.concatenate([upward, len(data) - upward]).astype(np.int64)

    def empirical_losses(self, data: Dataset, loss: LossKind) -> np.ndarray:
        """
        :param data: The sample
        :param loss: Which loss
        :return: Empirical loss of every member
        """
        if len(data) == 0:
            raise ParameterError("Empirical losses need at least one sample")
        return losses_from_mistakes(loss, self.mistakes(data), len(data))
