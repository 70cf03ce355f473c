
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
from concurrent.futures import ThreadPoolExecutor
from typing import Callable
from typing import List
from typing import Sequence

import numpy as np

from hinge_minimax.dist.dataset import Dataset
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.covering_net import CoveringNet
from hinge_minimax.estimators.sign_classifier import SignClassifier
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.losses import loss_value

DEFAULT_CHUNK = 256

LOGGER = logging.getLogger(__name__)


def losses_from_mistakes(loss: LossKind, mistakes: np.ndarray, count: int) -> np.ndarray:
    """
    The empirical loss of a {-1,+1}-valued classifier only depends on how
    many samples it gets wrong, and grows with that number.

    :param loss: Which loss
    :param mistakes: Integer mistake counts
    :param count: Number of samples
    :return: Empirical losses
    """
    mistakes = np.asarray(mistakes, dtype=np.int64)
    right = loss_value(loss, 1.0)
    wrong = loss_value(loss, -1.0)
    return ((count - mistakes) * right + mistakes * wrong) / count


class FiniteClassifierSet():
    """
    A finite list of {-1,+1}-valued classifiers.  Mistake counts are
    evaluated in chunks of members on a thread pool; the data set is
    shared read-only.
    """

    def __init__(self, members: Sequence[Callable], max_workers: int = 4, chunk: int = DEFAULT_CHUNK):
        """
        :param members: Vectorized classifiers with values in {-1,+1}
        :param max_workers: Threads used to evaluate members
        :param chunk: Members per task
        """
        if len(members) == 0:
            raise ParameterError("A classifier set needs at least one member")
        self.members: List[Callable] = list(members)
        self.max_workers = max(1, int(max_workers))
        self.chunk = max(1, int(chunk))

    @classmethod
    def from_covering_net(cls, net: CoveringNet, max_workers: int = 4) -> "FiniteClassifierSet":
        """
        :return: The sign classifiers sgn(2f - 1) of the members, in order
        """
        return cls([SignClassifier(member, index) for index, member in enumerate(net.members)], max_workers)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, index: int) -> Callable:
        return self.members[index]

    def _chunk_mistakes(self, start: int, data: Dataset) -> np.ndarray:
        stop = min(start + self.chunk, len(self.members))
        return np.array([int(np.sum(self.members[index](data.x) != data.y)) for index in range(start, stop)],
                        dtype=np.int64)

    def mistakes(self, data: Dataset) -> np.ndarray:
        """
        :param data: The sample
        :return: Number of misclassified samples of every member, in member order
        """
        starts = range(0, len(self.members), self.chunk)
        if self.max_workers == 1 or len(starts) == 1:
            parts = [self._chunk_mistakes(start, data) for start in starts]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                parts = list(executor.map(lambda start: self._chunk_mistakes(start, data), starts))
        return np.concatenate(parts)

    def empirical_losses(self, data: Dataset, loss: LossKind) -> np.ndarray:
        """
        :param data: The sample
        :param loss: Which loss
        :return: Empirical loss of every member
        """
        if len(data) == 0:
            raise ParameterError("Empirical losses need at least one sample")
        return losses_from_mistakes(loss, self.mistakes(data), len(data))
