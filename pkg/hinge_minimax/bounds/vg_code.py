
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

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.errors.retry_cap_error import RetryCapError

FULL_CUBE_LIMIT = 8
DEFAULT_RETRIES = 20


@dataclass
class VGCode:
    """
    A binary code of length m with at least 1 + 2^(m/8) words
    at pairwise Hamming distance at least m/8.
    """

    m: int
    words: np.ndarray

    @property
    def size(self) -> int:
        """
        :return: Number of words
        """
        return self.words.shape[0]

    def min_distance(self) -> int:
        """
        :return: Smallest pairwise Hamming distance, or m for a single word
        """
        if self.size < 2:
            return self.m
        return int(round(np.min(pdist(self.words, metric="hamming")) * self.m))

    def is_certified(self) -> bool:
        """
        :return: True when the size and distance requirements hold
        """
        return self.size >= required_size(self.m) and self.min_distance() >= self.m / 8.0


def required_size(m: int) -> int:
    """
    :param m: Code length
    :return: The smallest integer at least 1 + 2^(m/8)
    """
    return math.ceil(1.0 + 2.0 ** (m / 8.0))


def _greedy_packing(m: int, rng: np.random.Generator, target: int, min_distance: int) -> np.ndarray:
    words = [np.zeros(m, dtype=np.int8)]
    accepted = np.zeros((1, m), dtype=np.int8)
    for _ in range(200 * target):
        candidate = rng.integers(0, 2, size=m, dtype=np.int8)
        if np.min(np.count_nonzero(accepted != candidate, axis=1)) >= min_distance:
            words.append(candidate)
            accepted = np.vstack(words)
            if len(words) >= target:
                break
    return accepted


def vg_code(m: int, seed: int = 0, retries: int = DEFAULT_RETRIES) -> VGCode:
    """
    Builds a code meeting the Varshamov-Gilbert size and distance guarantees.
    Up to length 8 this is the full cube; above that a randomized greedy
    packing, re-verified before it is returned.

    :param m: Code length, > 1
    :param seed: Seed of the packing
    :param retries: Packing attempts before giving up
    :return: A certified VGCode
    """
    if m <= 1:
        raise ParameterError(f"Code length must be > 1, got {m}")

    if m <= FULL_CUBE_LIMIT:
        words = np.array(list(itertools.product((0, 1), repeat=m)), dtype=np.int8)
        return VGCode(m, words)

    target = required_size(m)
    min_distance = math.ceil(m / 8.0)
    seeds = np.random.SeedSequence(seed).spawn(retries)
    for child in seeds:
        code = VGCode(m, _greedy_packing(m, np.random.default_rng(child), target, min_distance))
        if code.is_certified():
            return code
    raise RetryCapError(f"No certified code of length {m} after {retries} attempts")
