
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

from typing import List
from typing import Tuple

import numpy as np

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.holder_grid import HolderGrid
from hinge_minimax.funcspace.grid_table_core import interpolate_segment
from hinge_minimax.funcspace.grid_table_core import locate_cells

OFFSETS = (-1, 0, 1)


class ChainCoveringNet():
    """
    The one-variable HolderGrid net seen as level sequences
    (l_0, ..., l_M) with |l_{i+1} - l_i| <= 1, ordered lexicographically.
    Counting, ranking and empirical risk minimization all run as dynamic
    programs over the chain, so the net never has to be materialized.
    """

    def __init__(self, grid: HolderGrid):
        """
        :param grid: A HolderGrid with d_lower == 1
        """
        if grid.d_lower != 1:
            raise ParameterError(f"Chain nets need one variable, got {grid.d_lower}")
        self.grid = grid
        self.cells = grid.cells
        self.levels = grid.levels
        # completions[k][l]: number of sequences of k more steps starting from level l
        self._completions: List[List[int]] = [[1] * self.levels]
        for _ in range(self.cells):
            previous = self._completions[-1]
            self._completions.append([sum(previous[level + offset] for offset in OFFSETS
                                          if 0 <= level + offset < self.levels)
                                      for level in range(self.levels)])

    def _successors(self, level: int) -> List[int]:
        return [level + offset for offset in OFFSETS if 0 <= level + offset < self.levels]

    def count(self) -> int:
        """
        :return: The exact number of members
        """
        return sum(self._completions[self.cells])

    def unrank(self, index: int) -> np.ndarray:
        """
        :param index: Position in lexicographic order
        :return: The level sequence at that position
        """
        if not 0 <= index < self.count():
            raise ParameterError(f"Member index {index} outside [0, {self.count()})")
        sequence = []
        choices = range(self.levels)
        for remaining in range(self.cells, -1, -1):
            for level in choices:
                block = self._completions[remaining][level]
                if index < block:
                    sequence.append(level)
                    break
                index -= block
            choices = self._successors(sequence[-1])
        return np.array(sequence, dtype=int)

    def rank(self, sequence) -> int:
        """
        :param sequence: A level sequence of a member
        :return: Its position in lexicographic order
        """
        sequence = [int(level) for level in sequence]
        if len(sequence) != self.cells + 1:
            raise ParameterError(f"Need {self.cells + 1} levels, got {len(sequence)}")
        index = 0
        choices = list(range(self.levels))
        for position, level in enumerate(sequence):
            if level not in choices:
                raise ParameterError(f"Level {level} cannot follow at position {position}")
            remaining = self.cells - position
            index += sum(self._completions[remaining][smaller] for smaller in choices if smaller < level)
            choices = self._successors(level)
        return index

    def pair_errors(self, coordinates: np.ndarray, labels: np.ndarray) -> np.ndarray:
        """
        :param coordinates: The coordinate each member reads, one per sample
        :param labels: Labels in {-1, +1}
        :return: Integer array errors[i, l, k]: samples in cell i misclassified by
                sgn(2f - 1) when l_i = l and l_{i+1} = l + OFFSETS[k]
        """
        cell, fraction = locate_cells(coordinates, self.cells)
        level_values = self.grid.level_values(np.arange(self.levels))
        errors = np.zeros((self.cells, self.levels, len(OFFSETS)), dtype=np.int64)
        for index in range(self.cells):
            inside = cell == index
            if not np.any(inside):
                continue
            local = fraction[inside]
            local_labels = labels[inside]
            for column, offset in enumerate(OFFSETS):
                right = np.clip(np.arange(self.levels) + offset, 0, self.levels - 1)
                values = interpolate_segment(level_values[:, None], level_values[right][:, None],
                                             local[None, :])
                predictions = np.where(2.0 * values - 1.0 >= 0.0, 1.0, -1.0)
                errors[index, :, column] = np.sum(predictions != local_labels[None, :], axis=1)
        return errors

    def erm(self, coordinates: np.ndarray, labels: np.ndarray) -> Tuple[int, np.ndarray, int]:
        """
        Viterbi pass for the member of sgn(2f - 1) with the fewest training
        mistakes; among those, the lexicographically first one.

        :param coordinates: The coordinate members read, one per sample
        :param labels: Labels in {-1, +1}
        :return: (rank, level sequence, number of mistakes)
        """
        errors = self.pair_errors(np.asarray(coordinates, dtype=float), np.asarray(labels, dtype=float))
        to_go = np.zeros((self.cells + 1, self.levels), dtype=np.int64)
        infinity = np.iinfo(np.int64).max // 4
        for index in range(self.cells - 1, -1, -1):
            best = np.full(self.levels, infinity, dtype=np.int64)
            for column, offset in enumerate(OFFSETS):
                target = np.arange(self.levels) + offset
                valid = (target >= 0) & (target < self.levels)
                total = np.full(self.levels, infinity, dtype=np.int64)
                total[valid] = errors[index, valid, column] + to_go[index + 1, target[valid]]
                best = np.minimum(best, total)
            to_go[index] = best

        sequence = [int(np.argmin(to_go[0]))]
        for index in range(self.cells):
            level = sequence[-1]
            for column, offset in enumerate(OFFSETS):
                following = level + offset
                if 0 <= following < self.levels and \
                        errors[index, level, column] + to_go[index + 1, following] == to_go[index, level]:
                    sequence.append(following)
                    break
        sequence = np.array(sequence, dtype=int)
        return self.rank(sequence), sequence, int(to_go[0, sequence[0]])
