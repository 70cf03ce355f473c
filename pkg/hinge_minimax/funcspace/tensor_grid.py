
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

DEFAULT_POINT_CAP = 1_000_000


def tensor_grid(dim: int, resolution: int, cap: int = DEFAULT_POINT_CAP) -> np.ndarray:
    """
    Regular grid {0, 1/(res-1), ..., 1}^dim.  The resolution is lowered
    until the grid fits under the cap.  When even two points per axis do
    not fit, a seeded uniform sample of `cap` points is returned instead.

    :param dim: Dimension
    :param resolution: Points per axis, at least 2
    :param cap: Maximum number of points
    :return: An (m, dim) array
    """
    resolution = max(2, int(resolution))
    while resolution > 2 and resolution ** dim > cap:
        resolution -= 1
    if resolution ** dim > cap:
        return np.random.default_rng(0).random((cap, dim))
    axis = np.linspace(0.0, 1.0, resolution)
    mesh = np.meshgrid(*([axis] * dim), indexing="ij")
    return np.stack([coordinates.ravel() for coordinates in mesh], axis=1)
