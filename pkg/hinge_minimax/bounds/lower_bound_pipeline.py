
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
End-to-end minimax lower bounds: build the hypothesis family for each
sample size, measure its separation and divergences, and evaluate the
Fano (finite s) or Le Cam (s = inf) bound.
"""
import itertools
import logging
import math
from typing import Any
from typing import Dict
from typing import List
from typing import Sequence

import pandas as pd

from hinge_minimax.bounds.class_setting import ClassSetting
from hinge_minimax.bounds.minimax_calculators import clamped
from hinge_minimax.bounds.minimax_calculators import fano_lower_bound
from hinge_minimax.bounds.minimax_calculators import lecam_lower_bound
from hinge_minimax.bounds.separation import excess_sum_separation
from hinge_minimax.dist.divergence import kl_divergence
from hinge_minimax.dist.lower_bound_family import build_lower_bound_family
from hinge_minimax.dist.lower_bound_family import lower_bound_grid_size
from hinge_minimax.dist.product_affinity import product_affinity
from hinge_minimax.dist.quadrature import DEFAULT_RESOLUTION
from hinge_minimax.dist.two_point_family import build_twopoint_family
from hinge_minimax.errors.parameter_error import ParameterError

FANO_COLUMNS = ["n", "grid_size", "formula_grid_size", "members", "epsilon", "separation", "kl",
                "fano_raw", "fano", "shape", "constant"]
LECAM_COLUMNS = ["n", "separation", "separation_floor", "affinity", "exact_affinity", "lecam", "reference"]
DEFAULT_MAX_MEMBERS = 8

LOGGER = logging.getLogger(__name__)


def feasible_grid_size(density_bound: float) -> int:
    """
    :return: The smallest Q with 1/Q < (Lambda-1) / (9 Lambda)
    """
    return math.floor(9.0 * density_bound / (density_bound - 1.0)) + 1


def fano_row(n: int, setting: ClassSetting, seed: int = 0, max_members: int = DEFAULT_MAX_MEMBERS,
             resolution: int = DEFAULT_RESOLUTION) -> Dict[str, Any]:
    """
    :param n: Sample size
    :param setting: The class, with finite s
    :param seed: Seed of the code behind the family
    :param max_members: Hypotheses kept, >= 3
    :param resolution: Quadrature cells per unit length
    :return: One row of the Fano pipeline; v is the smallest pairwise
            separation and u the largest divergence from the first member
    """
    if max_members < 3:
        raise ParameterError(f"Fano needs at least three hypotheses, got {max_members}")
    formula = lower_bound_grid_size(n, setting.beta, setting.q, setting.d_lower, setting.s)
    grid_size = max(formula, feasible_grid_size(setting.density_bound))
    family = build_lower_bound_family(grid_size, setting.s, setting.alpha, setting.density_bound,
                                      setting.beta, setting.q, setting.K, setting.d, setting.d_lower,
                                      seed=seed, max_members=max_members)
    etas = family.etas
    marginal = family.marginal
    separation = min(excess_sum_separation(etas[first], etas[second], marginal, resolution)
                     for first, second in itertools.combinations(range(len(etas)), 2))
    divergence = max(kl_divergence(eta, etas[0], marginal, resolution) for eta in etas[1:])
    raw = fano_lower_bound(separation, divergence, len(etas) - 1, n)
    shape = family.epsilon ** (setting.s + 1.0)
    return {"n": n, "grid_size": grid_size, "formula_grid_size": formula, "members": len(etas),
            "epsilon": family.epsilon, "separation": separation, "kl": divergence,
            "fano_raw": raw, "fano": clamped(raw), "shape": shape, "constant": clamped(raw) / shape}


def lecam_row(n: int, setting: ClassSetting, resolution: int = DEFAULT_RESOLUTION) -> Dict[str, Any]:
    """
    :param n: Sample size, at least 1/(Lambda-1)
    :param setting: The class; s is not used
    :param resolution: Quadrature cells per unit length
    :return: One row of the Le Cam pipeline, with the reference 1/(32n)
    """
    family = build_twopoint_family(setting.density_bound, n, setting.beta, setting.q, setting.K,
                                   setting.d, setting.d_lower)
    marginal = family.p0.marginal
    separation = excess_sum_separation(family.p0.eta, family.p1.eta, marginal, resolution)
    affinity = product_affinity(family.p1.eta, family.p0.eta, family.p2.eta, marginal, n, resolution)
    affinity = min(1.0, max(0.0, affinity))
    return {"n": n, "separation": separation, "separation_floor": family.excess_sum_floor(),
            "affinity": affinity, "exact_affinity": family.exact_affinity(),
            "lecam": lecam_lower_bound(separation, affinity), "reference": 1.0 / (32.0 * n)}


def _frame(rows: List[Dict[str, Any]], columns: List[str], path: str = None) -> pd.DataFrame:
    frame = pd.DataFrame(rows, columns=columns)
    if path is not None:
        frame.to_csv(path, index=False)
        LOGGER.info("Wrote %d lower-bound rows to %s", len(frame), path)
    return frame


# pylint: disable=too-many-arguments,too-many-positional-arguments
def lower_bound_pipeline(n_grid: Sequence[int], setting: ClassSetting, seed: int = 0,
                         max_members: int = DEFAULT_MAX_MEMBERS, resolution: int = DEFAULT_RESOLUTION,
                         path: str = None) -> pd.DataFrame:
    """
    Sweeps the sample sizes with the Fano construction when s is finite
    and the two-point construction when s is infinite.

    :param n_grid: Sample sizes
    :param setting: The class
    :param seed: Seed of the codes
    :param max_members: Hypotheses kept per Fano family
    :param resolution: Quadrature cells per unit length
    :param path: Optional CSV destination
    :return: One row per sample size
    """
    if math.isinf(setting.s):
        rows = [lecam_row(int(n), setting, resolution) for n in n_grid]
        return _frame(rows, LECAM_COLUMNS, path)
    rows = []
    for n in n_grid:
        row = fano_row(int(n), setting, seed, max_members, resolution)
        LOGGER.debug("n=%s: Q=%s, eps=%.4g, v=%.4g, u=%.4g, fano=%.4g", n, row["grid_size"],
                     row["epsilon"], row["separation"], row["kl"], row["fano_raw"])
        rows.append(row)
    return _frame(rows, FANO_COLUMNS, path)
