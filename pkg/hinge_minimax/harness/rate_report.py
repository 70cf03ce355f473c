
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
Per-row results of a rate experiment and their aggregate: medians per
sample size, the fitted log-log slope and the comparison with theory.
"""
import logging
import math
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np
import pandas as pd

from hinge_minimax.errors.fit_error import FitError
from hinge_minimax.harness.rate_fitter import MIN_FIT_POINTS
from hinge_minimax.harness.rate_fitter import RateFit
from hinge_minimax.harness.rate_fitter import fit_rate

OK = "ok"
CAPACITY = "capacity"
RESOLUTION_CAP = "resolution_cap"
STATUSES = (OK, CAPACITY, RESOLUTION_CAP)

CSV_COLUMNS = ["n", "seed", "estimator", "excess01", "excess_hinge", "wallclock_ms", "status"]

LOGGER = logging.getLogger(__name__)


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True)
class RateRow:
    """
    One (n, seed) execution: the excess risks of the estimate, or the
    reason it has none.
    """

    n: int
    seed_index: int
    seed: int
    estimator: str
    excess01: float
    excess_hinge: float
    wallclock_ms: float
    status: str = OK

    def to_csv_dict(self) -> Dict[str, Any]:
        """
        :return: The row in CSV column order
        """
        return {"n": self.n, "seed": self.seed, "estimator": self.estimator, "excess01": self.excess01,
                "excess_hinge": self.excess_hinge, "wallclock_ms": self.wallclock_ms, "status": self.status}


def rows_frame(rows: Sequence[RateRow]) -> pd.DataFrame:
    """
    :return: The rows as a frame with exactly the CSV columns
    """
    return pd.DataFrame([row.to_csv_dict() for row in rows], columns=CSV_COLUMNS)


def rows_from_frame(frame: pd.DataFrame) -> List[RateRow]:
    """
    :param frame: A frame with the CSV columns, as written by rows_frame()
    :return: The rows; seed indices count the rows of each n in file order
    """
    missing = set(CSV_COLUMNS) - set(frame.columns)
    if missing:
        raise FitError(f"Result table lacks columns {sorted(missing)}")
    counters: Dict[int, int] = {}
    rows = []
    for record in frame.to_dict(orient="records"):
        n = int(record["n"])
        seed_index = counters.get(n, 0)
        counters[n] = seed_index + 1
        rows.append(RateRow(n, seed_index, int(record["seed"]), str(record["estimator"]),
                            float(record["excess01"]), float(record["excess_hinge"]),
                            float(record["wallclock_ms"]), str(record["status"])))
    return rows


def per_n_summary(rows: Sequence[RateRow]) -> pd.DataFrame:
    """
    :return: One line per n with row counts and the mean and median
            excess 0-1 risk over the rows that finished
    """
    frame = rows_frame(rows)
    finished = frame[frame["status"] == OK]
    summary = pd.DataFrame({"n": sorted(frame["n"].unique())})
    summary["rows"] = summary["n"].map(frame.groupby("n").size()).fillna(0).astype(int)
    summary["ok"] = summary["n"].map(finished.groupby("n").size()).fillna(0).astype(int)
    summary["mean"] = summary["n"].map(finished.groupby("n")["excess01"].mean())
    summary["median"] = summary["n"].map(finished.groupby("n")["excess01"].median())
    summary["mean_hinge"] = summary["n"].map(finished.groupby("n")["excess_hinge"].mean())
    return summary


def fit_points(summary: pd.DataFrame) -> List[Tuple[float, float]]:
    """
    :return: (n, median) pairs usable in a log-log fit; sizes whose median
            is missing or not positive are left out with a warning
    """
    points = []
    for n, median in zip(summary["n"], summary["median"]):
        if not math.isfinite(median) or median <= 0.0:
            LOGGER.warning("Leaving n=%d out of the rate fit: median excess risk %s", n, median)
            continue
        points.append((float(n), float(median)))
    return points


# pylint: disable=too-many-instance-attributes
@dataclass
class RateReport:
    """
    The rows of a rate experiment, the slope fitted to their medians and
    the theoretical exponent it is compared with.  The run passes when
    the fitted slope is within max(slope_tolerance, CI half width) of
    minus the theoretical exponent.
    """

    experiment_id: str
    estimator: str
    rows: List[RateRow]
    theoretical_exponent: float
    slope_tolerance: float = 0.12
    fit: Optional[RateFit] = None
    fit_error: Optional[str] = None
    slope_without_largest_n: Optional[float] = None
    run_info: Dict[str, Any] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    @classmethod
    def from_rows(cls, experiment_id: str, estimator: str, rows: Sequence[RateRow],
                  theoretical_exponent: float, slope_tolerance: float = 0.12) -> "RateReport":
        """
        Sorts the rows by (n, seed_index) and fits the medians.

        :return: The report; when the medians cannot be fitted, fit is None
                and fit_error says why
        """
        rows = sorted(rows, key=lambda row: (row.n, row.seed_index))
        report = cls(experiment_id, estimator, rows, float(theoretical_exponent), float(slope_tolerance))
        points = fit_points(per_n_summary(rows))
        try:
            report.fit = fit_rate(points)
        except FitError as exception:
            report.fit_error = str(exception)
            LOGGER.warning("No rate fit for %s: %s", experiment_id, exception)
            return report
        if len(points) > MIN_FIT_POINTS:
            report.slope_without_largest_n = fit_rate(points[:-1]).slope
        return report

    @property
    def theoretical_slope(self) -> float:
        """
        :return: Minus the theoretical exponent
        """
        return -self.theoretical_exponent

    @property
    def passed(self) -> bool:
        """
        :return: True when a fit exists and its slope matches theory within tolerance
        """
        if self.fit is None:
            return False
        allowed = max(self.slope_tolerance, self.fit.ci_halfwidth)
        return abs(self.fit.slope - self.theoretical_slope) <= allowed

    def status_counts(self) -> Dict[str, int]:
        """
        :return: Number of rows per status
        """
        counts = {status: 0 for status in STATUSES}
        for row in self.rows:
            counts[row.status] = counts.get(row.status, 0) + 1
        return counts

    def frame(self) -> pd.DataFrame:
        """
        :return: The rows in CSV form
        """
        return rows_frame(self.rows)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: The JSON summary: fit, theory, per-n aggregates and run information
        """
        summary = per_n_summary(self.rows)
        per_n = []
        for record in summary.to_dict(orient="records"):
            per_n.append({key: (None if isinstance(value, float) and not math.isfinite(value)
                                else value.item() if isinstance(value, np.generic) else value)
                          for key, value in record.items()})
        return {
            "experiment_id": self.experiment_id,
            "estimator": self.estimator,
            "theoretical_exponent": self.theoretical_exponent,
            "theoretical_slope": self.theoretical_slope,
            "slope_tolerance": self.slope_tolerance,
            "fit": None if self.fit is None else self.fit.to_dict(),
            "fit_error": self.fit_error,
            "slope_without_largest_n": self.slope_without_largest_n,
            "passed": self.passed,
            "status_counts": self.status_counts(),
            "per_n": per_n,
            "run_info": self.run_info,
            "config": self.config
        }
