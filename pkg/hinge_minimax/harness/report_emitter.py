
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
Writes a RateReport as a CSV of rows, a JSON summary and a log-log plot.
"""
import logging
import os
from typing import Dict
from typing import Sequence

import matplotlib
import numpy as np
from leaf_common.persistence.easy.easy_json_persistence import EasyJsonPersistence

from hinge_minimax.errors.hinge_minimax_error import HingeMinimaxError
from hinge_minimax.harness.rate_report import OK
from hinge_minimax.harness.rate_report import RateReport
from hinge_minimax.harness.rate_report import per_n_summary

matplotlib.use("Agg")
# pylint: disable=wrong-import-position
import matplotlib.pyplot as plt  # noqa: E402

CSV = "csv"
JSON = "json"
PNG = "png"

LOGGER = logging.getLogger(__name__)


def _ensure_folder(folder: str):
    try:
        os.makedirs(folder, exist_ok=True)
    except OSError as exception:
        raise HingeMinimaxError(f"Cannot create output folder {folder}: {exception}") from exception


def write_csv(report: RateReport, path: str) -> str:
    """
    :return: The path written; one line per row in (n, seed_index) order
    """
    try:
        report.frame().to_csv(path, index=False)
    except OSError as exception:
        raise HingeMinimaxError(f"Cannot write {path}: {exception}") from exception
    return path


def write_json(report: RateReport, folder: str, base_name: str) -> str:
    """
    :return: The path of the JSON summary
    """
    persistence = EasyJsonPersistence(base_name=base_name, folder=folder)
    path = os.path.join(folder, f"{base_name}.json")
    try:
        persistence.persist(report.to_dict())
    except OSError as exception:
        raise HingeMinimaxError(f"Cannot write {path}: {exception}") from exception
    return path


def read_json(folder: str, base_name: str) -> Dict:
    """
    :return: A JSON summary written by write_json(), or None when there is none
    """
    return EasyJsonPersistence(base_name=base_name, folder=folder, must_exist=False).restore()


def write_plot(report: RateReport, path: str) -> str:
    """
    Log-log plot of the per-row excess 0-1 risks, their medians, the
    fitted line and a guide line with the theoretical slope through the
    median at the smallest n.

    :return: The path written
    """
    frame = report.frame()
    finished = frame[frame["status"] == OK]
    summary = per_n_summary(report.rows)
    summary = summary[summary["median"] > 0.0]

    figure, axes = plt.subplots(figsize=(6.4, 4.8))
    positive = finished[finished["excess01"] > 0.0]
    axes.scatter(positive["n"], positive["excess01"], s=8, alpha=0.35, color="tab:gray", label="rows")
    axes.plot(summary["n"], summary["median"], "o", color="tab:blue", label="median")
    if len(summary) > 0:
        sizes = np.asarray(summary["n"], dtype=float)
        if report.fit is not None:
            axes.plot(sizes, report.fit.predict(sizes), "-", color="tab:blue",
                      label=f"fit, slope {report.fit.slope:.3f} ± {report.fit.ci_halfwidth:.3f}")
        anchor = float(summary["median"].iloc[0])
        axes.plot(sizes, anchor * (sizes / sizes[0]) ** report.theoretical_slope, "--", color="tab:red",
                  label=f"theory, slope {report.theoretical_slope:.3f}")
    axes.set_xscale("log")
    axes.set_yscale("log")
    axes.set_xlabel("n")
    axes.set_ylabel("excess 0-1 risk")
    axes.set_title(f"{report.experiment_id} ({report.estimator})")
    axes.legend(loc="best", fontsize="small")
    try:
        figure.savefig(path, dpi=120, bbox_inches="tight")
    except OSError as exception:
        raise HingeMinimaxError(f"Cannot write {path}: {exception}") from exception
    finally:
        plt.close(figure)
    return path


def emit_report(report: RateReport, folder: str, formats: Sequence[str] = (CSV, JSON, PNG),
                base_name: str = None) -> Dict[str, str]:
    """
    :param report: A finished RateReport
    :param folder: Output folder, created when missing
    :param formats: Any of "csv", "json" and "png"
    :param base_name: File name stem; default is the experiment id
    :return: The path written for each format
    """
    base_name = base_name or report.experiment_id
    _ensure_folder(folder)
    written = {}
    if CSV in formats:
        written[CSV] = write_csv(report, os.path.join(folder, f"{base_name}.csv"))
    if JSON in formats:
        written[JSON] = write_json(report, folder, base_name)
    if PNG in formats:
        written[PNG] = write_plot(report, os.path.join(folder, f"{base_name}.png"))
    for kind, path in written.items():
        LOGGER.info("Wrote %s report to %s", kind, path)
    return written
