
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
The rate experiment: for every (n, seed) sample, estimate, and measure
the excess risk of the estimate against the known eta.
"""
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List
from typing import Tuple

from hinge_minimax.bounds.minimax_calculators import rate_exponent
from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.sampler import sample
from hinge_minimax.errors.capacity_error import CapacityError
from hinge_minimax.errors.resolution_cap_error import ResolutionCapError
from hinge_minimax.harness.distribution_registry import build_distribution
from hinge_minimax.harness.estimator_registry import Estimator
from hinge_minimax.harness.estimator_registry import estimator_for
from hinge_minimax.harness.experiment_config import ExperimentConfig
from hinge_minimax.harness.experiment_lifetime import ExperimentLifetime
from hinge_minimax.harness.rate_report import CAPACITY
from hinge_minimax.harness.rate_report import OK
from hinge_minimax.harness.rate_report import RESOLUTION_CAP
from hinge_minimax.harness.rate_report import STATUSES
from hinge_minimax.harness.rate_report import RateReport
from hinge_minimax.harness.rate_report import RateRow
from hinge_minimax.harness.row_seeds import row_seed
from hinge_minimax.harness.run_info import RunInfo
from hinge_minimax.logging.experiment_logger_adapter import ExperimentLoggerAdapter
from hinge_minimax.risk.loss_kind import LossKind
from hinge_minimax.risk.risk_evaluator import excess_risk

LOGGER = logging.getLogger(__name__)


# pylint: disable=too-many-arguments,too-many-positional-arguments
def run_row(cfg: ExperimentConfig, dist: DistributionSpec, estimator: Estimator,
            n: int, seed_index: int, lifetime: ExperimentLifetime) -> RateRow:
    """
    :param cfg: The experiment config
    :param dist: The distribution sampled
    :param estimator: The estimator run on the sample
    :param n: Sample size
    :param seed_index: Replication number within n
    :param lifetime: Bookkeeping shared by the rows
    :return: The row; estimators that run out of capacity or resolution
            give a row with that status and no risks
    """
    seed = row_seed(cfg.master_seed, n, seed_index)
    row_log = lifetime.start_row(n, seed_index, seed)
    start = time.perf_counter()
    status = OK
    excess01 = math.nan
    excess_hinge = math.nan
    try:
        data = sample(dist, n, seed)
        classifier = estimator(data, cfg, seed)
        risks = [excess_risk(classifier, dist, loss, cfg.risk_method, cfg.risk_resolution,
                             cfg.risk_samples, seed).excess
                 for loss in (LossKind.ZERO_ONE, LossKind.HINGE)]
        excess01, excess_hinge = risks
    except CapacityError as exception:
        status = CAPACITY
        row_log.warning("Row excluded from the fit: %s", exception)
    except ResolutionCapError as exception:
        status = RESOLUTION_CAP
        row_log.warning("Row excluded from the fit: %s", exception)

    wallclock_ms = 1000.0 * (time.perf_counter() - start) if cfg.record_wallclock else 0.0
    lifetime.finish_row(row_log, status)
    return RateRow(n, seed_index, seed, cfg.estimator, excess01, excess_hinge, round(wallclock_ms, 3), status)


def run_rate_experiment(cfg: ExperimentConfig, estimator: Estimator = None,
                        dist: DistributionSpec = None) -> RateReport:
    """
    Runs every (n, seed_index) row of the config on a worker pool and
    fits the medians of the excess 0-1 risks against n on log-log axes.

    :param cfg: A validated ExperimentConfig
    :param estimator: Replaces the estimator the config names, if given
    :param dist: Replaces the distribution the config names, if given
    :return: The RateReport; rows are ordered by (n, seed_index) whatever
            the worker count
    """
    dist = dist or build_distribution(cfg.distribution, cfg.noise)
    estimator = estimator or estimator_for(cfg.estimator)
    tasks: List[Tuple[int, int]] = [(n, seed_index) for n in cfg.n_grid for seed_index in range(cfg.seeds_per_n)]

    run_log = ExperimentLoggerAdapter(LOGGER, None)
    lifetime = ExperimentLifetime(cfg.experiment_id, len(tasks), LOGGER)
    run_info = RunInfo(cfg.experiment_id, lifetime.start_time_since_epoch, cfg.digest())
    run_log.info("Running %s: %s on %s, %d rows on %d workers",
                 cfg.experiment_id, cfg.estimator, dist.name, len(tasks), cfg.max_workers)

    def task(pair: Tuple[int, int]) -> RateRow:
        return run_row(cfg, dist, estimator, pair[0], pair[1], lifetime)

    if cfg.max_workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.max_workers, thread_name_prefix=cfg.experiment_id) as executor:
            rows = list(executor.map(task, tasks))
    else:
        rows = [task(pair) for pair in tasks]

    space = cfg.space
    theory = rate_exponent(space.beta, space.q, space.d_lower, cfg.noise.s)
    report = RateReport.from_rows(cfg.experiment_id, cfg.estimator, rows, theory, cfg.slope_tolerance)
    report.config = cfg.to_dict()
    report.run_info = run_info.get_run_info()
    report.run_info["status_counts"] = lifetime.status_counts(STATUSES)

    excluded = len(rows) - report.status_counts()[OK]
    if excluded:
        run_log.warning("%d of %d rows were excluded from the fit", excluded, len(rows))
    if report.fit is None:
        run_log.result("%s: no rate fit (%s)", cfg.experiment_id, report.fit_error)
    else:
        run_log.result("%s: fitted slope %.4f +/- %.4f against theoretical %.4f, %s",
                       cfg.experiment_id, report.fit.slope, report.fit.ci_halfwidth,
                       report.theoretical_slope, "passed" if report.passed else "FAILED")
    return report
