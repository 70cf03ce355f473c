
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
import time
from threading import RLock
from typing import Any
from typing import Dict

from hinge_minimax.logging.experiment_logger_adapter import ExperimentLoggerAdapter
from hinge_minimax.logging.logging_setup import setup_extra_logging_fields


class ExperimentLifetime():
    """
    Safely keeps track of row statistics for one rate experiment while
    worker threads execute its rows.
    """

    def __init__(self, experiment_id: str, total_rows: int, logger: logging.Logger = None):
        """
        :param experiment_id: Name of the experiment, logged with every row
        :param total_rows: Number of rows the experiment will run
        :param logger: The logger to send output to
        """
        self.start_time_since_epoch = time.time()
        self.experiment_id = experiment_id
        self.logger = logger or logging.getLogger(__name__)
        self.lock = RLock()
        self.stats: Dict[str, Any] = {
            'Total': int(total_rows),
            'Started': 0,
            'InFlight': 0,
            'Finished': 0
        }

    def start_row(self, n: int, seed_index: int, seed: int) -> ExperimentLoggerAdapter:
        """
        Called by a worker at the beginning of a row.  Tags everything the
        calling thread logs from now on with the row.

        :param n: Sample size of the row
        :param seed_index: Replication number within n
        :param seed: The row seed
        :return: The ExperimentLoggerAdapter for the row
        """
        setup_extra_logging_fields({"experiment_id": self.experiment_id,
                                    "run_id": f"{n}/{seed_index}",
                                    "n": n,
                                    "seed": seed})
        row_log = ExperimentLoggerAdapter(self.logger, None)
        row_log.debug("Starting row n=%d seed_index=%d", n, seed_index)

        with self.lock:
            self.stats['Started'] = self.stats.get('Started', 0) + 1
            self.stats['InFlight'] = self.stats.get('InFlight', 0) + 1
            stats_str = str(self.stats)

        row_log.metrics("Stats : %s", stats_str)
        return row_log

    def finish_row(self, row_log: ExperimentLoggerAdapter, status: str):
        """
        Called by a worker at the end of a row.

        :param row_log: The adapter start_row() returned
        :param status: How the row ended, counted per value
        """
        with self.lock:
            self.stats['InFlight'] = self.stats.get('InFlight', 0) - 1
            self.stats['Finished'] = self.stats.get('Finished', 0) + 1
            self.stats[status] = self.stats.get(status, 0) + 1
            stats_str = str(self.stats)

        row_log.metrics("Stats : %s", stats_str)

    def get_stats(self) -> Dict[str, Any]:
        """
        :return: A copy of the statistics table
        """
        with self.lock:
            return dict(self.stats)

    def status_counts(self, statuses) -> Dict[str, int]:
        """
        :param statuses: The status values to report
        :return: How many finished rows ended with each of them
        """
        with self.lock:
            return {status: int(self.stats.get(status, 0)) for status in statuses}
