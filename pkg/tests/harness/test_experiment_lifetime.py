
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
from concurrent.futures import ThreadPoolExecutor
from unittest import TestCase

from hinge_minimax.harness.experiment_lifetime import ExperimentLifetime
from hinge_minimax.harness.run_info import RunInfo
from hinge_minimax.logging.message_types import METRICS


class TestExperimentLifetime(TestCase):
    """
    Tests row bookkeeping and run information.
    """

    def test_concurrent_rows(self):
        """
        Tests that counts add up when rows finish on several threads.
        """
        lifetime = ExperimentLifetime("counting", 40)

        def row(index: int):
            row_log = lifetime.start_row(100, index, index)
            lifetime.finish_row(row_log, "ok" if index % 4 else "capacity")

        with ThreadPoolExecutor(max_workers=4) as executor:
            list(executor.map(row, range(40)))
        stats = lifetime.get_stats()
        self.assertEqual(stats["Started"], 40)
        self.assertEqual(stats["Finished"], 40)
        self.assertEqual(stats["InFlight"], 0)
        self.assertEqual(lifetime.status_counts(["ok", "capacity", "resolution_cap"]),
                         {"ok": 30, "capacity": 10, "resolution_cap": 0})

    def test_metrics_logged(self):
        """
        Tests that start and finish log the statistics at the METRICS level.
        """
        logger = logging.getLogger("tests.lifetime")
        lifetime = ExperimentLifetime("logged", 1, logger)
        with self.assertLogs(logger, level=METRICS) as captured:
            row_log = lifetime.start_row(8, 0, 123)
            lifetime.finish_row(row_log, "ok")
        self.assertEqual(len(captured.records), 2)
        self.assertTrue(all(record.levelno == METRICS for record in captured.records))
        self.assertIn("'Finished': 1", captured.records[-1].getMessage())

    def test_run_info(self):
        """
        Tests the run information dictionary.
        """
        start = time.time() - 5.0
        info = RunInfo("run", start, "abc").get_run_info()
        self.assertEqual(info["name"], "run")
        self.assertEqual(info["config_digest"], "abc")
        self.assertEqual(info["status"], "OK")
        self.assertTrue(info["start_time"].startswith(time.strftime("%Y")))
        self.assertTrue(info["uptime"].startswith("0:00:0"))
        empty = RunInfo().get_run_info()
        self.assertIsNone(empty["start_time"])
        self.assertIsNone(empty["uptime"])
