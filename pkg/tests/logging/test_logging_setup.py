
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
import threading
from unittest import TestCase

from hinge_minimax.logging.experiment_logger_adapter import ExperimentLoggerAdapter
from hinge_minimax.logging.logging_setup import setup_extra_logging_fields
from hinge_minimax.logging.logging_setup import setup_logging
from hinge_minimax.logging.message_types import METRICS
from hinge_minimax.logging.message_types import MessageType
from hinge_minimax.logging.message_types import RESULT


class TestLoggingSetup(TestCase):
    """
    Tests the structured record fields and the custom message levels.
    """

    def setUp(self):
        setup_logging("logging-test")
        self.logger = logging.getLogger("tests.logging")

    def test_levels_named(self):
        """
        Tests the custom level names.
        """
        self.assertEqual(logging.getLevelName(RESULT), "RESULT")
        self.assertEqual(logging.getLevelName(METRICS), "METRICS")
        self.assertGreater(RESULT, METRICS)
        self.assertGreater(METRICS, logging.INFO)

    def test_message_types(self):
        """
        Tests that each level maps to its message type.
        """
        adapter = ExperimentLoggerAdapter(self.logger, {})
        with self.assertLogs(self.logger, level=logging.INFO) as captured:
            self.logger.info("plain")
            self.logger.warning("careful")
            adapter.metrics("Stats : %s", {"Finished": 1})
            adapter.result("slope %.3f", -0.5)
        types = [record.message_type for record in captured.records]
        self.assertEqual(types, [MessageType.OTHER.value, MessageType.WARNING.value,
                                 MessageType.METRICS.value, MessageType.RESULT.value])
        self.assertEqual(captured.records[-1].getMessage(), "slope -0.500")
        self.assertTrue(all(record.iso_timestamp for record in captured.records))

    def test_thread_fields(self):
        """
        Tests that row fields set on one thread tag only that thread's records.
        """
        records = {}

        def worker():
            setup_extra_logging_fields({"n": 128, "seed": 7})
            with self.assertLogs(self.logger, level=logging.INFO) as captured:
                self.logger.info("inside")
            records["worker"] = captured.records[0]

        thread = threading.Thread(target=worker, name="row-worker")
        thread.start()
        thread.join()
        with self.assertLogs(self.logger, level=logging.INFO) as captured:
            self.logger.info("outside")

        self.assertEqual(records["worker"].n, "128")
        self.assertEqual(records["worker"].seed, "7")
        self.assertEqual(records["worker"].thread_name, "row-worker")
        self.assertEqual(records["worker"].source, "logging-test")
        self.assertEqual(captured.records[0].n, "None")
