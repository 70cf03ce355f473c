
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

import os
from threading import current_thread
from typing import Any
from typing import Dict

from leaf_common.logging.logging_setup import LoggingSetup

from hinge_minimax.logging.experiment_log_record import ExperimentLogRecord
from hinge_minimax.logging.structured_log_record import StructuredLogRecord

LOG_CONFIG_ENV = "HINGE_MINIMAX_LOG_CONFIG"
LOG_LEVEL_ENV = "HINGE_MINIMAX_LOG_LEVEL"


def setup_extra_logging_fields(extra_logging_fields: Dict[str, Any] = None):
    """
    Sets up the thread-specific fields logged with each message from
    the calling thread.

    :param extra_logging_fields: Fields overriding the defaults. Default is None.
    """
    extra = ExperimentLogRecord.get_default_extra_logging_fields()
    if extra_logging_fields is not None:
        extra.update({key: str(value) for key, value in extra_logging_fields.items()})

    extra["thread_name"] = current_thread().name

    experiment_log_record = ExperimentLogRecord()
    experiment_log_record.set_logging_fields_dict(extra)


def setup_logging(run_name_for_logs: str,
                  default_log_dir: str = None,
                  extra_logging_fields_defaults: Dict[str, str] = None,
                  logging_config: Dict[str, Any] = None):
    """
    Sets up logging for a command line run.

    :param run_name_for_logs: Value of the 'source' field on every record
    :param default_log_dir: Directory holding logging.json.
            Default is the directory of this module.
    :param extra_logging_fields_defaults: Default thread-local fields
    :param logging_config: An explicit dictConfig dictionary, if any
    """
    extras = {
        "source": run_name_for_logs,
        "thread_name": "Unknown",
        "experiment_id": "None",
        "run_id": "None",
        "n": "None",
        "seed": "None"
    }
    if extra_logging_fields_defaults is not None:
        extras.update(extra_logging_fields_defaults)

    log_dir = default_log_dir
    if log_dir is None:
        log_dir = os.path.dirname(os.path.abspath(__file__))

    logging_setup = LoggingSetup(default_log_config_dir=log_dir,
                                 default_log_config_file="logging.json",
                                 default_log_level="INFO",
                                 log_config_env=LOG_CONFIG_ENV,
                                 log_level_env=LOG_LEVEL_ENV,
                                 logging_config=logging_config)
    logging_setup.setup()

    StructuredLogRecord.set_up_record_factory()
    ExperimentLogRecord.set_up_record_factory(extras)
    setup_extra_logging_fields(extras)
