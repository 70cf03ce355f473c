
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

import copy
import logging
import threading


# Set up a global variable to allow cascading of LogRecord factories
_EXPERIMENT_OLD_FACTORY = None
_DEFAULT_EXTRA_LOGGING_FIELDS_DICT = {}

_EXPERIMENT_LOGGING_FIELDS_KEY = "hinge_minimax_logging_fields"


def _experiment_log_record_factory(*args, **kwargs):
    """
    Entry point for the standard Python logging system.

    :param args: The positional arguments to the LogRecord constructor
    :param kwargs: The keyword arguments to the LogRecord constructor
    :return: A LogRecord carrying the thread-local row fields as attributes
    """
    log_record = _EXPERIMENT_OLD_FACTORY(*args, **kwargs)

    fields = dict(_DEFAULT_EXTRA_LOGGING_FIELDS_DICT)
    thread_fields = threading.current_thread().__dict__.get(_EXPERIMENT_LOGGING_FIELDS_KEY)
    if thread_fields is not None:
        fields.update(thread_fields)

    for key, value in fields.items():
        setattr(log_record, key, value)

    return log_record


class ExperimentLogRecord():
    """
    Keeps thread-local logging fields (experiment, run, n, seed) so that
    every message a worker logs while executing one experiment row is
    tagged with that row.

    The fields live on the current thread object. A worker thread that
    picks up a new row overwrites them.
    """

    @classmethod
    def set_up_record_factory(cls, default_extra_logging_fields=None):
        """
        Redirects standard LogRecord creation to the factory above.
        Call once, before anything is logged.

        :param default_extra_logging_fields: Fields every record gets
                when its thread has not set its own
        """
        # pylint: disable=global-statement
        global _EXPERIMENT_OLD_FACTORY
        if _EXPERIMENT_OLD_FACTORY is None:
            _EXPERIMENT_OLD_FACTORY = logging.getLogRecordFactory()

        if default_extra_logging_fields is not None:
            # pylint: disable=global-statement
            global _DEFAULT_EXTRA_LOGGING_FIELDS_DICT
            _DEFAULT_EXTRA_LOGGING_FIELDS_DICT = copy.copy(default_extra_logging_fields)

        logging.setLogRecordFactory(_experiment_log_record_factory)

    @classmethod
    def get_default_extra_logging_fields(cls):
        """
        :return: A copy of the dictionary passed into set_up_record_factory()
        """
        return copy.copy(_DEFAULT_EXTRA_LOGGING_FIELDS_DICT)

    def __init__(self, logging_fields_dict=None):
        """
        Constructor.

        :param logging_fields_dict: Initial thread-specific fields.
                Default None starts with an empty dictionary.
        """
        use_dict = logging_fields_dict
        if use_dict is None:
            use_dict = {}
        self.thread_local_dict = use_dict
        threading.current_thread().__dict__[_EXPERIMENT_LOGGING_FIELDS_KEY] = self.thread_local_dict

    def set_logging_fields_dict(self, logging_fields_dict):
        """
        :param logging_fields_dict: Fields to merge into this thread's set
        """
        self.thread_local_dict.update(logging_fields_dict)
