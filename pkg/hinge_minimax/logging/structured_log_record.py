
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
from datetime import datetime

from hinge_minimax.logging.message_types import MessageType
from hinge_minimax.logging.message_types import METRICS
from hinge_minimax.logging.message_types import RESULT


# Set up a global variable to allow cascading of LogRecord factories
_STRUCTURED_OLD_FACTORY = None

_MESSAGE_TYPE_BY_LEVEL = {
    logging.CRITICAL: MessageType.ERROR,
    logging.ERROR: MessageType.ERROR,
    logging.WARNING: MessageType.WARNING,
    RESULT: MessageType.RESULT,
    METRICS: MessageType.METRICS,
}


def _structured_log_record_factory(*args, **kwargs):
    """
    Entry point for the standard Python logging system.
    This needs to be a regular method, dissociated from any class.

    :param args: The positional arguments to the LogRecord constructor
    :param kwargs: The keyword arguments to the LogRecord constructor
    :return: A LogRecord with message_type and iso_timestamp fields added
    """
    log_record = _STRUCTURED_OLD_FACTORY(*args, **kwargs)

    if log_record.exc_info is not None:
        message_type = MessageType.ERROR
    else:
        message_type = _MESSAGE_TYPE_BY_LEVEL.get(log_record.levelno, MessageType.OTHER)
    log_record.message_type = message_type.value

    log_datetime = datetime.fromtimestamp(log_record.created)
    log_record.iso_timestamp = log_datetime.isoformat()

    return log_record


# pylint: disable=too-few-public-methods
class StructuredLogRecord():
    """
    Adds a 'message_type' field derived from the log level and an
    iso formatted time field to every LogRecord.
    """

    @classmethod
    def set_up_record_factory(cls):
        """
        Redirects standard LogRecord creation to the factory above.
        Call once, before anything is logged.
        """
        # pylint: disable=global-statement
        global _STRUCTURED_OLD_FACTORY
        if _STRUCTURED_OLD_FACTORY is None:
            _STRUCTURED_OLD_FACTORY = logging.getLogRecordFactory()
        logging.setLogRecordFactory(_structured_log_record_factory)
