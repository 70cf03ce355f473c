
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

from enum import Enum
from logging import INFO
from logging import addLevelName


# Custom levels sit a few clicks above INFO so they still show at log-level INFO.
# Final results outrank per-row metrics.
# pylint: disable=invalid-name
RESULT = INFO + 7
METRICS = INFO + 5

addLevelName(RESULT, "RESULT")
addLevelName(METRICS, "METRICS")


class MessageType(str, Enum):
    """
    Represents the various types of log messages an experiment run may generate.
    """

    # DEBUG and INFO
    OTHER = 'Other'

    # CRITICAL, ERROR, and exception()
    ERROR = 'Error'

    WARNING = 'Warning'

    # Per-row progress statistics
    METRICS = 'Metrics'

    # Fitted slopes, bound values and other end products of a run
    RESULT = 'Result'
