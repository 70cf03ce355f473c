
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

from logging import LoggerAdapter

from hinge_minimax.logging.message_types import METRICS
from hinge_minimax.logging.message_types import RESULT


class ExperimentLoggerAdapter(LoggerAdapter):
    """
    Logger carrying the context of a single experiment row or run.
    """

    def metrics(self, msg, *args):
        """
        Logs per-row progress statistics.

        :param msg: The string message to log
        :param args: arguments for the formatting of the string to be logged
        """
        self.log(METRICS, msg, *args)

    def result(self, msg, *args):
        """
        Logs an end product of a run, such as a fitted slope or a bound value.

        :param msg: The string message to log
        :param args: arguments for the formatting of the string to be logged
        """
        self.log(RESULT, msg, *args)
