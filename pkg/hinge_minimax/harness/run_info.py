
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

from datetime import datetime
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version
from typing import Any
from typing import Dict
import time

DISTRIBUTION_NAME = "hinge-minimax"


class RunInfo():
    """
    Populates a dictionary with information about an experiment run.
    """

    def __init__(self, name: str = None, start_time_since_epoch: float = None,
                 config_digest: str = None, status: str = "OK"):
        """
        :param name: The name of the experiment. Default None
        :param start_time_since_epoch: The start time of the run.
                        Get with time.time(). Default None.
        :param config_digest: Digest of the experiment config. Default None.
        :param status: The status of the run. Default "OK".
        """
        self.name = name
        self.start_time_since_epoch = start_time_since_epoch
        self.config_digest = config_digest
        self.status = status

    def get_run_info(self) -> Dict[str, Any]:
        """
        :return: A dictionary with run information in it
        """
        return {
            "name": self.name,
            "version": self.get_version(),
            "start_time": self.get_start_time(),
            "uptime": self.get_uptime(),
            "status": self.status,
            "config_digest": self.config_digest
        }

    @staticmethod
    def get_version() -> str:
        """
        :return: The installed package version, or None when running from a source tree
        """
        try:
            return version(DISTRIBUTION_NAME)
        except PackageNotFoundError:
            return None

    def get_start_time(self) -> str:
        """
        :return: The start time in iso format
        """
        if self.start_time_since_epoch is None:
            return None
        return datetime.fromtimestamp(self.start_time_since_epoch).isoformat()

    def get_uptime(self) -> str:
        """
        :return: Time elapsed since the start, as a string
        """
        if self.start_time_since_epoch is None:
            return None
        delta = datetime.fromtimestamp(time.time()) - datetime.fromtimestamp(self.start_time_since_epoch)
        return str(delta)
