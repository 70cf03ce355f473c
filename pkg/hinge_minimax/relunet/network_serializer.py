
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

from typing import List

from leaf_common.persistence.easy.easy_json_persistence import EasyJsonPersistence

from hinge_minimax.relunet.relu_network import ReluNetwork


class NetworkSerializer():
    """
    Writes ReluNetworks as JSON documents {input_dim, layers: [{w, v}]}.
    Python floats serialize with full precision, so a restore reproduces
    every parameter exactly.
    """

    def __init__(self, folder: str = "."):
        """
        :param folder: Directory networks are written to and read from
        """
        self.folder = folder

    def persist(self, net: ReluNetwork, base_name: str):
        """
        :param net: The network to write
        :param base_name: File name without extension
        :return: The reference returned by the persistence layer
        """
        persistence = EasyJsonPersistence(base_name=base_name, folder=self.folder, must_exist=False)
        return persistence.persist(net.to_dict())

    def restore(self, base_name: str) -> ReluNetwork:
        """
        :param base_name: File name without extension
        :return: The network, or None when nothing was written
        """
        persistence = EasyJsonPersistence(base_name=base_name, folder=self.folder, must_exist=False)
        doc = persistence.restore()
        if doc is None:
            return None
        return ReluNetwork.from_dict(doc)

    def persist_list(self, nets: List[ReluNetwork], base_name: str):
        """
        :param nets: Networks to write as one document
        :param base_name: File name without extension
        :return: The reference returned by the persistence layer
        """
        persistence = EasyJsonPersistence(base_name=base_name, folder=self.folder, must_exist=False)
        return persistence.persist({"networks": [net.to_dict() for net in nets]})

    def restore_list(self, base_name: str) -> List[ReluNetwork]:
        """
        :param base_name: File name without extension
        :return: The networks written by persist_list(), or an empty list
        """
        persistence = EasyJsonPersistence(base_name=base_name, folder=self.folder, must_exist=False)
        doc = persistence.restore()
        if doc is None:
            return []
        return [ReluNetwork.from_dict(net) for net in doc["networks"]]
