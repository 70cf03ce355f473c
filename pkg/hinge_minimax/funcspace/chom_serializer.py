
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

from typing import Any
from typing import Dict
from typing import List

from leaf_common.persistence.easy.easy_json_persistence import EasyJsonPersistence

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.compositional_function import CompositionalFunction
from hinge_minimax.funcspace.core_registry import core_from_dict
from hinge_minimax.funcspace.holder_component import HolderComponent
from hinge_minimax.funcspace.max_component import MaxComponent


class ChomSerializer():
    """
    Converts CompositionalFunctions to and from JSON-ready dictionaries
    of the form {d, q, K, d_star, d_lower, beta, radius, layers: [...]}.
    """

    def to_dict(self, f: CompositionalFunction) -> Dict[str, Any]:
        """
        :param f: The function to convert
        :return: A JSON-ready dictionary
        """
        return {
            "d": f.d, "q": f.q, "K": f.K, "d_star": f.d_star, "d_lower": f.d_lower,
            "beta": f.beta, "radius": f.radius,
            "layers": [[component.to_dict() for component in layer] for layer in f.layers]
        }

    def from_dict(self, doc: Dict[str, Any]) -> CompositionalFunction:
        """
        :param doc: A dictionary made by to_dict()
        :return: The reconstructed function
        """
        layers = [[self._component_from_dict(component) for component in layer]
                  for layer in doc["layers"]]
        return CompositionalFunction(doc["d"], doc["q"], doc["K"], doc["d_star"], doc["d_lower"],
                                     doc["beta"], doc["radius"], layers)

    @staticmethod
    def _component_from_dict(doc: Dict[str, Any]):
        component_type = doc.get("type")
        if component_type == "holder":
            return HolderComponent(doc["input_dim"], tuple(doc["active_indices"]),
                                   core_from_dict(doc["core"]), doc["beta"], doc["radius"])
        if component_type == "max":
            return MaxComponent(doc["input_dim"], tuple(doc["active_indices"]))
        raise ParameterError(f"Unknown component type '{component_type}'")

    def persist_list(self, functions: List[CompositionalFunction], base_name: str, folder: str = "."):
        """
        Writes a list of functions, for instance the members of a covering net,
        as one JSON document.

        :param functions: The functions to write
        :param base_name: File name without extension
        :param folder: Directory to write into
        :return: The reference returned by the persistence layer
        """
        persistence = EasyJsonPersistence(base_name=base_name, folder=folder, must_exist=False)
        return persistence.persist({"functions": [self.to_dict(f) for f in functions]})

    def restore_list(self, base_name: str, folder: str = ".") -> List[CompositionalFunction]:
        """
        :param base_name: File name without extension
        :param folder: Directory to read from
        :return: The functions written by persist_list(), or an empty list
        """
        persistence = EasyJsonPersistence(base_name=base_name, folder=folder, must_exist=False)
        doc = persistence.restore()
        if doc is None:
            return []
        return [self.from_dict(function) for function in doc["functions"]]
