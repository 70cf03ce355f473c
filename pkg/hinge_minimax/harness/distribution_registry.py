
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

"""
Named distributions an experiment config can refer to.
"""
from typing import Any
from typing import Callable
from typing import Dict

from leaf_common.parsers.dictionary_extractor import DictionaryExtractor

from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.marginal_spec import MarginalSpec
from hinge_minimax.dist.noise_profile import NoiseProfile
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.funcspace.chom_factory import single_core
from hinge_minimax.funcspace.chom_serializer import ChomSerializer
from hinge_minimax.funcspace.ramp_core import RampCore
from hinge_minimax.funcspace.step_core import StepCore


def _marginal(extractor: DictionaryExtractor, d: int) -> MarginalSpec:
    doc = extractor.get("marginal")
    if doc is None:
        return MarginalSpec.lebesgue(d)
    marginal = MarginalSpec.from_dict(doc)
    if marginal.dim != d:
        raise ParameterError(f"Marginal of dimension {marginal.dim} for d = {d}")
    return marginal


def ramp_distribution(doc: Dict[str, Any], noise: NoiseProfile) -> DistributionSpec:
    """
    eta(x) = clamped linear ramp from 0 to 1 in one coordinate, crossing
    1/2 at the middle of [lower, upper].  A one-layer, one-variable
    Hoelder-1 function with Lipschitz constant 1 / (upper - lower).
    """
    extractor = DictionaryExtractor(doc)
    d = int(extractor.get("d", 1))
    axis = int(extractor.get("axis", 1))
    lower = float(extractor.get("lower", 0.25))
    upper = float(extractor.get("upper", 0.75))
    radius = max(1.0, 1.0 / (upper - lower))
    eta = single_core(d, RampCore(lower, upper), (axis,), 1.0, radius)
    return DistributionSpec(eta, _marginal(extractor, d), noise, name="ramp")


def margin_step_distribution(doc: Dict[str, Any], noise: NoiseProfile) -> DistributionSpec:
    """
    eta(x) = 1/2 - margin left of `cut` and 1/2 + margin right of it,
    in one coordinate, so |2 eta - 1| = 2 margin everywhere.
    """
    extractor = DictionaryExtractor(doc)
    d = int(extractor.get("d", 1))
    axis = int(extractor.get("axis", 1))
    cut = float(extractor.get("cut", 0.5))
    margin = float(extractor.get("margin", 0.2))
    if not 0.0 < margin <= 0.5 or not 0.0 < cut < 1.0:
        raise ParameterError(f"Need margin in (0, 1/2] and cut in (0,1), got {margin}, {cut}")
    core = StepCore([0.0, cut, 1.0], [0.5 - margin, 0.5 + margin])
    eta = single_core(d, core, (axis,), 1.0, 1.0)
    return DistributionSpec(eta, _marginal(extractor, d), noise, name="margin_step")


def chom_distribution(doc: Dict[str, Any], noise: NoiseProfile) -> DistributionSpec:
    """
    eta given as a serialized CompositionalFunction under "function".
    """
    extractor = DictionaryExtractor(doc)
    function_doc = extractor.get("function")
    if function_doc is None:
        raise ParameterError("A 'chom' distribution needs a serialized 'function'")
    eta = ChomSerializer().from_dict(function_doc)
    return DistributionSpec(eta, _marginal(extractor, eta.d), noise, name="chom")


DISTRIBUTIONS: Dict[str, Callable[[Dict[str, Any], NoiseProfile], DistributionSpec]] = {
    "ramp": ramp_distribution,
    "margin_step": margin_step_distribution,
    "chom": chom_distribution,
}


def build_distribution(doc: Dict[str, Any], noise: NoiseProfile) -> DistributionSpec:
    """
    :param doc: The "distribution" section of a config, with a "name" key
    :param noise: The declared noise profile
    :return: The constructed distribution
    """
    name = doc.get("name")
    if name not in DISTRIBUTIONS:
        raise ParameterError(f"Unknown distribution '{name}', expected one of {sorted(DISTRIBUTIONS)}")
    return DISTRIBUTIONS[name](doc, noise)
