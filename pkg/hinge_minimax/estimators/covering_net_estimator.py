
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
The finite-class estimator: ERM over the sign classifiers of a covering
net whose radius shrinks with the sample size.
"""
import logging

import numpy as np

from hinge_minimax.dist.dataset import Dataset
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.chain_covering_net import ChainCoveringNet
from hinge_minimax.estimators.covering_net import DEFAULT_MEMBER_CAP
from hinge_minimax.estimators.covering_net import assemble
from hinge_minimax.estimators.covering_net import build_covering_net
from hinge_minimax.estimators.covering_net import grid_for
from hinge_minimax.estimators.covering_net import max_subsets
from hinge_minimax.estimators.covering_space import CoveringSpace
from hinge_minimax.estimators.finite_classifier_set import FiniteClassifierSet
from hinge_minimax.estimators.finite_classifier_set import losses_from_mistakes
from hinge_minimax.estimators.finite_erm import erm_finite
from hinge_minimax.estimators.hyperparam_schedule import covering_radius
from hinge_minimax.estimators.sign_classifier import SignClassifier
from hinge_minimax.funcspace.holder_component import HolderComponent
from hinge_minimax.funcspace.max_component import MaxComponent
from hinge_minimax.risk.loss_kind import LossKind

LOGGER = logging.getLogger(__name__)


def chain_erm(data: Dataset, space: CoveringSpace, xi: float) -> SignClassifier:
    """
    Exact ERM over the covering net of a one-layer, one-variable space
    without materializing it.  Members come in blocks, one per input
    coordinate, followed by the max members; the result is the member of
    fewest mistakes with the lowest index in build_covering_net() order.

    :return: The selected classifier, with index and mistake count set
    """
    grid = grid_for(space, xi)
    chain = ChainCoveringNet(grid)
    block = chain.count()
    best = None
    for axis in range(space.d):
        rank, levels, mistakes = chain.erm(data.x[:, axis], data.y)
        if best is None or mistakes < best[0]:
            component = HolderComponent(space.d, (axis + 1,), grid.core(levels), space.beta, grid.member_radius())
            best = (mistakes, axis * block + rank, component)
    offset = space.d * block
    for position, subset in enumerate(max_subsets(space, space.d)):
        component = MaxComponent(space.d, subset)
        mistakes = int(np.sum(SignClassifier(component)(data.x) != data.y))
        if mistakes < best[0]:
            best = (mistakes, offset + position, component)

    mistakes, index, component = best
    classifier = SignClassifier(assemble(space, grid, [component]), index)
    classifier.mistakes = mistakes
    return classifier


# pylint: disable=too-many-arguments,too-many-positional-arguments
def covering_net_estimator(data: Dataset, space: CoveringSpace, s: float, tau: float, seed: int = 0,
                           loss: LossKind = LossKind.HINGE, cap: int = DEFAULT_MEMBER_CAP) -> SignClassifier:
    """
    :param data: A nonempty sample
    :param space: The class the regression function is assumed to lie in
    :param s: Noise exponent
    :param tau: Margin constant of the noise condition
    :param seed: Recorded on the returned classifier
    :param loss: Empirical loss minimized
    :param cap: Largest covering net materialized
    :return: The sign classifier of the selected member; its attributes
            index, xi, empirical_risk and seed describe the choice
    """
    if len(data) == 0:
        raise ParameterError("The covering-net estimator needs at least one sample")
    if data.dim != space.d:
        raise ParameterError(f"Data of dimension {data.dim} for a space of dimension {space.d}")
    xi = covering_radius(len(data), space.beta, space.q, space.d_lower, s, tau)

    if space.q == 0 and space.d_lower == 1:
        classifier = chain_erm(data, space, xi)
    else:
        net = build_covering_net(space, xi, cap)
        classifiers = FiniteClassifierSet.from_covering_net(net)
        index = erm_finite(data, classifiers, loss)
        classifier = classifiers[index]
        classifier.mistakes = int(np.sum(classifier(data.x) != data.y))

    empirical = float(losses_from_mistakes(loss, np.array([classifier.mistakes]), len(data))[0])
    classifier.xi = xi
    classifier.empirical_risk = empirical
    classifier.seed = seed
    LOGGER.info("Covering-net estimator: n=%d, xi=%.5g, member %d, empirical %s loss %.5g",
                len(data), xi, classifier.index, LossKind(loss).value, empirical)
    return classifier
