
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

import numpy as np

from hinge_minimax.errors.hinge_minimax_error import HingeMinimaxError
from hinge_minimax.funcspace.compositional_function import CompositionalFunction
from hinge_minimax.relunet.chom_approximator import approximate_chom
from hinge_minimax.relunet.chom_approximator import validation_points
from hinge_minimax.relunet.layer_stack import compose
from hinge_minimax.relunet.relu_network import ReluNetwork
from hinge_minimax.relunet.threshold_net import build_threshold_net

SIGN_TOLERANCE = 1e-9

LOGGER = logging.getLogger(__name__)


def check_sign_regions(net: ReluNetwork, f: CompositionalFunction, delta: float, points: np.ndarray) -> int:
    """
    :param net: A classifier network
    :param f: The regression function it was built from
    :param delta: Threshold width
    :param points: Points of [0,1]^d to check
    :return: Number of points where net is not +1 on {2f-1 > delta}
            or not -1 on {2f-1 < -delta}
    """
    outputs = net.forward(points)
    margin = 2.0 * f(points, check_range=False) - 1.0
    wrong_high = (margin > delta) & (np.abs(outputs - 1.0) > SIGN_TOLERANCE)
    wrong_low = (margin < -delta) & (np.abs(outputs + 1.0) > SIGN_TOLERANCE)
    return int(np.sum(wrong_high) + np.sum(wrong_low))


def build_classifier_net(f: CompositionalFunction, delta: float, seed: int = 0, **kwargs) -> ReluNetwork:
    """
    The threshold network applied to a ReLU approximation of f.

    :param f: A validated compositional function with values in [0,1]
    :param delta: Threshold width in (0, 1/2]
    :param seed: Seed passed on to approximate_chom()
    :param kwargs: Further approximate_chom() options
    :return: A network that is +1 where 2f-1 > delta and -1 where 2f-1 < -delta
    """
    net = compose(build_threshold_net(delta), approximate_chom(f, delta, seed=seed, **kwargs))
    wrong = check_sign_regions(net, f, delta, validation_points(f, seed=seed + 1))
    if wrong:
        raise HingeMinimaxError(f"Classifier network disagrees with sgn(2f-1) at {wrong} checked points")
    LOGGER.info("Classifier network for delta=%g has depth %d", delta, net.depth)
    return net
