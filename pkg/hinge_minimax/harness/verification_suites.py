
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
Numerical checks of the package's inequalities and constructions,
each returning a PredicateReport.  The `quick` flag shrinks the
random sweeps and replication counts for smoke runs.
"""
import logging
import math
from typing import Callable
from typing import Dict

import numpy as np
from scipy import stats

from hinge_minimax.bounds.class_setting import ClassSetting
from hinge_minimax.bounds.degenerate_class import degenerate_class_check
from hinge_minimax.bounds.lower_bound_pipeline import lecam_row
from hinge_minimax.bounds.oracle_inequality import oracle_verify
from hinge_minimax.bounds.separation import brute_force_excess_sum
from hinge_minimax.bounds.separation import excess_sum_separation
from hinge_minimax.bounds.tail_integral import tail_integral_bound
from hinge_minimax.bounds.vg_code import required_size
from hinge_minimax.bounds.vg_code import vg_code
from hinge_minimax.dist.distribution_spec import DistributionSpec
from hinge_minimax.dist.divergence import kl_divergence
from hinge_minimax.dist.divergence import scalar_kl
from hinge_minimax.dist.marginal_spec import MarginalSpec
from hinge_minimax.dist.noise_profile import NoiseProfile
from hinge_minimax.errors.hinge_minimax_error import HingeMinimaxError
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.covering_net import covering_net_size
from hinge_minimax.estimators.covering_space import CoveringSpace
from hinge_minimax.estimators.finite_classifier_set import FiniteClassifierSet
from hinge_minimax.estimators.threshold_classifier_set import ThresholdClassifierSet
from hinge_minimax.funcspace.chom_factory import single_core
from hinge_minimax.funcspace.coordinate_core import CoordinateCore
from hinge_minimax.funcspace.step_core import StepCore
from hinge_minimax.relunet.threshold_net import build_threshold_net
from hinge_minimax.risk.predicate_report import PredicateReport

THRESHOLD_ATOL = 1e-9
KL_SLACK = 1e-6
SEPARATION_ATOL = 1e-9
MIN_R_SQUARED = 0.95

LOGGER = logging.getLogger(__name__)


def _random_cells(rng: np.random.Generator, cells: int) -> np.ndarray:
    inner = np.sort(rng.choice(np.arange(1, 64), size=cells - 1, replace=False)) / 64.0
    return np.concatenate([[0.0], inner, [1.0]])


def threshold_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    Exact -1 on (-inf, 1/2] and +1 on [1/2 + 5 delta / 14, 1] for delta = 2^-2 .. 2^-8.
    """
    del seed
    report = PredicateReport("threshold", THRESHOLD_ATOL)
    points = 1000 if quick else 10_000
    for power in range(2, 9):
        delta = 2.0 ** -power
        net = build_threshold_net(delta)
        low = np.linspace(-1.0, 0.5, points).reshape(-1, 1)
        high = np.linspace(0.5 + 5.0 * delta / 14.0, 1.0, points).reshape(-1, 1)
        deviation = max(float(np.max(np.abs(net(low) + 1.0))), float(np.max(np.abs(net(high) - 1.0))))
        report.add(f"delta=2^-{power}", deviation, 0.0)
    return report


def kl_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    KL(P1, P2) <= 18 eps^2 Q(A) + 1e-6 when the etas lie within eps of 1/2
    on A and equal 1/2 off it, for random eps <= 1/8 and random unions A
    of cells; then the scalar bound on a 100 x 100 grid.
    """
    report = PredicateReport("kl", 0.0)
    rng = np.random.default_rng(seed)
    marginal = MarginalSpec.lebesgue(1)
    for trial in range(10 if quick else 100):
        epsilon = rng.uniform(0.001, 0.125)
        edges = _random_cells(rng, int(rng.integers(2, 9)))
        inside = rng.random(edges.shape[0] - 1) < 0.5
        values1 = np.where(inside, 0.5 + epsilon * rng.uniform(-1.0, 1.0, inside.shape[0]), 0.5)
        values2 = np.where(inside, 0.5 + epsilon * rng.uniform(-1.0, 1.0, inside.shape[0]), 0.5)
        eta1 = single_core(1, StepCore(edges, values1), (1,))
        eta2 = single_core(1, StepCore(edges, values2), (1,))
        measure = float(np.sum(np.diff(edges)[inside]))
        report.add(f"construction {trial}", kl_divergence(eta1, eta2, marginal),
                   18.0 * epsilon ** 2 * measure + KL_SLACK)

    for epsilon in (0.01, 0.05, 0.125):
        grid = np.linspace(0.5 - epsilon, 0.5 + epsilon, 100)
        first, second = np.meshgrid(grid, grid, indexing="ij")
        report.add(f"scalar eps={epsilon}", float(np.max(scalar_kl(first, second))), 18.0 * epsilon ** 2)
    return report


def separation_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    For random piecewise-constant pairs on at most 8 cells the separation
    integral equals the exhaustive minimum over cellwise sign patterns.
    Both directions are recorded as rows.
    """
    report = PredicateReport("separation", SEPARATION_ATOL)
    rng = np.random.default_rng(seed)
    marginal = MarginalSpec.lebesgue(1)
    for trial in range(10 if quick else 50):
        edges = _random_cells(rng, int(rng.integers(1, 9)))
        values1 = rng.random(edges.shape[0] - 1)
        values2 = rng.random(edges.shape[0] - 1)
        separation = excess_sum_separation(single_core(1, StepCore(edges, values1), (1,)),
                                           single_core(1, StepCore(edges, values2), (1,)), marginal)
        brute = brute_force_excess_sum(np.diff(edges), values1, values2)
        report.add(f"pair {trial} <=", separation, brute)
        report.add(f"pair {trial} >=", brute, separation)
    return report


def tail_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    The tail integral stays below 2 (log A / a)^(1/b) for random parameters.
    """
    report = PredicateReport("tail", 0.0)
    rng = np.random.default_rng(seed)
    for _ in range(20 if quick else 200):
        big_a = 3.0 * math.exp(rng.uniform(0.0, 8.0))
        a = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
        b = rng.uniform(1.0, 2.0)
        name = f"A={big_a:.4g} a={a:.4g} b={b:.4g}"
        try:
            bound, numeric = tail_integral_bound(big_a, a, b)
        except HingeMinimaxError as exception:
            LOGGER.warning("%s: %s", name, exception)
            report.add(name, math.inf, 0.0)
            continue
        report.add(name, numeric, bound)
    return report


def vg_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    Random lengths m in [2, 64] give codes of at least 1 + 2^(m/8) words
    at pairwise distance at least m/8.
    """
    report = PredicateReport("vg", 0.0)
    rng = np.random.default_rng(seed)
    for trial in range(8 if quick else 50):
        m = int(rng.integers(2, 65))
        code = vg_code(m, seed=seed + trial)
        report.add(f"m={m} size", required_size(m), code.size)
        report.add(f"m={m} distance", m / 8.0, code.min_distance())
    return report


def degenerate_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    For radius 1/2 the constant -1 classifier has no excess risk.
    """
    return degenerate_class_check(0.5, 5 if quick else 20, [seed])


def covering_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    log |net| grows affinely in 1/xi for q = 0, d* = 1, beta = 1.
    """
    del quick, seed
    space = CoveringSpace(q=0, K=1, d_star=0, d_lower=1, beta=1.0, radius=1.0, d=1)
    radii = [2.0 ** -power for power in range(1, 6)]
    sizes = [math.log(covering_net_size(space, xi)) for xi in radii]
    fit = stats.linregress([1.0 / xi for xi in radii], sizes)
    report = PredicateReport("covering", 0.0)
    report.add("R^2 of log size against 1/xi", MIN_R_SQUARED, fit.rvalue ** 2)
    report.add("positive slope", 0.0, fit.slope)
    return report


def oracle_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    Mean excess hinge risk of threshold ERM against the oracle bound for
    ten (n, class size) configurations; each row carries three standard
    errors of slack.
    """
    report = PredicateReport("oracle", 0.0)
    eta = single_core(1, CoordinateCore(), (1,))
    dist = DistributionSpec(eta, MarginalSpec.lebesgue(1), NoiseProfile(1.0, 1.0, 1.0), name="identity")
    replications = 40 if quick else 500
    for n in (100, 200, 400, 800, 1600):
        for grid_size in (3, 7):
            thresholds = ThresholdClassifierSet(0, grid_size)
            classifiers = FiniteClassifierSet([thresholds[index] for index in range(len(thresholds))])
            oracle = oracle_verify(classifiers, dist, n, replications, seed=seed + n + grid_size)
            report.add(f"n={n} members={len(classifiers)}", oracle.lhs,
                       oracle.rhs + 3.0 * oracle.standard_error)
    return report


def lecam_suite(quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    Two-point affinity at least 1/4 and the Le Cam value at least 1/(32n).
    """
    del quick, seed
    report = PredicateReport("lecam", 1e-12)
    setting = ClassSetting(beta=1.0, q=0, K=1, d=2, d_lower=1, s=math.inf, density_bound=2.0)
    for n in (4, 16, 64):
        row = lecam_row(n, setting)
        report.add(f"n={n} affinity", 0.25, row["affinity"])
        report.add(f"n={n} bound", row["reference"], row["lecam"])
    return report


SUITES: Dict[str, Callable[..., PredicateReport]] = {
    "threshold": threshold_suite,
    "kl": kl_suite,
    "separation": separation_suite,
    "tail": tail_suite,
    "vg": vg_suite,
    "degenerate": degenerate_suite,
    "covering": covering_suite,
    "oracle": oracle_suite,
    "lecam": lecam_suite,
}


def run_suite(name: str, quick: bool = False, seed: int = 0) -> PredicateReport:
    """
    :param name: One of SUITES
    :param quick: Shrink the sweeps
    :param seed: Seed of the random sweeps
    :return: The suite's report
    """
    if name not in SUITES:
        raise ParameterError(f"Unknown verification suite '{name}', expected one of {list(SUITES)}")
    report = SUITES[name](quick=quick, seed=seed)
    LOGGER.info("Suite %s: %s (%d checks)", name, "passed" if report.passed else "FAILED", len(report.rows))
    return report
