
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
Experiment configuration: package defaults, file loading and validation.
"""
import copy
import hashlib
import json
import os
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Dict
from typing import Tuple

from leaf_common.config.config_handler import ConfigHandler
from leaf_common.config.dictionary_overlay import DictionaryOverlay
from leaf_common.parsers.dictionary_extractor import DictionaryExtractor

from hinge_minimax.dist.noise_profile import NoiseProfile
from hinge_minimax.dist.quadrature import DEFAULT_RESOLUTION
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.covering_net import DEFAULT_MEMBER_CAP
from hinge_minimax.estimators.covering_space import CoveringSpace
from hinge_minimax.estimators.train_config import TrainConfig
from hinge_minimax.risk.risk_evaluator import MONTE_CARLO
from hinge_minimax.risk.risk_evaluator import QUADRATURE

WORKERS_ENV = "HINGE_MINIMAX_WORKERS"

COVERING_NET = "covering_net"
GRADIENT_ERM = "gradient_erm"
THRESHOLD = "threshold"
ESTIMATOR_NAMES = (COVERING_NET, GRADIENT_ERM, THRESHOLD)

OUTPUT_FORMATS = ("csv", "json", "png")

MIN_N_POINTS = 4
MIN_SEEDS = 5

DEFAULT_CONFIG: Dict[str, Any] = {
    "experiment_id": "ramp_s0",
    "distribution": {
        "name": "ramp",
        "d": 2,
        "axis": 1,
        "lower": 0.25,
        "upper": 0.75
    },
    "estimator": COVERING_NET,
    "n_grid": [128, 256, 512, 1024, 2048, 4096, 8192],
    "seeds_per_n": 20,
    "master_seed": 0,
    "risk": {
        "method": QUADRATURE,
        "resolution": DEFAULT_RESOLUTION,
        "samples": 100_000
    },
    "schedule": {
        "a": 1.0,
        "b": 2.0,
        "member_cap": DEFAULT_MEMBER_CAP,
        "threshold_grid_factor": 4
    },
    "space": {
        "q": 0,
        "K": 1,
        "d_star": 0,
        "d_lower": 1,
        "beta": 1.0,
        "radius": 2.0,
        "d": 2
    },
    "noise": {
        "s": 0.0,
        "alpha": 1.0,
        "tau": 1.0
    },
    "training": {},
    "output": {
        "dir": "results",
        "formats": list(OUTPUT_FORMATS),
        "record_wallclock": True
    },
    "acceptance": {
        "slope_tolerance": 0.12
    },
    "max_workers": 4
}


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True)
class ExperimentConfig:
    """
    Everything run_rate_experiment() needs: the distribution, the
    estimator, the sample-size sweep, how risks are evaluated and where
    results go.
    """

    experiment_id: str
    distribution: Dict[str, Any]
    estimator: str
    n_grid: Tuple[int, ...]
    seeds_per_n: int
    space: CoveringSpace
    noise: NoiseProfile
    master_seed: int = 0
    risk_method: str = QUADRATURE
    risk_resolution: int = DEFAULT_RESOLUTION
    risk_samples: int = 100_000
    schedule_a: float = 1.0
    schedule_b: float = 2.0
    member_cap: int = DEFAULT_MEMBER_CAP
    threshold_grid_factor: int = 4
    training: TrainConfig = field(default_factory=TrainConfig)
    output_dir: str = "results"
    formats: Tuple[str, ...] = OUTPUT_FORMATS
    record_wallclock: bool = True
    slope_tolerance: float = 0.12
    max_workers: int = 4

    def __post_init__(self):
        if self.estimator not in ESTIMATOR_NAMES:
            raise ParameterError(f"Unknown estimator '{self.estimator}', expected one of {ESTIMATOR_NAMES}")
        if len(self.n_grid) < MIN_N_POINTS:
            raise ParameterError(f"n_grid needs at least {MIN_N_POINTS} sample sizes, got {list(self.n_grid)}")
        if any(later <= earlier for earlier, later in zip(self.n_grid[:-1], self.n_grid[1:])):
            raise ParameterError(f"n_grid must be strictly increasing, got {list(self.n_grid)}")
        if self.n_grid[0] < 3:
            raise ParameterError(f"Sample sizes must be at least 3, got {self.n_grid[0]}")
        if self.seeds_per_n < MIN_SEEDS:
            raise ParameterError(f"seeds_per_n must be at least {MIN_SEEDS}, got {self.seeds_per_n}")
        if self.risk_method not in (QUADRATURE, MONTE_CARLO):
            raise ParameterError(f"Unknown risk method '{self.risk_method}'")
        if self.risk_resolution < 1 or self.risk_samples < 1:
            raise ParameterError("Risk resolution and sample count must be positive")
        if self.threshold_grid_factor < 1 or self.member_cap < 1 or self.max_workers < 1:
            raise ParameterError("threshold_grid_factor, member_cap and max_workers must be positive")
        if self.slope_tolerance <= 0.0:
            raise ParameterError(f"slope_tolerance must be positive, got {self.slope_tolerance}")
        unknown = set(self.formats) - set(OUTPUT_FORMATS)
        if unknown:
            raise ParameterError(f"Unknown output formats {sorted(unknown)}")
        if self.space.d != int(self.distribution.get("d", self.space.d)):
            raise ParameterError(f"Space of dimension {self.space.d} for a distribution "
                                 f"of dimension {self.distribution.get('d')}")

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: The nested form load_experiment_config() reads
        """
        return {
            "experiment_id": self.experiment_id,
            "distribution": copy.deepcopy(self.distribution),
            "estimator": self.estimator,
            "n_grid": list(self.n_grid),
            "seeds_per_n": self.seeds_per_n,
            "master_seed": self.master_seed,
            "risk": {"method": self.risk_method, "resolution": self.risk_resolution,
                     "samples": self.risk_samples},
            "schedule": {"a": self.schedule_a, "b": self.schedule_b, "member_cap": self.member_cap,
                         "threshold_grid_factor": self.threshold_grid_factor},
            "space": self.space.to_dict(),
            "noise": self.noise.to_dict(),
            "training": self.training.to_dict(),
            "output": {"dir": self.output_dir, "formats": list(self.formats),
                       "record_wallclock": self.record_wallclock},
            "acceptance": {"slope_tolerance": self.slope_tolerance},
            "max_workers": self.max_workers
        }

    def digest(self) -> str:
        """
        :return: sha256 of the canonical JSON form, ignoring the worker count
                and output location, which do not change results
        """
        doc = self.to_dict()
        doc.pop("max_workers")
        doc.pop("output")
        text = json.dumps(doc, sort_keys=True, default=str)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "ExperimentConfig":
        """
        :param doc: A complete nested config, usually defaults overlaid by a file
        :return: A validated ExperimentConfig
        """
        extractor = DictionaryExtractor(doc)
        space_doc = dict(extractor.get("space", {}))
        distribution = dict(extractor.get("distribution", {}))
        space_doc.setdefault("d", distribution.get("d", 1))
        try:
            space = CoveringSpace.from_dict(space_doc)
            noise = NoiseProfile.from_dict(extractor.get("noise"))
        except (KeyError, TypeError) as exception:
            raise ParameterError(f"Incomplete space or noise section: {exception}") from exception

        return cls(experiment_id=str(extractor.get("experiment_id", "experiment")),
                   distribution=distribution,
                   estimator=str(extractor.get("estimator")),
                   n_grid=tuple(int(n) for n in extractor.get("n_grid", [])),
                   seeds_per_n=int(extractor.get("seeds_per_n")),
                   space=space,
                   noise=noise,
                   master_seed=int(extractor.get("master_seed", 0)),
                   risk_method=str(extractor.get("risk.method", QUADRATURE)),
                   risk_resolution=int(extractor.get("risk.resolution", DEFAULT_RESOLUTION)),
                   risk_samples=int(extractor.get("risk.samples", 100_000)),
                   schedule_a=float(extractor.get("schedule.a", 1.0)),
                   schedule_b=float(extractor.get("schedule.b", 2.0)),
                   member_cap=int(extractor.get("schedule.member_cap", DEFAULT_MEMBER_CAP)),
                   threshold_grid_factor=int(extractor.get("schedule.threshold_grid_factor", 4)),
                   training=TrainConfig.from_dict(extractor.get("training", {})),
                   output_dir=str(extractor.get("output.dir", "results")),
                   formats=tuple(extractor.get("output.formats", list(OUTPUT_FORMATS))),
                   record_wallclock=bool(extractor.get("output.record_wallclock", True)),
                   slope_tolerance=float(extractor.get("acceptance.slope_tolerance", 0.12)),
                   max_workers=int(extractor.get("max_workers", 4)))


def load_experiment_config(source=None, overrides: Dict[str, Any] = None) -> ExperimentConfig:
    """
    :param source: A HOCON, JSON or YAML file path, a dictionary, or None for the defaults alone
    :param overrides: A nested dictionary laid over the loaded config last
    :return: The validated config; HINGE_MINIMAX_WORKERS, when set, replaces max_workers
    """
    config_handler = ConfigHandler()
    if source is None:
        doc = copy.deepcopy(DEFAULT_CONFIG)
    else:
        doc = config_handler.import_config(source, copy.deepcopy(DEFAULT_CONFIG))
    if overrides:
        doc = DictionaryOverlay().overlay(doc, overrides)

    workers = os.environ.get(WORKERS_ENV)
    if workers:
        try:
            doc["max_workers"] = int(workers)
        except ValueError as exception:
            raise ParameterError(f"{WORKERS_ENV} must be an integer, got '{workers}'") from exception
    return ExperimentConfig.from_dict(doc)
