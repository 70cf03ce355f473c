
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

import contextlib
import io
import json
import os
import tempfile
from unittest import TestCase

import timeout_decorator

from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.harness.cli import main
from hinge_minimax.harness.cli import parse_assignments
from tests.harness.test_rate_experiment import MARGIN


def run_main(argv):
    """
    :return: (exit code, captured standard output)
    """
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


class TestCli(TestCase):
    """
    Tests the hinge-minimax command line.
    """

    def test_parse_assignments(self):
        """
        Tests dotted keys, JSON values and plain strings.
        """
        nested = parse_assignments(["schedule.a=2", "noise.s=inf", "output.formats=[\"csv\"]",
                                    "experiment_id=run one"])
        self.assertEqual(nested, {"schedule": {"a": 2}, "noise": {"s": "inf"},
                                  "output": {"formats": ["csv"]}, "experiment_id": "run one"})
        self.assertEqual(parse_assignments([]), {})
        with self.assertRaises(ParameterError):
            parse_assignments(["schedule.a"])

    def test_bounds(self):
        """
        Tests calculators printed as JSON.
        """
        code, text = run_main(["bounds", "rate-exponent", "--param", "beta=1", "--param", "q=0",
                               "--param", "d_lower=1", "--param", "s=0"])
        self.assertEqual(code, 0)
        self.assertAlmostEqual(json.loads(text)["rate_exponent"], 1.0 / 3.0)

        code, text = run_main(["bounds", "lecam", "--param", "v=0.5", "--param", "affinity=0.25"])
        self.assertEqual(code, 0)
        self.assertGreater(json.loads(text)["lecam"], 0.0)

    def test_bounds_missing_parameter(self):
        """
        Tests that a missing calculator parameter exits with code 2.
        """
        code, _ = run_main(["bounds", "rate-exponent", "--param", "beta=1"])
        self.assertEqual(code, 2)

    def test_verify(self):
        """
        Tests a quick verification table.
        """
        code, text = run_main(["verify", "tail", "vg", "lecam", "--quick"])
        self.assertEqual(code, 0)
        for name in ("tail", "vg", "lecam"):
            self.assertIn(name, text)
        self.assertNotIn("FAIL", text)

        code, _ = run_main(["verify", "nonsense"])
        self.assertEqual(code, 2)

    @timeout_decorator.timeout(300)
    def test_run_and_plot(self):
        """
        Tests running a config file, then re-plotting its CSV.
        """
        with tempfile.TemporaryDirectory() as folder:
            config_path = os.path.join(folder, "margin.json")
            with open(config_path, "w", encoding="utf-8") as config_file:
                json.dump(MARGIN, config_file)

            code, text = run_main(["run", config_path, "--output-dir", folder,
                                   "--set", "acceptance.slope_tolerance=1.0", "--set", "seeds_per_n=10"])
            self.assertEqual(code, 0)
            result = json.loads(text)
            self.assertTrue(result["passed"])
            self.assertEqual(result["theoretical_slope"], -1.0)
            csv_path = os.path.join(folder, "margin_test.csv")
            self.assertTrue(os.path.exists(csv_path))

            plot_path = os.path.join(folder, "replot.png")
            code, text = run_main(["plot", csv_path, "--output", plot_path])
            self.assertEqual(code, 0)
            self.assertEqual(text.strip(), plot_path)
            self.assertGreater(os.path.getsize(plot_path), 0)
