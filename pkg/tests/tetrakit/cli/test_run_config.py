# Copyright © 2025-2026 Cognizant Technology Solutions Corp, www.cognizant.com.
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

import json
import os
import tempfile
from unittest import TestCase

from parameterized import parameterized

from tetrakit.cli.run_config import RunConfig
from tetrakit.errors import TetrakitError


class TestRunConfig(TestCase):
    """
    Unit tests for RunConfig.
    """

    def test_defaults(self):
        """
        Defaults are documented in the config JSON.
        """
        document = RunConfig().to_dict()
        self.assertEqual(1e-10, document["atol"])
        self.assertIsNone(document["clampTol"])
        self.assertEqual(8, document["depth"])
        self.assertEqual(
            {"maxDeg": 4, "nPolys": 64, "supSamples": 10000, "seed": 0}, RunConfig().battery_config().to_dict()
        )

    def test_resolution_order(self):
        """
        The environment is overridden by the config file, which is overridden by flags.
        """
        environ = {"TETRAKIT_SEED": "3", "TETRAKIT_THREADS": "2", "TETRAKIT_LOG_LEVEL": "debug"}
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "config.json")
            with open(path, "w", encoding="utf-8") as handle:
                json.dump({"seed": 5, "maxDeg": 3, "tol": 1e-7}, handle)
            config = RunConfig.resolve(environ, path, {"seed": 9, "tol": None})

        self.assertEqual(9, config.seed)
        self.assertEqual(2, config.threads)
        self.assertEqual(3, config.max_deg)
        self.assertEqual(1e-7, config.tol)
        self.assertEqual("debug", config.log_level)

    def test_tetrablock_and_tolerance(self):
        """
        Grids and tolerances are handed to the evaluators.
        """
        config = RunConfig().with_values({"circle_grid": 32, "atol": 1e-6})
        self.assertEqual(32, config.tetrablock().circle_grid)
        self.assertEqual(1e-6, config.tolerance().atol)

    @parameterized.expand(
        [
            ("boolean", {"seed": True}),
            ("infinite", {"tol": float("inf")}),
            ("fraction", {"depth": 2.5}),
            ("text", {"threads": "many"}),
            ("negative", {"threads": -1}),
            ("zero", {"depth": 0}),
            ("unknown", {"colour": 1}),
        ]
    )
    def test_rejects(self, _name, values):
        """
        Invalid values are reported as TetrakitError.
        """
        with self.assertRaises(TetrakitError):
            RunConfig().with_values(values)

    def test_document_checks(self):
        """
        Config documents are objects with known keys, and the file must exist.
        """
        with self.assertRaises(TetrakitError):
            RunConfig().with_document([])
        with self.assertRaises(TetrakitError):
            RunConfig().with_document({"max_deg": 3})
        with self.assertRaises(TetrakitError):
            RunConfig.resolve({}, "/nonexistent/config.json")
