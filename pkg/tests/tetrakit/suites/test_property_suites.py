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

from unittest import TestCase

import pytest
from parameterized import parameterized

from tetrakit.errors import NotCommuting
from tetrakit.errors import TetrakitError
from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.property_suite import PropertySuite
from tetrakit.suites.suite_registry import SuiteRegistry
from tetrakit.tetra.battery_config import BatteryConfig

CHEAP = BatteryConfig(max_deg=3, n_polys=16, sup_samples=500, slices=8)


class FailingSuite(PropertySuite):
    """
    Odd cases raise.
    """

    name: str = "failing"

    def run_case(self, index: int, seed: int) -> CaseOutcome:
        if index % 2:
            raise NotCommuting("odd case", residual=1.0)
        return CaseOutcome(index=index, passed=True, quantities={"value": float(index + seed)})


class TestPropertySuites(TestCase):
    """
    Unit tests for the property suites and their registry.
    """

    def test_registry(self):
        """
        Every suite is registered under its command line name.
        """
        self.assertEqual(["awy-equiv", "neat", "fundamental", "chain", "dilation", "classify"], SuiteRegistry.names())
        with self.assertRaises(TetrakitError):
            SuiteRegistry.create("nope")

    def test_raising_cases_fail(self):
        """
        Errors become failed cases with the error as witness.
        """
        result = FailingSuite().run(4, seed=10)
        self.assertEqual(2, result.failed)
        self.assertEqual({"value": 12.0}, result.worst)
        self.assertEqual("NotCommuting", result.witnesses[0]["witness"]["error"]["error"])

    def test_arguments(self):
        """
        Counts and thread numbers are checked.
        """
        with self.assertRaises(TetrakitError):
            FailingSuite().run(0)
        with self.assertRaises(TetrakitError):
            FailingSuite().run(1, threads=-1)

    @parameterized.expand([("awy-equiv", 8), ("neat", 8), ("chain", 2)])
    def test_quick_suites(self, name, count):
        """
        Small runs of the cheaper suites pass.
        """
        result = SuiteRegistry.create(name, config=CHEAP).run(count, seed=0)
        self.assertEqual(count, result.count)
        self.assertTrue(result.ok, result.witnesses)

    def test_threads_do_not_change_the_result(self):
        """
        Cases are pure functions of (index, seed).
        """
        serial = SuiteRegistry.create("awy-equiv").run(8, seed=2)
        pooled = SuiteRegistry.create("awy-equiv").run(8, seed=2, threads=2)
        self.assertEqual(serial.to_dict(), pooled.to_dict())

    @parameterized.expand([("fundamental",), ("dilation",), ("classify",)])
    @pytest.mark.integration
    def test_slow_suites(self, name):
        """
        The suites over generated triples pass on a few cases.
        """
        result = SuiteRegistry.create(name, config=CHEAP).run(8, seed=0)
        self.assertTrue(result.ok, result.witnesses)
