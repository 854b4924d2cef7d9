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

from tetrakit.tetra.battery_config import BatteryConfig
from tetrakit.tetra.implication_chain import ImplicationChain
from tetrakit.tetra.operator_triple import OperatorTriple


class TestImplicationChain(TestCase):
    """
    Unit tests for ImplicationChain.
    """

    def setUp(self):
        self.chain = ImplicationChain(BatteryConfig(max_deg=3, n_polys=16, sup_samples=500, slices=8))

    def test_interior_scalar(self):
        """
        Every stage clearly holds at (1/2, 1/2, 1/4).
        """
        report = self.chain.evaluate(OperatorTriple.scalar(0.5, 0.5, 0.25))
        self.assertTrue(report.consistent)
        self.assertTrue(report.stage(ImplicationChain.SPECTRAL_SET).clear_pass)
        self.assertTrue(all(stage.passed for stage in report.stages))
        fundamental = report.stage(ImplicationChain.FUNDAMENTAL)
        self.assertAlmostEqual(0.2, fundamental.margin, places=8)

    def test_outside_scalar(self):
        """
        Every stage fails at (2, 0, 0), which violates nothing.
        """
        report = self.chain.evaluate(OperatorTriple.scalar(2.0, 0.0, 0.0))
        self.assertTrue(report.consistent)
        self.assertFalse(any(stage.passed for stage in report.stages))
        self.assertTrue(report.stage(ImplicationChain.RHO).clear_fail)
        self.assertEqual([], report.to_dict()["violations"])
        self.assertEqual(4, len(report.to_dict()["stages"]))

    def test_unknown_stage(self):
        """
        Stages are looked up by name.
        """
        report = self.chain.evaluate(OperatorTriple.scalar(0.0, 0.0, 0.0))
        with self.assertRaises(KeyError):
            report.stage("x")
