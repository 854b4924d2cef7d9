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

import numpy as np
from parameterized import parameterized

from tetrakit.tetra.battery_config import BatteryConfig
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.spectral_set_battery import SpectralSetBattery
from tetrakit.tetra.spectral_set_battery import monomial_exponents
from tetrakit.tetra.triple_families import TripleFamilies
from tetrakit.verdict import Verdict


class TestSpectralSetBattery(TestCase):
    """
    Unit tests for SpectralSetBattery.
    """

    def setUp(self):
        self.battery = SpectralSetBattery(BatteryConfig(max_deg=3, n_polys=16, sup_samples=500))

    def test_monomial_exponents(self):
        """
        Exponents come in graded lexicographic order.
        """
        self.assertEqual(((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)), monomial_exponents(1))
        self.assertEqual(35, len(monomial_exponents(4)))

    def test_scalar_point_is_certified(self):
        """
        A scalar triple at an interior point is normal with spectrum inside.
        """
        report = self.battery.run(OperatorTriple.scalar(0.5, 0.5, 0.25))
        self.assertEqual(Verdict.CERTIFIED, report.verdict)
        self.assertTrue(report.spectrum_in_e)
        self.assertGreater(report.rho12_min_eig, 0.0)
        self.assertLessEqual(report.vn_worst_ratio, 1.0 + 1e-9)
        self.assertIsNone(report.failing_witness)

    def test_outside_point_is_refuted(self):
        """
        (2, 0, 0) is refuted by its joint spectrum.
        """
        report = self.battery.run(OperatorTriple.scalar(2.0, 0.0, 0.0))
        self.assertEqual(Verdict.REFUTED, report.verdict)
        self.assertFalse(report.spectrum_in_e)
        self.assertEqual("joint_spectrum", report.failing_witness["stage"])
        self.assertEqual(report.failing_witness, report.to_dict()["failing_witness"])

    @parameterized.expand([(index,) for index in (0, 2)])
    def test_pushed_noncontractions_are_refuted(self, index):
        """
        Triples with a joint eigenvalue pushed outside are refuted.
        """
        self.assertEqual(Verdict.REFUTED, self.battery.run(TripleFamilies.noncontraction(index, seed=3)).verdict)

    @parameterized.expand([(index,) for index in range(3)])
    def test_certified_family(self, index):
        """
        Conjugated diagonals of closed tetrablock points are never refuted.
        """
        report = self.battery.run(TripleFamilies.certified(index, seed=5))
        self.assertNotEqual(Verdict.REFUTED, report.verdict)
        self.assertGreaterEqual(report.rho12_min_eig, -1e-9)

    @parameterized.expand(
        [("diagonal", TripleFamilies.diagonal_certified, index, 0) for index in range(6)]
        + [("conjugated", TripleFamilies.certified, index, 5) for index in range(3)]
    )
    def test_adjoint_is_not_refuted(self, _name, family, index, seed):
        """
        The adjoint of a triple the battery does not refute is not refuted either.
        """
        triple = family(index, seed=seed)
        self.assertNotEqual(Verdict.REFUTED, self.battery.run(triple).verdict)
        self.assertNotEqual(Verdict.REFUTED, self.battery.run(triple.adjoint()).verdict)

    @parameterized.expand([(index,) for index in range(6)])
    def test_coordinate_restriction_is_not_refuted(self, index):
        """
        Compressing an unrefuted diagonal triple to a coordinate subspace keeps it unrefuted.
        """
        triple = TripleFamilies.diagonal_certified(index, seed=0)
        self.assertNotEqual(Verdict.REFUTED, self.battery.run(triple).verdict)
        for basis in (np.eye(triple.size, dtype=complex)[:, ::2], np.eye(triple.size, dtype=complex)[:, -1:]):
            restricted = triple.compress(basis)
            self.assertEqual(basis.shape[1], restricted.size)
            self.assertNotEqual(Verdict.REFUTED, self.battery.run(restricted).verdict)
