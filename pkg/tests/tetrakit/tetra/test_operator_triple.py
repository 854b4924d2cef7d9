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

from tetrakit.domains.point3 import Point3
from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.errors import BadShape
from tetrakit.errors import NotCommuting
from tetrakit.errors import TetrakitError
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.tetra.battery_config import BatteryConfig
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.triple_families import TripleFamilies


class TestOperatorTriple(TestCase):
    """
    Unit tests for OperatorTriple, BatteryConfig and the triple generators.
    """

    def test_validation(self):
        """
        One shape for all three, and pairwise commuting.
        """
        upper = np.array([[0.0, 1.0], [0.0, 0.0]])
        with self.assertRaises(NotCommuting):
            OperatorTriple.of(upper, upper.T, np.eye(2))
        with self.assertRaises(BadShape):
            OperatorTriple.of(np.eye(2), np.eye(2), np.eye(3))
        with self.assertRaises(BadShape):
            OperatorTriple.from_dict({"A": {"rows": 1, "cols": 1, "re": [[0]]}})

    def test_scalar_and_diagonal(self):
        """
        Scalar and diagonal constructors, size and scale.
        """
        triple = OperatorTriple.scalar(0.5, 0.5, 0.25)
        self.assertEqual(1, triple.size)
        self.assertAlmostEqual(1.5 * 1.5 * 1.25, triple.scale, places=12)
        diagonal = OperatorTriple.diagonal([(0.5, 0.1, 0.0), (0.2j, -0.3, 0.4)])
        self.assertEqual(2, diagonal.size)
        self.assertEqual(0.2j, diagonal.a[1, 1])
        self.assertEqual((0.0, 0.0, 0.0), diagonal.residuals)

    def test_json(self):
        """
        The triple reads back from its JSON form.
        """
        triple = OperatorTriple.diagonal([(0.5, 0.1, 0.0), (0.2j, -0.3, 0.4)])
        loaded = OperatorTriple.from_dict(triple.to_dict())
        for original, copy in zip(triple.matrices(), loaded.matrices()):
            self.assertTrue(np.array_equal(original, copy))

    def test_adjoint_and_compress(self):
        """
        The adjoint triple and the compression to a coordinate subspace.
        """
        triple = OperatorTriple.diagonal([(0.5, 0.1, 0.0), (0.2j, -0.3, 0.4)])
        self.assertEqual(-0.2j, triple.adjoint().a[1, 1])
        compressed = triple.compress(np.eye(2, dtype=complex)[:, 1:])
        self.assertEqual(1, compressed.size)
        self.assertEqual(0.4, compressed.p[0, 0])

    def test_battery_config(self):
        """
        JSON keys, defaults and validation of the battery settings.
        """
        config = BatteryConfig.from_dict({"maxDeg": 3, "seed": 9})
        self.assertEqual(3, config.max_deg)
        self.assertEqual(9, config.seed)
        self.assertEqual({"maxDeg": 3, "nPolys": 64, "supSamples": 10000, "seed": 9}, config.to_dict())
        with self.assertRaises(TetrakitError):
            BatteryConfig.from_dict({"depth": 3})
        with self.assertRaises(TetrakitError):
            BatteryConfig(max_deg=0)

    @parameterized.expand([(index,) for index in range(6)])
    def test_certified_family(self, index):
        """
        Certified triples are reproducible, of the cycling size, with joint spectrum in the closed tetrablock.
        """
        triple = TripleFamilies.certified(index, seed=4)
        again = TripleFamilies.certified(index, seed=4)
        self.assertEqual(TripleFamilies.size_of(index), triple.size)
        for original, copy in zip(triple.matrices(), again.matrices()):
            self.assertTrue(np.array_equal(original, copy))
        tetrablock = Tetrablock()
        for entry in TripleFamilies.certified_entries(index, seed=4):
            self.assertGreaterEqual(tetrablock.closed_margin(Point3(*entry)), -1e-9)

    @parameterized.expand([(index,) for index in range(1, 7, 2)])
    def test_power_noncontraction_family(self, index):
        """
        Odd noncontractions are (M, M^2, M^3) with r(M) above 1.
        """
        triple = TripleFamilies.noncontraction(index, seed=4)
        self.assertAlmostEqual(
            TripleFamilies.NONCONTRACTION_RADIUS, SpectralTools.spectral_radius(triple.a), places=8
        )
        self.assertTrue(np.allclose(triple.a @ triple.a, triple.b))
        self.assertTrue(np.allclose(triple.b @ triple.a, triple.p))
