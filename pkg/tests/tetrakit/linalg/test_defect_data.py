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

import math
from unittest import TestCase

import numpy as np

from tetrakit.errors import NotAContraction
from tetrakit.linalg.defect_data import DefectData
from tetrakit.linalg.tolerance import Tolerance


class TestDefectData(TestCase):
    """
    Unit tests for DefectData and Tolerance.
    """

    def test_scalar_multiple_of_identity(self):
        """
        D_P of 0.6 I is 0.8 I, of full rank.
        """
        defect = DefectData.of(0.6 * np.eye(2))
        self.assertEqual(2, defect.rank)
        self.assertTrue(np.allclose(0.8 * np.eye(2), defect.dp))
        self.assertTrue(np.allclose([0.8, 0.8], defect.singular_values))

    def test_partial_rank(self):
        """
        An eigenvalue of modulus 1 drops out of the defect space.
        """
        defect = DefectData.of(np.diag([1.0, 0.5]))
        self.assertEqual(1, defect.rank)
        self.assertAlmostEqual(math.sqrt(0.75), float(defect.singular_values[0]), places=12)
        self.assertEqual((1, 2), defect.compressed.shape)

    def test_unitary_has_no_defect(self):
        """
        Unitaries have a zero defect operator.
        """
        defect = DefectData.of(np.array([[0.0, 1.0], [1.0, 0.0]]))
        self.assertEqual(0, defect.rank)
        self.assertTrue(np.allclose(np.zeros((2, 2)), defect.dp))

    def test_embed_identity(self):
        """
        Embedding the identity of the defect space gives D_P^2.
        """
        p = np.array([[0.3, 0.2j], [0.0, -0.4]], dtype=complex)
        defect = DefectData.of(p)
        self.assertTrue(np.allclose(defect.dp @ defect.dp, defect.embed(np.eye(defect.rank))))
        self.assertTrue(np.allclose(np.eye(2) - p.conj().T @ p, defect.dp @ defect.dp))

    def test_not_a_contraction(self):
        """
        ||P|| > 1 is refused with the offending eigenvalue as residual.
        """
        with self.assertRaises(NotAContraction) as context:
            DefectData.of(2.0 * np.eye(2))
        self.assertAlmostEqual(3.0, context.exception.residual, places=12)

    def test_tolerance(self):
        """
        Mixed tolerance comparisons and the default clamp.
        """
        tolerance = Tolerance()
        self.assertTrue(tolerance.close(1.0, 1.0 + 1e-9))
        self.assertFalse(tolerance.close(1.0, 1.0 + 1e-6))
        self.assertAlmostEqual(1e-10 + 1e-8 * 2.0, tolerance.bound(-2.0), places=20)
        self.assertAlmostEqual(5e-10, Tolerance.clamp_for(2.0 * np.eye(2)), places=20)
        self.assertEqual(1e-10, Tolerance.clamp_for(np.zeros((0, 0))))
