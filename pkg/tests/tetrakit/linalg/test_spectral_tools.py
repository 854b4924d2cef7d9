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
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from parameterized import parameterized

from tetrakit.errors import BadShape
from tetrakit.linalg.spectral_tools import SpectralTools


@st.composite
def complex_matrices(draw, max_size: int = 4):
    """
    Square complex matrices with entries of modulus at most 2 * sqrt(2).
    """
    size = draw(st.integers(min_value=1, max_value=max_size))
    elements = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
    real = draw(arrays(np.float64, (size, size), elements=elements))
    imag = draw(arrays(np.float64, (size, size), elements=elements))
    return real + 1j * imag


class TestSpectralTools(TestCase):
    """
    Unit tests for SpectralTools.
    """

    def test_as_matrix_scalar(self):
        """
        A scalar becomes a 1x1 complex matrix.
        """
        matrix = SpectralTools.as_matrix(3)
        self.assertEqual((1, 1), matrix.shape)
        self.assertEqual(np.complex128, matrix.dtype)
        self.assertEqual(3.0, matrix[0, 0])

    @parameterized.expand(
        [
            ("vector", [1.0, 2.0, 3.0], False),
            ("not_square", [[1.0, 2.0]], True),
            ("nan", [[float("nan")]], False),
            ("infinite", [[float("inf"), 0.0], [0.0, 1.0]], False),
        ]
    )
    def test_as_matrix_rejects(self, _name, value, square):
        """
        Wrong dimensions, wrong shapes and non-finite entries are refused.
        """
        with self.assertRaises(BadShape):
            SpectralTools.as_matrix(value, square=square)

    def test_norms_and_radii(self):
        """
        Norm, spectral radius and numerical radius of the nilpotent Jordan block are 1, 0 and 1/2.
        """
        jordan = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
        self.assertAlmostEqual(1.0, SpectralTools.operator_norm(jordan), places=12)
        self.assertAlmostEqual(0.0, SpectralTools.spectral_radius(jordan), places=12)
        self.assertAlmostEqual(0.5, SpectralTools.numerical_radius(jordan), places=10)

    def test_numerical_radius_of_normal_matrix(self):
        """
        For normal matrices the numerical radius is the spectral radius.
        """
        normal = np.diag([0.5, 1j, -0.25]).astype(complex)
        self.assertAlmostEqual(1.0, SpectralTools.numerical_radius(normal), places=10)

    def test_empty_matrices(self):
        """
        Empty matrices have zero norms and radii, and an infinite smallest eigenvalue.
        """
        empty = np.zeros((0, 0), dtype=complex)
        self.assertEqual(0.0, SpectralTools.operator_norm(empty))
        self.assertEqual(0.0, SpectralTools.spectral_radius(empty))
        self.assertEqual(0.0, SpectralTools.numerical_radius(empty))
        self.assertEqual(math.inf, SpectralTools.min_eigenvalue(empty))

    def test_pencil_numerical_radius(self):
        """
        w(I + zI) is largest at z = 1, where it is 2.
        """
        identity = np.eye(2, dtype=complex)
        value, z = SpectralTools.pencil_numerical_radius(identity, identity)
        self.assertAlmostEqual(2.0, value, places=10)
        self.assertAlmostEqual(0.0, abs(z - 1.0), places=5)

    def test_commutator(self):
        """
        The commutator of the two elementary nilpotents is diag(1, -1); shapes must match.
        """
        upper = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
        lower = upper.T.copy()
        self.assertTrue(np.allclose(np.diag([1.0, -1.0]), SpectralTools.commutator(upper, lower)))
        self.assertAlmostEqual(1.0, SpectralTools.commutator_norm(upper, lower), places=12)
        self.assertAlmostEqual(1.0, SpectralTools.normality_residual(upper), places=12)
        with self.assertRaises(BadShape):
            SpectralTools.commutator(upper, np.eye(3, dtype=complex))

    def test_min_eigenvalue_uses_hermitian_part(self):
        """
        The smallest eigenvalue is taken of (M + M*) / 2.
        """
        matrix = np.array([[1.0, 2.0], [0.0, 1.0]], dtype=complex)
        self.assertAlmostEqual(0.0, SpectralTools.min_eigenvalue(matrix), places=12)

    @settings(deadline=None, max_examples=30)
    @given(complex_matrices())
    def test_numerical_radius_bounds(self, matrix):
        """
        max(r(M), ||M|| / 2) <= w(M) <= ||M||
        """
        norm = SpectralTools.operator_norm(matrix)
        radius = SpectralTools.numerical_radius(matrix)
        slack = 1e-6 * (1.0 + norm)
        self.assertLessEqual(radius, norm + slack)
        self.assertGreaterEqual(radius, norm / 2.0 - slack)
        self.assertGreaterEqual(radius, SpectralTools.spectral_radius(matrix) - slack)
