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
from scipy.stats import unitary_group

from tetrakit.errors import BadShape
from tetrakit.errors import NotCommuting
from tetrakit.linalg.joint_spectrum import JointSpectrum


class TestJointSpectrum(TestCase):
    """
    Unit tests for JointSpectrum.
    """

    ENTRIES = [(0.5, 0.25j, 0.1), (-0.3, 0.6, 0.2j), (0.1j, -0.4, -0.5)]

    def assert_same_tuples(self, expected, actual, places=10):
        """
        Compare two lists of tuples regardless of their order.
        """
        self.assertEqual(len(expected), len(actual))
        remaining = list(actual)
        for values in expected:
            distances = [max(abs(a - b) for a, b in zip(values, candidate)) for candidate in remaining]
            best = int(np.argmin(distances))
            self.assertAlmostEqual(0.0, distances[best], places=places)
            remaining.pop(best)

    def test_conjugated_diagonal(self):
        """
        The joint eigenvalues of U diag(...) U* are the diagonal tuples.
        """
        unitary = unitary_group.rvs(dim=3, random_state=np.random.default_rng(7))
        adjoint = unitary.conj().T
        columns = np.array(self.ENTRIES, dtype=complex)
        matrices = [unitary @ np.diag(columns[:, k]) @ adjoint for k in range(3)]
        self.assert_same_tuples(self.ENTRIES, JointSpectrum.joint_eigenvalues(matrices))

    def test_triangular_commuting(self):
        """
        A polynomial in one upper triangular matrix shares its triangular form.
        """
        base = np.array([[0.5, 1.0], [0.0, -0.25]], dtype=complex)
        square = base @ base
        tuples = JointSpectrum.joint_eigenvalues([base, square])
        self.assert_same_tuples([(0.5, 0.25), (-0.25, 0.0625)], tuples)

    def test_not_commuting(self):
        """
        Non-commuting input is refused.
        """
        upper = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
        with self.assertRaises(NotCommuting):
            JointSpectrum.joint_eigenvalues([upper, upper.T.copy()])

    def test_shapes(self):
        """
        Matrices of different sizes are refused; empty input gives no eigenvalues.
        """
        with self.assertRaises(BadShape):
            JointSpectrum.joint_eigenvalues([np.eye(2), np.eye(3)])
        self.assertEqual([], JointSpectrum.joint_eigenvalues([]))
        self.assertEqual([], JointSpectrum.joint_eigenvalues([np.zeros((0, 0))]))
