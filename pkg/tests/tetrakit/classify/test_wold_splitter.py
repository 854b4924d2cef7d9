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

from tetrakit.classify.wold_splitter import WoldSplitter
from tetrakit.tetra.operator_triple import OperatorTriple


class TestWoldSplitter(TestCase):
    """
    Unit tests for WoldSplitter.
    """

    def setUp(self):
        self.splitter = WoldSplitter()

    def test_null_space(self):
        """
        The null space of diag(1, 0) is spanned by the second basis vector.
        """
        basis = self.splitter.null_space(np.diag([1.0, 0.0]))
        self.assertEqual((2, 1), basis.shape)
        self.assertAlmostEqual(1.0, abs(basis[1, 0]), places=12)
        self.assertEqual((3, 3), self.splitter.null_space(np.zeros((0, 3))).shape)

    def test_shift_plus_unitary(self):
        """
        V3 = diag(shift, e^{i t}) has a one dimensional unitary part.
        """
        v3 = np.zeros((4, 4), dtype=complex)
        v3[1, 0] = 1.0
        v3[2, 1] = 1.0
        v3[3, 3] = np.exp(0.7j)
        basis = self.splitter.unitary_subspace(v3)
        self.assertEqual((4, 1), basis.shape)
        self.assertAlmostEqual(1.0, abs(basis[3, 0]), places=12)

    def test_split_reduces_the_triple(self):
        """
        The unitary part of a diagonal triple reduces all three operators.
        """
        triple = OperatorTriple.diagonal([(0.0, 0.0, -1.0), (0.1, 0.2, 0.3)])
        split = self.splitter.split(triple)
        self.assertEqual(1, split.unitary_part.size)
        self.assertEqual(1, split.shift_part.size)
        self.assertAlmostEqual(-1.0, split.unitary_part.p[0, 0].real, places=12)
        self.assertLess(split.reducing_residual, 1e-12)
        self.assertEqual(1, split.to_dict()["basis_u"]["cols"])
