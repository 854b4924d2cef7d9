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

from tetrakit.classify.tetrablock_unitary_generator import TetrablockUnitaryGenerator
from tetrakit.linalg.spectral_tools import SpectralTools


class TestTetrablockUnitaryGenerator(TestCase):
    """
    Unit tests for TetrablockUnitaryGenerator.
    """

    def test_square_root_defect(self):
        """
        D of 0.6 I is 0.8 I.
        """
        defect = TetrablockUnitaryGenerator.square_root_defect(0.6 * np.eye(2))
        self.assertTrue(np.allclose(0.8 * np.eye(2), defect))

    @parameterized.expand([(index,) for index in (0, 2, 4)])
    def test_block_construction(self, index):
        """
        The block matrix is unitary and N1 = N2* N3 with N3 unitary.
        """
        triple, defect = TetrablockUnitaryGenerator.from_blocks(index, seed=3)
        self.assertLess(defect, 1e-12)
        identity = np.eye(triple.size)
        self.assertLess(SpectralTools.operator_norm(triple.p.conj().T @ triple.p - identity), 1e-12)
        self.assertLess(SpectralTools.operator_norm(triple.a - triple.b.conj().T @ triple.p), 1e-12)

    @parameterized.expand([(index,) for index in (1, 3, 5)])
    def test_boundary_point_construction(self, index):
        """
        Conjugated diagonals of pi(U) are normal with unitary third entry.
        """
        triple = TetrablockUnitaryGenerator.from_boundary_points(index, seed=3)
        identity = np.eye(triple.size)
        self.assertLess(SpectralTools.operator_norm(triple.p @ triple.p.conj().T - identity), 1e-12)
        self.assertLess(SpectralTools.normality_residual(triple.a), 1e-12)

    def test_generate_alternates(self):
        """
        Even indices use the block construction.
        """
        triple, _ = TetrablockUnitaryGenerator.from_blocks(2, seed=1)
        self.assertTrue(np.allclose(triple.a, TetrablockUnitaryGenerator.generate(2, seed=1).a))
