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

from tetrakit.errors import BadShape
from tetrakit.errors import NotCommuting
from tetrakit.gamma.gamma_class import GammaClass
from tetrakit.gamma.gamma_contraction import GammaContraction
from tetrakit.gamma.operator_pair import OperatorPair
from tetrakit.linalg.defect_data import DefectData
from tetrakit.tetra.triple_families import TripleFamilies
from tetrakit.verdict import Verdict


class TestGammaContraction(TestCase):
    """
    Unit tests for OperatorPair and GammaContraction.
    """

    def setUp(self):
        self.gamma = GammaContraction()

    def test_pair_validation(self):
        """
        Pairs must be square, of one shape and commuting.
        """
        upper = np.array([[0.0, 1.0], [0.0, 0.0]])
        with self.assertRaises(NotCommuting):
            OperatorPair.of(upper, upper.T)
        with self.assertRaises(BadShape):
            OperatorPair.of(np.eye(2), np.eye(3))
        with self.assertRaises(BadShape):
            OperatorPair.from_dict({"S": {"rows": 1, "cols": 1, "re": [[0]]}})

    def test_symmetrized_normal_pair_is_certified(self):
        """
        Diagonal symmetrizations of disc points are certified Gamma-contractions.
        """
        first = np.array([0.3, 0.5j, -0.2])
        second = np.array([-0.2, 0.1, 0.7])
        pair = OperatorPair.of(np.diag(first + second), np.diag(first * second))
        report = self.gamma.contraction_test(pair)
        self.assertEqual(Verdict.CERTIFIED, report.verdict)
        self.assertGreaterEqual(report.min_rho_eig, -1e-9)
        self.assertIsNotNone(report.phi)
        self.assertLess(report.fundamental_residual, 1e-10)
        self.assertLessEqual(report.w_phi, 1.0 + 1e-9)

    def test_large_pair_is_refuted(self):
        """
        (3I, 0) fails the rho battery at beta = 1 with eigenvalue 2 - 6.
        """
        report = self.gamma.contraction_test(OperatorPair.of(3.0 * np.eye(2), np.zeros((2, 2))))
        self.assertEqual(Verdict.REFUTED, report.verdict)
        self.assertAlmostEqual(-4.0, report.min_rho_eig, places=8)
        self.assertAlmostEqual(0.0, abs(report.min_beta - 1.0), places=4)
        self.assertNotIn("phi", report.to_dict())

    def test_scalar_fundamental_operator(self):
        """
        For scalars Phi = (s - conj(s) p) / (1 - |p|^2); both solvers agree.
        """
        pair = OperatorPair.of([[0.6]], [[0.2]])
        defect = DefectData.of(pair.p)
        phi = GammaContraction.solve_fundamental(pair, defect)
        self.assertAlmostEqual(0.5, abs(phi[0, 0]), places=12)
        self.assertTrue(np.allclose(phi, GammaContraction.solve_fundamental_lstsq(pair, defect)))
        self.assertLess(GammaContraction.check_alt_equation(pair, defect, phi), 1e-12)

    @parameterized.expand(
        [
            ("unitary", [[2.0]], [[1.0]], GammaClass.GAMMA_UNITARY),
            ("unitary_zero_sum", [[0.0]], [[1.0]], GammaClass.GAMMA_UNITARY),
            ("contraction", [[0.0]], [[0.0]], GammaClass.GAMMA_CONTRACTION),
            ("outside", [[3.0]], [[0.0]], GammaClass.NONE),
        ]
    )
    def test_classify(self, _name, s, p, expected):
        """
        Classification of scalar pairs.
        """
        self.assertEqual(expected, self.gamma.classify(OperatorPair.of(s, p)))

    def test_non_normal_pair(self):
        """
        (0, N) for the nilpotent N is a Gamma-contraction, neither unitary nor isometric.
        """
        pair = OperatorPair.of(np.zeros((2, 2)), [[0.0, 0.0], [1.0, 0.0]])
        self.assertEqual(GammaClass.GAMMA_CONTRACTION, self.gamma.classify(pair))

    @parameterized.expand([(index,) for index in range(4)])
    def test_shared_p_identity(self, index):
        """
        S1* S2 - S2* S1 = D_P (Phi1* Phi2 - Phi2* Phi1) D_P for Gamma-contractions sharing P.
        """
        first, second = TripleFamilies.shared_p_gamma_pairs(index, seed=1)
        defect = DefectData.of(first.p)
        phi1 = GammaContraction.solve_fundamental(first, defect)
        phi2 = GammaContraction.solve_fundamental(second, defect)
        residual = GammaContraction.check_newresult(first.s, second.s, defect, phi1, phi2)
        self.assertLess(residual, 1e-8)
