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

import logging
from typing import Optional
from typing import Tuple

import numpy as np

from tetrakit.domains.point2 import Point2
from tetrakit.domains.symmetrized_bidisc import SymmetrizedBidisc
from tetrakit.errors import BadShape
from tetrakit.errors import NotAContraction
from tetrakit.errors import ResidualTooLarge
from tetrakit.errors import TriangularizationFailed
from tetrakit.gamma.gamma_class import GammaClass
from tetrakit.gamma.gamma_report import GammaReport
from tetrakit.gamma.operator_pair import OperatorPair
from tetrakit.linalg.circle_maximizer import CircleMaximizer
from tetrakit.linalg.defect_data import DefectData
from tetrakit.linalg.joint_spectrum import JointSpectrum
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.verdict import Verdict

logger = logging.getLogger(__name__)


class GammaContraction:
    """
    Gamma-contraction machinery for commuting pairs (S, P): the rho positivity battery,
    the fundamental operator Phi solving S - S*P = D_P Phi D_P, and classification.
    """

    RESIDUAL_TOL: float = 1e-8

    def __init__(self, circle_grid: int = 256, tol: float = 1e-9):
        """
        Constructor.

        :param circle_grid: Number of beta values on the circle before refinement.
        :param tol: Decision tolerance for eigenvalues and joint spectrum margins.
        """
        self.circle_grid: int = circle_grid
        self.tol: float = tol

    @staticmethod
    def rho(s: np.ndarray, p: np.ndarray) -> np.ndarray:
        """
        :return: 2(I - P*P) - (S - S*P) - (S* - P*S)
        """
        if s.shape != p.shape or s.shape[0] != s.shape[1]:
            raise BadShape(f"rho needs equal square shapes, got {s.shape} and {p.shape}")
        identity = np.eye(s.shape[0], dtype=complex)
        sigma = s - s.conj().T @ p
        return 2.0 * (identity - p.conj().T @ p) - sigma - sigma.conj().T

    @staticmethod
    def scale(pair: OperatorPair) -> float:
        """
        :return: 1 + ||S|| + ||P|| + ||S|| ||P||, the magnitude residuals of the pair are measured against.
        """
        s_norm = SpectralTools.operator_norm(pair.s)
        p_norm = SpectralTools.operator_norm(pair.p)
        return (1.0 + s_norm) * (1.0 + p_norm)

    def min_rho_over_circle(self, pair: OperatorPair) -> Tuple[float, complex]:
        """
        Minimize lambda_min(rho(beta S, beta^2 P)) over unimodular beta.

        For |beta| = 1, rho(beta S, beta^2 P) = 2(I - P*P) - 2 Re(beta (S - S*P)).

        :return: (minimum eigenvalue, minimizing beta)
        """
        if pair.size == 0:
            return float("inf"), 1.0 + 0.0j
        identity = np.eye(pair.size, dtype=complex)
        base = 2.0 * (identity - pair.p.conj().T @ pair.p)
        sigma = pair.s - pair.s.conj().T @ pair.p

        def smallest(thetas: np.ndarray) -> np.ndarray:
            beta = np.exp(1j * thetas)[:, None, None]
            rotated = beta * sigma[None, :, :]
            matrices = base[None, :, :] - rotated - np.conj(np.swapaxes(rotated, 1, 2))
            return np.linalg.eigvalsh(matrices)[:, 0]

        value, theta = CircleMaximizer(grid=self.circle_grid).minimize(smallest)
        return float(value), complex(np.exp(1j * theta))

    def joint_spectrum_margin(self, pair: OperatorPair) -> Optional[float]:
        """
        :return: The smallest Gamma margin over the joint eigenvalues, or None if triangularization failed.
        """
        try:
            pairs = JointSpectrum.joint_eigenvalues([pair.s, pair.p], tol=max(pair.tol, 1e-8))
        except TriangularizationFailed:
            logger.debug("joint eigenvalues unavailable for a pair of size %d", pair.size)
            return None
        if not pairs:
            return float("inf")
        return min(SymmetrizedBidisc.margin(Point2(s, p)) for s, p in pairs)

    def is_normal(self, pair: OperatorPair) -> bool:
        """
        :return: True if both S and P are normal within the pair tolerance.
        """
        bound = pair.tol * (1.0 + self.scale(pair) ** 2)
        return SpectralTools.normality_residual(pair.s) <= bound and SpectralTools.normality_residual(pair.p) <= bound

    def contraction_test(self, pair: OperatorPair, defect: Optional[DefectData] = None) -> GammaReport:
        """
        Run the rho battery on a commuting pair.

        :param pair: The pair.
        :param defect: The defect data of P, computed when absent.
        :return: Refuted if some beta gives a negative eigenvalue below -tol, Certified for normal pairs
                 with joint spectrum in Gamma, PassedBattery otherwise.
        """
        min_eig, min_beta = self.min_rho_over_circle(pair)
        if min_eig < -self.tol:
            logger.debug("rho battery refuted at beta=%s with eigenvalue %.3e", min_beta, min_eig)
            return GammaReport(verdict=Verdict.REFUTED, min_rho_eig=min_eig, min_beta=min_beta)

        verdict = Verdict.PASSED_BATTERY
        if self.is_normal(pair):
            margin = self.joint_spectrum_margin(pair)
            if margin is not None and margin >= -self.tol:
                verdict = Verdict.CERTIFIED

        phi = None
        w_phi = None
        residual = None
        try:
            defect = defect if defect is not None else DefectData.of(pair.p)
            phi = self.solve_fundamental(pair, defect)
            residual = self.fundamental_residual(pair, defect, phi)
            w_phi = SpectralTools.numerical_radius(phi)
        except (ResidualTooLarge, NotAContraction) as exception:
            logger.debug("no fundamental operator for a non-refuted pair: %s", exception)
            phi = None
        return GammaReport(
            verdict=verdict,
            min_rho_eig=min_eig,
            min_beta=min_beta,
            phi=phi,
            w_phi=w_phi,
            fundamental_residual=residual,
        )

    @staticmethod
    def fundamental_residual(pair: OperatorPair, defect: DefectData, phi: np.ndarray) -> float:
        """
        :return: ||D_P Phi D_P - (S - S*P)||
        """
        sigma = pair.s - pair.s.conj().T @ pair.p
        if defect.rank == 0:
            return SpectralTools.operator_norm(sigma)
        return SpectralTools.operator_norm(defect.embed(phi) - sigma)

    @classmethod
    def solve_fundamental(cls, pair: OperatorPair, defect: DefectData) -> np.ndarray:
        """
        Phi = pinv(D_P)* (S - S*P) pinv(D_P) in defect coordinates.

        :return: The rank x rank fundamental operator.
        """
        sigma = pair.s - pair.s.conj().T @ pair.p
        inverse = defect.pseudo_inverse()
        phi = inverse.conj().T @ sigma @ inverse
        cls._check_residual(pair, defect, phi)
        return phi

    @classmethod
    def solve_fundamental_lstsq(cls, pair: OperatorPair, defect: DefectData) -> np.ndarray:
        """
        Solve D_P Phi D_P = S - S*P as a least-squares problem in vec(Phi).

        vec(Dc* Phi Dc) = (Dc^T kron Dc*) vec(Phi) for the compressed defect map Dc.

        :return: The rank x rank fundamental operator.
        """
        sigma = pair.s - pair.s.conj().T @ pair.p
        rank = defect.rank
        if rank == 0:
            phi = np.zeros((0, 0), dtype=complex)
        else:
            compressed = defect.compressed
            system = np.kron(compressed.T, compressed.conj().T)
            solution, *_ = np.linalg.lstsq(system, sigma.flatten(order="F"), rcond=None)
            phi = solution.reshape((rank, rank), order="F")
        cls._check_residual(pair, defect, phi)
        return phi

    @classmethod
    def _check_residual(cls, pair: OperatorPair, defect: DefectData, phi: np.ndarray):
        residual = cls.fundamental_residual(pair, defect, phi)
        bound = cls.RESIDUAL_TOL * cls.scale(pair)
        if residual > bound:
            raise ResidualTooLarge(
                f"S - S*P = D_P Phi D_P has residual {residual:.3e}", residual=residual, tolerance=bound
            )

    @staticmethod
    def check_alt_equation(pair: OperatorPair, defect: DefectData, x: np.ndarray) -> float:
        """
        :param x: Candidate operator on the defect space (rank x rank).
        :return: ||D_P S - (X D_P + X* D_P P)||
        """
        embedded = defect.basis @ x @ defect.basis.conj().T
        dp = defect.dp
        return SpectralTools.operator_norm(dp @ pair.s - (embedded @ dp + embedded.conj().T @ dp @ pair.p))

    @staticmethod
    def check_newresult(
        s1: np.ndarray, s2: np.ndarray, defect: DefectData, phi1: np.ndarray, phi2: np.ndarray
    ) -> float:
        """
        Residual of S1* S2 - S2* S1 = D_P (Phi1* Phi2 - Phi2* Phi1) D_P for two Gamma-contractions
        (S1, P), (S2, P) sharing P and with commuting fundamental operators.
        """
        left = s1.conj().T @ s2 - s2.conj().T @ s1
        if defect.rank == 0:
            return SpectralTools.operator_norm(left)
        right = defect.embed(phi1.conj().T @ phi2 - phi2.conj().T @ phi1)
        return SpectralTools.operator_norm(left - right)

    def classify(self, pair: OperatorPair) -> GammaClass:
        """
        :return: GammaUnitary for normal pairs with joint spectrum in bGamma, GammaIsometry when P is
                 unitary and the battery passes, GammaContraction when the battery passes, else None.
        """
        bound = pair.tol * self.scale(pair)
        if self.is_normal(pair):
            try:
                pairs = JointSpectrum.joint_eigenvalues([pair.s, pair.p], tol=max(pair.tol, 1e-8))
            except TriangularizationFailed:
                pairs = None
            if pairs is not None and all(SymmetrizedBidisc.boundary(Point2(s, p), self.tol) for s, p in pairs):
                return GammaClass.GAMMA_UNITARY

        report = self.contraction_test(pair)
        if report.verdict == Verdict.REFUTED:
            return GammaClass.NONE
        identity = np.eye(pair.size, dtype=complex)
        if SpectralTools.operator_norm(pair.p.conj().T @ pair.p - identity) <= bound:
            return GammaClass.GAMMA_ISOMETRY
        return GammaClass.GAMMA_CONTRACTION
