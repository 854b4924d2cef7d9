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

from tetrakit.errors import HypothesisFailed
from tetrakit.errors import NotUnimodular
from tetrakit.errors import ResidualTooLarge
from tetrakit.gamma.gamma_contraction import GammaContraction
from tetrakit.gamma.operator_pair import OperatorPair
from tetrakit.linalg.circle_maximizer import CircleMaximizer
from tetrakit.linalg.defect_data import DefectData
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.tetra.battery_config import BatteryConfig
from tetrakit.tetra.fundamental_pair import FundamentalPair
from tetrakit.tetra.operator_triple import OperatorTriple

logger = logging.getLogger(__name__)


class TetrablockContraction:
    """
    The rho positivity tests, the fundamental equations and the operator identities satisfied
    by tetrablock contractions.
    """

    RESIDUAL_TOL: float = 1e-8
    UNIMODULAR_TOL: float = 1e-12

    @staticmethod
    def _rho(x: np.ndarray, y: np.ndarray, q: np.ndarray) -> np.ndarray:
        """
        I - Q*Q + (Y*Y - X*X) - 2 Re(Y - X*Q)
        """
        identity = np.eye(x.shape[0], dtype=complex)
        inner = y - x.conj().T @ q
        return identity - q.conj().T @ q + (y.conj().T @ y - x.conj().T @ x) - (inner + inner.conj().T)

    @classmethod
    def rho1(cls, triple: OperatorTriple, z: complex) -> np.ndarray:
        """
        rho1 evaluated at (A, zB, zP).
        """
        z = complex(z)
        return cls._rho(triple.a, z * triple.b, z * triple.p)

    @classmethod
    def rho2(cls, triple: OperatorTriple, z: complex) -> np.ndarray:
        """
        rho2 evaluated at (zA, B, zP), where rho2(X, Y, Q) = I - Q*Q + (X*X - Y*Y) - 2 Re(X - Y*Q).

        With this placement rho1(A, z1 B, z1 P) + rho2(z2 A, B, z2 P) equals
        2 D_P^2 - 2 Re(z2 (A - B*P) + z1 (B - A*P)).
        """
        z = complex(z)
        return cls._rho(triple.b, z * triple.a, z * triple.p)

    @classmethod
    def rho12_min(cls, triple: OperatorTriple, z: complex) -> float:
        """
        :return: min(lambda_min(rho1), lambda_min(rho2)) at z.
        """
        return min(
            SpectralTools.min_eigenvalue(cls.rho1(triple, z)),
            SpectralTools.min_eigenvalue(cls.rho2(triple, z)),
        )

    @classmethod
    def min_rho12_over_disc(cls, triple: OperatorTriple, config: BatteryConfig) -> Tuple[float, complex]:
        """
        Minimize rho12_min over the closed disc: the boundary circle with golden-section refinement,
        then rings of the configured radii.

        :return: (minimum, minimizing z)
        """
        if triple.size == 0:
            return float("inf"), 1.0 + 0.0j

        def on_circle(thetas: np.ndarray) -> np.ndarray:
            return np.array([cls.rho12_min(triple, np.exp(1j * theta)) for theta in thetas])

        best, theta = CircleMaximizer(grid=config.z_circle, brackets=2, iterations=40).minimize(on_circle)
        best_z = complex(np.exp(1j * theta))
        angles = 2.0 * np.pi * np.arange(config.z_ring_angles) / config.z_ring_angles
        for radius in config.z_radii:
            for angle in angles:
                z = radius * np.exp(1j * angle)
                value = cls.rho12_min(triple, z)
                if value < best:
                    best, best_z = value, complex(z)
        return float(best), best_z

    @classmethod
    def _check_unimodular(cls, z: complex) -> complex:
        z = complex(z)
        if abs(abs(z) - 1.0) > cls.UNIMODULAR_TOL:
            raise NotUnimodular(
                f"|z| = {abs(z):.15f} is not 1", residual=abs(abs(z) - 1.0), tolerance=cls.UNIMODULAR_TOL
            )
        return z

    @classmethod
    def slice_pair(cls, triple: OperatorTriple, z: complex) -> OperatorPair:
        """
        :return: (A + zB, zP)
        """
        z = cls._check_unimodular(z)
        return OperatorPair.of(triple.a + z * triple.b, z * triple.p, tol=4.0 * triple.tol)

    @staticmethod
    def sigmas(triple: OperatorTriple) -> Tuple[np.ndarray, np.ndarray]:
        """
        :return: (A - B*P, B - A*P)
        """
        return triple.a - triple.b.conj().T @ triple.p, triple.b - triple.a.conj().T @ triple.p

    @classmethod
    def _solve(cls, sigma: np.ndarray, defect: DefectData, bound: float, label: str) -> Tuple[np.ndarray, float]:
        inverse = defect.pseudo_inverse()
        solution = inverse.conj().T @ sigma @ inverse
        if defect.rank == 0:
            residual = SpectralTools.operator_norm(sigma)
        else:
            residual = SpectralTools.operator_norm(defect.embed(solution) - sigma)
        if residual > bound:
            raise ResidualTooLarge(
                f"Fundamental equation for {label} has residual {residual:.3e}", residual=residual, tolerance=bound
            )
        return solution, residual

    @classmethod
    def solve_fundamental_pair(
        cls, triple: OperatorTriple, defect: Optional[DefectData] = None, sweep_grid: int = 64
    ) -> FundamentalPair:
        """
        Solve A - B*P = D_P F1 D_P and B - A*P = D_P F2 D_P.

        The pseudoinverse solutions are cross-checked against the averaging route
        F1 = (F(1) + F(-1)) / 2, F2 = (F(1) - F(-1)) / 2, where F(z) is the fundamental operator
        of the slice pair (A + zB, zP).

        :param triple: The triple, with ||P|| <= 1.
        :param defect: The defect data of P, computed when absent.
        :param sweep_grid: Grid size of the sweep of w(F1 + z F2) over the circle.
        :return: The fundamental pair with residuals and the sweep maximum.
        """
        defect = defect if defect is not None else DefectData.of(triple.p)
        bound = cls.RESIDUAL_TOL * triple.scale
        sigma1, sigma2 = cls.sigmas(triple)
        f1, residual1 = cls._solve(sigma1, defect, bound, "F1")
        f2, residual2 = cls._solve(sigma2, defect, bound, "F2")

        plus = GammaContraction.solve_fundamental(cls.slice_pair(triple, 1.0), defect)
        minus = GammaContraction.solve_fundamental(cls.slice_pair(triple, -1.0), defect)
        cross = max(
            SpectralTools.operator_norm(f1 - (plus + minus) / 2.0),
            SpectralTools.operator_norm(f2 - (plus - minus) / 2.0),
        )
        if cross > bound:
            raise ResidualTooLarge(
                f"Pseudoinverse and averaging routes disagree by {cross:.3e}", residual=cross, tolerance=bound
            )

        sweep, sweep_z = SpectralTools.pencil_numerical_radius(f1, f2, grid=sweep_grid)
        logger.debug("fundamental pair of rank %d, sweep max w(F1 + z F2) = %.6f", defect.rank, sweep)
        return FundamentalPair(
            f1=f1,
            f2=f2,
            defect=defect,
            residual1=residual1,
            residual2=residual2,
            cross_route_residual=cross,
            w_sweep=sweep,
            w_sweep_z=sweep_z,
        )

    @staticmethod
    def _embedded(defect: DefectData, x: np.ndarray) -> np.ndarray:
        return defect.basis @ x @ defect.basis.conj().T

    @classmethod
    def check_twoneweqns(
        cls, triple: OperatorTriple, defect: DefectData, x1: np.ndarray, x2: np.ndarray
    ) -> Tuple[float, float]:
        """
        :return: (||D_P A - (X1 D_P + X2* D_P P)||, ||D_P B - (X2 D_P + X1* D_P P)||)
        """
        dp = defect.dp
        e1 = cls._embedded(defect, x1)
        e2 = cls._embedded(defect, x2)
        residual_a = SpectralTools.operator_norm(dp @ triple.a - (e1 @ dp + e2.conj().T @ dp @ triple.p))
        residual_b = SpectralTools.operator_norm(dp @ triple.b - (e2 @ dp + e1.conj().T @ dp @ triple.p))
        return residual_a, residual_b

    @classmethod
    def check_tandf(cls, triple: OperatorTriple, pair: FundamentalPair) -> float:
        """
        Residual of A*A - B*B = D_P (F1*F1 - F2*F2) D_P, asserted only when F1 and F2 commute.
        """
        commutator = pair.commutator_residual()
        bound = pair.conditions_tolerance()
        if commutator > bound:
            raise HypothesisFailed(
                f"F1 and F2 do not commute ({commutator:.3e}), the identity is not asserted",
                residual=commutator,
                tolerance=bound,
            )
        left = triple.a.conj().T @ triple.a - triple.b.conj().T @ triple.b
        if pair.rank == 0:
            return SpectralTools.operator_norm(left)
        right = pair.defect.embed(pair.f1.conj().T @ pair.f1 - pair.f2.conj().T @ pair.f2)
        return SpectralTools.operator_norm(left - right)

    @classmethod
    def check_remark_pair(cls, triple: OperatorTriple, pair: FundamentalPair, z: complex) -> float:
        """
        :return: ||(zA + B) - (zA + B)*(zP) - D_P (z F1 + F2) D_P||
        """
        z = cls._check_unimodular(z)
        s = z * triple.a + triple.b
        left = s - s.conj().T @ (z * triple.p)
        if pair.rank == 0:
            return SpectralTools.operator_norm(left)
        return SpectralTools.operator_norm(left - pair.defect.embed(z * pair.f1 + pair.f2))
