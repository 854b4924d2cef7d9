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

import itertools
import logging
from functools import lru_cache
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from tetrakit.domains.point3 import Point3
from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.domains.tetrablock_sampler import SampleMode
from tetrakit.domains.tetrablock_sampler import TetrablockSampler
from tetrakit.errors import TriangularizationFailed
from tetrakit.linalg.joint_spectrum import JointSpectrum
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.tetra.battery_config import BatteryConfig
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.spectral_set_report import SpectralSetReport
from tetrakit.tetra.tetrablock_contraction import TetrablockContraction
from tetrakit.verdict import Verdict

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def monomial_exponents(max_deg: int) -> Tuple[Tuple[int, int, int], ...]:
    """
    :return: Every (k1, k2, k3) with k1 + k2 + k3 <= max_deg, in graded lexicographic order.
    """
    exponents = [
        (k1, k2, k3)
        for k1, k2, k3 in itertools.product(range(max_deg + 1), repeat=3)
        if k1 + k2 + k3 <= max_deg
    ]
    return tuple(sorted(exponents, key=lambda k: (sum(k), k)))


def monomial_values(points: np.ndarray, exponents: Tuple[Tuple[int, int, int], ...]) -> np.ndarray:
    """
    :param points: (count, 3) array of points of C^3.
    :return: (count, len(exponents)) array of monomial values.
    """
    powers = np.array(exponents, dtype=int)
    return np.prod(points[:, None, :] ** powers[None, :, :], axis=2)


@lru_cache(maxsize=8)
def polynomial_coefficients(max_deg: int, n_polys: int, seed: int) -> np.ndarray:
    """
    :return: (monomials, n_polys) complex Gaussian coefficients, each column of unit norm.
    """
    count = len(monomial_exponents(max_deg))
    rng = np.random.default_rng(np.random.SeedSequence([seed, max_deg, n_polys]))
    coefficients = rng.standard_normal((count, n_polys)) + 1j * rng.standard_normal((count, n_polys))
    return coefficients / np.linalg.norm(coefficients, axis=0)[None, :]


@lru_cache(maxsize=8)
def sampled_supremum(max_deg: int, n_polys: int, sup_samples: int, seed: int) -> np.ndarray:
    """
    sup of |f| over interior and boundary samples of the closed tetrablock for every battery polynomial.

    :return: (n_polys,) array.
    """
    points = TetrablockSampler.sample(sup_samples, SampleMode.INTERIOR, seed) + TetrablockSampler.sample(
        sup_samples, SampleMode.BOUNDARY, seed + 1
    )
    grid = np.array([point.as_tuple() for point in points], dtype=complex)
    values = monomial_values(grid, monomial_exponents(max_deg)) @ polynomial_coefficients(max_deg, n_polys, seed)
    return np.max(np.abs(values), axis=0)


class SpectralSetBattery:
    """
    Tests whether the closed tetrablock is a spectral set for a commuting triple.

    The stages are necessary conditions and can only refute; a triple is certified only when
    it is normal with joint spectrum in the closed tetrablock, where the spectral theorem decides.
    """

    def __init__(
        self, config: Optional[BatteryConfig] = None, tol: float = 1e-9, tetrablock: Optional[Tetrablock] = None
    ):
        """
        Constructor.

        :param config: Battery settings.
        :param tol: Tolerance of the spectrum and rho stages.
        :param tetrablock: Membership evaluator for joint eigenvalues.
        """
        self.config: BatteryConfig = config or BatteryConfig()
        self.tol: float = tol
        self.tetrablock: Tetrablock = tetrablock or Tetrablock()

    def joint_spectrum_stage(self, triple: OperatorTriple) -> Tuple[bool, Optional[Point3], List[Point3]]:
        """
        :return: (all joint eigenvalues in the closed tetrablock, the worst outside point or None,
                  the joint eigenvalues that are inside)
        """
        try:
            tuples = JointSpectrum.joint_eigenvalues(
                triple.matrices(), tol=max(triple.tol, 1e-8), seed=self.config.seed
            )
        except TriangularizationFailed as exception:
            logger.info("joint spectrum stage skipped: %s", exception)
            return False, None, []

        inside: List[Point3] = []
        worst: Optional[Point3] = None
        worst_margin = -self.tol
        for values in tuples:
            point = Point3(*values)
            margin = self.tetrablock.closed_margin(point)
            if margin >= -self.tol:
                inside.append(point)
            elif margin < worst_margin:
                worst, worst_margin = point, margin
        return worst is None, worst, inside

    def von_neumann_stage(self, triple: OperatorTriple, inside: List[Point3]) -> Tuple[float, Optional[int]]:
        """
        Compare ||f(A, B, P)|| with the sampled sup of |f| for every battery polynomial.

        :param inside: Joint eigenvalues already known to be in the closed tetrablock; they join the sup set.
        :return: (worst ratio, index of the worst polynomial)
        """
        config = self.config
        exponents = monomial_exponents(config.max_deg)
        coefficients = polynomial_coefficients(config.max_deg, config.n_polys, config.seed)
        supremum = sampled_supremum(config.max_deg, config.n_polys, config.sup_samples, config.seed)
        if inside:
            extra = np.array([point.as_tuple() for point in inside], dtype=complex)
            supremum = np.maximum(supremum, np.max(np.abs(monomial_values(extra, exponents) @ coefficients), axis=0))

        monomials = self._monomial_matrices(triple, exponents)
        evaluated = np.tensordot(coefficients.T, monomials, axes=(1, 0))
        norms = np.linalg.norm(evaluated, ord=2, axis=(1, 2))
        ratios = norms / np.maximum(supremum, np.finfo(float).tiny)
        index = int(np.argmax(ratios))
        return float(ratios[index]), index

    @staticmethod
    def _monomial_matrices(triple: OperatorTriple, exponents: Tuple[Tuple[int, int, int], ...]) -> np.ndarray:
        degree = max(sum(k) for k in exponents)
        size = triple.size
        powers = []
        for matrix in triple.matrices():
            current = [np.eye(size, dtype=complex)]
            for _ in range(degree):
                current.append(current[-1] @ matrix)
            powers.append(current)
        return np.array([powers[0][k1] @ powers[1][k2] @ powers[2][k3] for k1, k2, k3 in exponents])

    def is_normal(self, triple: OperatorTriple) -> bool:
        """
        :return: True when A, B and P are normal within the triple tolerance.
        """
        bound = triple.tol * triple.scale**2
        return all(SpectralTools.normality_residual(m) <= bound for m in triple.matrices())

    def run(self, triple: OperatorTriple) -> SpectralSetReport:
        """
        Run the joint spectrum, rho and von Neumann stages in that order.

        :param triple: A commuting triple.
        :return: The report; the first refuting stage provides the failing witness.
        """
        if triple.size == 0:
            return SpectralSetReport(Verdict.CERTIFIED, True, float("inf"), 1.0 + 0.0j, 0.0)

        spectrum_in_e, outside, inside = self.joint_spectrum_stage(triple)
        rho_min, rho_z = TetrablockContraction.min_rho12_over_disc(triple, self.config)
        ratio, poly_index = self.von_neumann_stage(triple, inside)

        witness: Optional[Dict[str, Any]] = None
        if outside is not None:
            witness = {"stage": "joint_spectrum", "point": outside.to_dict()}
        elif rho_min < -self.tol:
            witness = {"stage": "rho", "z": MatrixCodec.encode_complex(rho_z), "min_eig": rho_min}
        elif ratio > 1.0 + self.config.vn_tol:
            witness = self._polynomial_witness(poly_index, ratio)

        if witness is not None:
            verdict = Verdict.REFUTED
        elif spectrum_in_e and self.is_normal(triple):
            verdict = Verdict.CERTIFIED
        else:
            verdict = Verdict.PASSED_BATTERY
        logger.debug("battery verdict %s, rho min %.3e, worst ratio %.6f", verdict.value, rho_min, ratio)
        return SpectralSetReport(
            verdict=verdict,
            spectrum_in_e=spectrum_in_e,
            rho12_min_eig=rho_min,
            rho12_min_z=rho_z,
            vn_worst_ratio=ratio,
            failing_witness=witness,
        )

    def _polynomial_witness(self, index: int, ratio: float) -> Dict[str, Any]:
        config = self.config
        exponents = monomial_exponents(config.max_deg)
        column = polynomial_coefficients(config.max_deg, config.n_polys, config.seed)[:, index]
        return {
            "stage": "von_neumann",
            "ratio": ratio,
            "polynomial": [
                {"exponents": list(k), "coefficient": MatrixCodec.encode_complex(c)} for k, c in zip(exponents, column)
            ],
        }
