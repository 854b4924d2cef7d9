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
from typing import List
from typing import Sequence
from typing import Tuple

import numpy as np
from scipy.linalg import schur

from tetrakit.errors import BadShape
from tetrakit.errors import NotCommuting
from tetrakit.errors import TriangularizationFailed
from tetrakit.linalg.spectral_tools import SpectralTools

logger = logging.getLogger(__name__)


class JointSpectrum:
    """
    Joint eigenvalues of commuting matrices by simultaneous unitary upper-triangularization.

    For commuting matrices the Taylor joint spectrum is the set of diagonal tuples of any
    common triangular form. A random combination A + t1 B + t2 P generically separates
    eigenvalues, so its Schur vectors triangularize every member.
    """

    MAX_ATTEMPTS: int = 5

    @classmethod
    def joint_eigenvalues(
        cls, matrices: Sequence[np.ndarray], tol: float = 1e-8, seed: int = 0
    ) -> List[Tuple[complex, ...]]:
        """
        :param matrices: Square matrices of equal size that pairwise commute.
        :param tol: Relative tolerance for commutators and for the off-triangular mass.
        :param seed: Seed for the random combination coefficients.
        :return: n tuples, the i-th holding the i-th diagonal entry of every triangularized matrix.
        """
        matrices = [SpectralTools.as_matrix(m, square=True) for m in matrices]
        if not matrices:
            return []
        size = matrices[0].shape[0]
        if any(m.shape != (size, size) for m in matrices):
            raise BadShape("Joint eigenvalues need matrices of equal size")
        if size == 0:
            return []

        cls.check_commuting(matrices, tol)

        norms = [SpectralTools.operator_norm(m) for m in matrices]
        rng = np.random.default_rng(seed)
        worst = np.inf
        for attempt in range(cls.MAX_ATTEMPTS):
            phases = np.exp(2j * np.pi * rng.random(len(matrices) - 1))
            combination = matrices[0].copy()
            for phase, matrix in zip(phases, matrices[1:]):
                combination = combination + phase * matrix
            _, unitary = schur(combination, output="complex")

            triangular = [unitary.conj().T @ m @ unitary for m in matrices]
            worst = max(
                float(np.linalg.norm(np.tril(t, -1))) / (1.0 + norm) for t, norm in zip(triangular, norms)
            )
            if worst <= tol:
                diagonals = [np.diag(t) for t in triangular]
                return [tuple(complex(d[i]) for d in diagonals) for i in range(size)]
            logger.debug("triangularization attempt %d left off-triangular mass %.3e", attempt, worst)

        raise TriangularizationFailed(
            f"Off-triangular mass {worst:.3e} after {cls.MAX_ATTEMPTS} attempts", residual=worst, tolerance=tol
        )

    @staticmethod
    def check_commuting(matrices: Sequence[np.ndarray], tol: float) -> float:
        """
        :return: The largest scaled commutator ||[X, Y]|| / (1 + ||X|| ||Y||).
        """
        worst = 0.0
        for i, x in enumerate(matrices):
            for y in matrices[i + 1 :]:
                scale = 1.0 + SpectralTools.operator_norm(x) * SpectralTools.operator_norm(y)
                residual = SpectralTools.commutator_norm(x, y) / scale
                worst = max(worst, residual)
                if residual > tol:
                    raise NotCommuting(
                        f"Commutator {residual:.3e} exceeds tolerance", residual=residual, tolerance=tol
                    )
        return worst
