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
from dataclasses import dataclass
from typing import Optional

import numpy as np

from tetrakit.errors import NotAContraction
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.linalg.tolerance import Tolerance

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DefectData:
    """
    The defect operator D_P = (I - P*P)^{1/2} together with an orthonormal basis of
    the closure of its range.

    Operators "on the defect space" are expressed in the coordinates of `basis`,
    so they are rank x rank matrices.
    """

    dp: np.ndarray
    basis: np.ndarray
    singular_values: np.ndarray
    rank: int
    clamp_tol: float

    @property
    def compressed(self) -> np.ndarray:
        """
        D_P viewed as a map from H into the defect coordinates: diag(s) basis*  (rank x n).
        """
        return self.singular_values[:, None] * self.basis.conj().T

    def embed(self, x: np.ndarray) -> np.ndarray:
        """
        :param x: An operator on the defect space (rank x rank).
        :return: D_P x D_P as an operator on H (n x n).
        """
        dc = self.compressed
        return dc.conj().T @ x @ dc

    def pseudo_inverse(self) -> np.ndarray:
        """
        :return: The Moore-Penrose inverse of the compressed defect map, n x rank.
        """
        return self.basis / self.singular_values[None, :]

    @classmethod
    def of(cls, p: np.ndarray, clamp_tol: Optional[float] = None) -> "DefectData":
        """
        Compute the defect operator by an eigendecomposition of I - P*P.

        Eigenvalues in [-clamp_tol, 0) are clamped to 0; the basis keeps the eigenvectors
        whose square-root eigenvalue exceeds sqrt(clamp_tol), and D_P is rebuilt from those only.

        :param p: Square matrix with ||p|| <= 1 + clamp_tol.
        :param clamp_tol: Clamp tolerance, defaulting to 1e-10 * (1 + ||p||^2).
        :return: The DefectData of p.
        """
        p = SpectralTools.as_matrix(p, square=True)
        if clamp_tol is None:
            clamp_tol = Tolerance.clamp_for(p)
        n = p.shape[0]
        gram = np.eye(n, dtype=complex) - p.conj().T @ p
        eigenvalues, vectors = np.linalg.eigh(SpectralTools.hermitian_part(gram))

        if n > 0 and eigenvalues[0] < -clamp_tol:
            raise NotAContraction(
                f"I - P*P has eigenvalue {eigenvalues[0]:.3e} below -{clamp_tol:.3e}",
                residual=float(-eigenvalues[0]),
                tolerance=clamp_tol,
            )

        roots = np.sqrt(np.clip(eigenvalues, 0.0, None))
        keep = roots > np.sqrt(clamp_tol)
        basis = vectors[:, keep]
        singular_values = roots[keep]
        dp = (basis * singular_values[None, :]) @ basis.conj().T
        logger.debug("defect operator of a %dx%d matrix has rank %d", n, n, int(keep.sum()))
        return cls(
            dp=dp,
            basis=basis,
            singular_values=singular_values,
            rank=int(keep.sum()),
            clamp_tol=float(clamp_tol),
        )
