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

import numpy as np
from scipy.linalg import svd

from tetrakit.classify.wold_split import WoldSplit
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.tetra.operator_triple import OperatorTriple

logger = logging.getLogger(__name__)


class WoldSplitter:
    """
    Finds the largest subspace reducing V3 on which V3 is unitary.

    The start is the intersection of the eigenvalue-1 spaces of V3*V3 and V3 V3*; vectors whose
    images under V3 or V3* leave the current subspace are removed until nothing changes.
    """

    def __init__(self, tol: float = 1e-8):
        """
        Constructor.

        :param tol: Absolute threshold for eigenvalues at 1 and for singular values treated as zero.
        """
        self.tol: float = tol

    def null_space(self, matrix: np.ndarray) -> np.ndarray:
        """
        :return: Orthonormal columns spanning the vectors the matrix maps below tol.
        """
        cols = matrix.shape[1]
        if matrix.shape[0] == 0 or cols == 0:
            return np.eye(cols, dtype=complex)
        _, singular_values, vh = svd(matrix, full_matrices=True)
        rank = int(np.sum(singular_values > self.tol))
        return vh[rank:].conj().T

    def eigenspace_at_one(self, gram: np.ndarray) -> np.ndarray:
        """
        :return: Orthonormal eigenvectors of the Hermitian gram matrix with eigenvalue within tol of 1.
        """
        eigenvalues, vectors = np.linalg.eigh(SpectralTools.hermitian_part(gram))
        return vectors[:, np.abs(eigenvalues - 1.0) <= self.tol]

    def unitary_subspace(self, v3: np.ndarray) -> np.ndarray:
        """
        :param v3: The isometry.
        :return: Orthonormal columns spanning the unitary part of v3.
        """
        n = v3.shape[0]
        isometric = self.eigenspace_at_one(v3.conj().T @ v3)
        coisometric = self.eigenspace_at_one(v3 @ v3.conj().T)
        outside = np.eye(n, dtype=complex) - coisometric @ coisometric.conj().T
        basis = isometric @ self.null_space(outside @ isometric)

        for _ in range(n + 1):
            leak = np.eye(n, dtype=complex) - basis @ basis.conj().T
            stable = self.null_space(np.vstack([leak @ v3 @ basis, leak @ v3.conj().T @ basis]))
            if stable.shape[1] == basis.shape[1]:
                break
            basis = basis @ stable
        logger.debug("unitary part of V3 has dimension %d of %d", basis.shape[1], n)
        return basis

    @staticmethod
    def reducing_residual(triple: OperatorTriple, basis: np.ndarray) -> float:
        """
        :return: The largest ||(I - Q Q*) V Q|| over V in the triple and its adjoints, for Q = basis.
        """
        if basis.shape[1] == 0:
            return 0.0
        leak = np.eye(triple.size, dtype=complex) - basis @ basis.conj().T
        return max(
            SpectralTools.operator_norm(leak @ m @ basis)
            for matrix in triple.matrices()
            for m in (matrix, matrix.conj().T)
        )

    def split(self, triple: OperatorTriple) -> WoldSplit:
        """
        :param triple: A tetrablock isometry.
        :return: The unitary part, the remainder, and orthonormal bases of both.
        """
        basis_u = self.unitary_subspace(triple.p)
        basis_s = self.null_space(basis_u.conj().T)
        return WoldSplit(
            unitary_part=triple.compress(basis_u),
            shift_part=triple.compress(basis_s),
            basis_u=basis_u,
            basis_s=basis_s,
            reducing_residual=self.reducing_residual(triple, basis_u),
        )
