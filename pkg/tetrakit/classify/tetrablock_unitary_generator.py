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
from typing import Tuple

import numpy as np
from scipy.stats import unitary_group

from tetrakit.domains.tetrablock_sampler import TetrablockSampler
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.triple_families import TripleFamilies

logger = logging.getLogger(__name__)


class TetrablockUnitaryGenerator:
    """
    Reproducible tetrablock unitaries, built two ways: through the 2x2 block unitary
    [[N2* N3, -D_N2], [N3 D_N2, N2]] of commuting normal blocks, and as conjugated diagonals of
    distinguished boundary points pi(U) for 2x2 unitaries U.
    """

    @staticmethod
    def square_root_defect(n2: np.ndarray) -> np.ndarray:
        """
        :return: D_N2 = (I - N2* N2)^{1/2}, negative eigenvalues from rounding clipped to 0.
        """
        gram = np.eye(n2.shape[0], dtype=complex) - n2.conj().T @ n2
        eigenvalues, vectors = np.linalg.eigh(SpectralTools.hermitian_part(gram))
        return (vectors * np.sqrt(np.clip(eigenvalues, 0.0, None))[None, :]) @ vectors.conj().T

    @classmethod
    def block_unitary(cls, n2: np.ndarray, n3: np.ndarray) -> np.ndarray:
        """
        :param n2: A normal contraction commuting with n3.
        :param n3: A unitary.
        :return: The 2n x 2n block matrix [[N2* N3, -D_N2], [N3 D_N2, N2]].
        """
        defect = cls.square_root_defect(n2)
        return np.block([[n2.conj().T @ n3, -defect], [n3 @ defect, n2]])

    @staticmethod
    def pi_of_block(unitary: np.ndarray) -> OperatorTriple:
        """
        :return: (U11, U22, U11 U22 - U21 U12) of a 2n x 2n block matrix.
        """
        n = unitary.shape[0] // 2
        u11, u12 = unitary[:n, :n], unitary[:n, n:]
        u21, u22 = unitary[n:, :n], unitary[n:, n:]
        return OperatorTriple.of(u11, u22, u11 @ u22 - u21 @ u12)

    @classmethod
    def from_blocks(cls, index: int, seed: int = 0) -> Tuple[OperatorTriple, float]:
        """
        N3 = W diag(e^{i theta}) W* and N2 = W diag(c) W* with c in the closed disc, W Haar.

        :return: The triple read off the block unitary and the unitarity defect ||U* U - I|| of the block.
        """
        rng = TripleFamilies.rng(index, seed)
        size = TripleFamilies.size_of(index)
        phases = np.exp(2j * np.pi * rng.random(size))
        contractions = TripleFamilies.disc_points(rng, size)
        w = TripleFamilies.haar(rng, size)
        n3 = w @ np.diag(phases) @ w.conj().T
        n2 = w @ np.diag(contractions) @ w.conj().T
        unitary = cls.block_unitary(n2, n3)
        defect = SpectralTools.operator_norm(unitary.conj().T @ unitary - np.eye(2 * size, dtype=complex))
        return cls.pi_of_block(unitary), defect

    @staticmethod
    def from_boundary_points(index: int, seed: int = 0) -> OperatorTriple:
        """
        :return: U diag(pi(V_k)) U* for Haar 2x2 unitaries V_k and a Haar U.
        """
        rng = TripleFamilies.rng(index, seed)
        size = TripleFamilies.size_of(index)
        matrices = unitary_group.rvs(dim=2, size=size, random_state=rng).reshape(-1, 2, 2)
        entries = [point.as_tuple() for point in TetrablockSampler.pi_batch(matrices)]
        return TripleFamilies.conjugated(entries, TripleFamilies.haar(rng, size))

    @classmethod
    def generate(cls, index: int, seed: int = 0) -> OperatorTriple:
        """
        :return: The index-th tetrablock unitary, alternating between both constructions.
        """
        if index % 2 == 0:
            triple, defect = cls.from_blocks(index, seed)
            logger.debug("block unitary %d has unitarity defect %.3e", index, defect)
            return triple
        return cls.from_boundary_points(index, seed)
