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
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np
from scipy.linalg import svdvals

from tetrakit.dilation.dilation_model import DilationModel
from tetrakit.dilation.recovered_fundamental import RecoveredFundamental
from tetrakit.errors import BadDepth
from tetrakit.errors import BadShape
from tetrakit.errors import BlockStructureMismatch
from tetrakit.errors import ConditionsNotMet
from tetrakit.errors import DepthTooShallow
from tetrakit.errors import ResidualTooLarge
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.tetra.fundamental_pair import FundamentalPair
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.spectral_set_battery import monomial_exponents
from tetrakit.tetra.tetrablock_contraction import TetrablockContraction

logger = logging.getLogger(__name__)


class SchafferDilation:
    """
    Builds and verifies the truncated isometric dilation

        V1 (h0, h1, h2, ...) = (A h0, F2* D_P h0 + F1 h1, F2* h1 + F1 h2, ...)
        V2 (h0, h1, h2, ...) = (B h0, F1* D_P h0 + F2 h1, F1* h1 + F2 h2, ...)
        V3 (h0, h1, h2, ...) = (P h0, D_P h0, h1, h2, ...)

    of a tetrablock contraction whose fundamental operators commute and satisfy [F1, F1*] = [F2, F2*].
    """

    STRUCTURE_TOL: float = 1e-12
    AGREEMENT_TOL: float = 1e-8
    KRYLOV_TOL: float = 1e-10

    @staticmethod
    def block_bidiagonal(diagonal: np.ndarray, subdiagonal: np.ndarray, depth: int) -> np.ndarray:
        """
        :return: The depth x depth block matrix with diagonal blocks `diagonal` and blocks `subdiagonal`
                 right below them.
        """
        size = diagonal.shape[0]
        matrix = np.zeros((depth * size, depth * size), dtype=complex)
        for k in range(depth):
            rows = slice(k * size, (k + 1) * size)
            matrix[rows, rows] = diagonal
            if k + 1 < depth:
                matrix[(k + 1) * size:(k + 2) * size, rows] = subdiagonal
        return matrix

    @classmethod
    def assemble(
        cls, top: np.ndarray, link: np.ndarray, diagonal: np.ndarray, subdiagonal: np.ndarray, depth: int
    ) -> np.ndarray:
        """
        :param top: The block acting on H.
        :param link: The block from H into the first defect level.
        :param diagonal: The block on every defect level.
        :param subdiagonal: The block from each defect level into the next one.
        :return: The truncated block operator on H + D_P^depth.
        """
        n = top.shape[0]
        rank = diagonal.shape[0]
        matrix = np.zeros((n + depth * rank, n + depth * rank), dtype=complex)
        matrix[:n, :n] = top
        if rank > 0:
            matrix[n:n + rank, :n] = link
            matrix[n:, n:] = cls.block_bidiagonal(diagonal, subdiagonal, depth)
        return matrix

    @classmethod
    def _operators(
        cls, triple_matrices: Sequence[np.ndarray], dc: np.ndarray, f1: np.ndarray, f2: np.ndarray, depth: int
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        a, b, p = triple_matrices
        identity = np.eye(f1.shape[0], dtype=complex)
        zero = np.zeros_like(f1)
        return (
            cls.assemble(a, f2.conj().T @ dc, f1, f2.conj().T, depth),
            cls.assemble(b, f1.conj().T @ dc, f2, f1.conj().T, depth),
            cls.assemble(p, dc, zero, identity, depth),
        )

    @classmethod
    def build(
        cls,
        triple: OperatorTriple,
        pair: Optional[FundamentalPair] = None,
        depth: int = 8,
        allow_unconditioned: bool = False,
    ) -> DilationModel:
        """
        :param triple: A tetrablock contraction.
        :param pair: Its fundamental pair, solved when absent.
        :param depth: Number of defect copies, at least 1.
        :param allow_unconditioned: Build even when the commutation conditions on F1, F2 fail.
        :return: The truncated dilation.
        """
        if depth < 1:
            raise BadDepth(f"Depth must be at least 1, got {depth}")
        pair = pair if pair is not None else TetrablockContraction.solve_fundamental_pair(triple)
        bound = TetrablockContraction.RESIDUAL_TOL * triple.scale
        worst = max(pair.residual1, pair.residual2)
        if worst > bound:
            raise ResidualTooLarge(
                f"The fundamental pair has residual {worst:.3e}", residual=worst, tolerance=bound
            )

        commutator = pair.commutator_residual()
        gap = pair.self_commutator_residual()
        tolerance = pair.conditions_tolerance()
        conditions_ok = commutator <= tolerance and gap <= tolerance
        if not conditions_ok and not allow_unconditioned:
            raise ConditionsNotMet(
                f"[F1, F2] = {commutator:.3e} and [F1, F1*] - [F2, F2*] = {gap:.3e} exceed {tolerance:.3e}",
                commutator_residual=commutator,
                self_commutator_residual=gap,
                tolerance=tolerance,
            )

        v1, v2, v3 = cls._operators(triple.matrices(), pair.defect.compressed, pair.f1, pair.f2, depth)
        logger.debug("dilation of a size %d triple with defect rank %d at depth %d", triple.size, pair.rank, depth)
        return DilationModel(
            h_dim=triple.size,
            defect_rank=pair.rank,
            depth=depth,
            v1=v1,
            v2=v2,
            v3=v3,
            f1=pair.f1,
            f2=pair.f2,
            conditions_ok=conditions_ok,
            commutator_residual=commutator,
            self_commutator_residual=gap,
        )

    @staticmethod
    def _powers(matrices: Sequence[np.ndarray], degree: int) -> List[List[np.ndarray]]:
        powers = []
        for matrix in matrices:
            current = [np.eye(matrix.shape[0], dtype=complex)]
            for _ in range(degree):
                current.append(current[-1] @ matrix)
            powers.append(current)
        return powers

    @classmethod
    def verify_moments(cls, model: DilationModel, triple: OperatorTriple, max_degree: int) -> float:
        """
        :param max_degree: Largest total degree, at most depth - 1.
        :return: max over k1 + k2 + k3 <= max_degree of ||P_H V1^k1 V2^k2 V3^k3 |_H - A^k1 B^k2 P^k3||.
        """
        if max_degree < 0:
            raise BadDepth(f"Degree must not be negative, got {max_degree}")
        if max_degree > model.depth - 1:
            raise DepthTooShallow(f"Degree {max_degree} needs a depth of at least {max_degree + 1}, got {model.depth}")
        if triple.size != model.h_dim:
            raise BadShape(f"The triple has size {triple.size} but the model has H_dim {model.h_dim}")

        n = model.h_dim
        dilated = cls._powers((model.v1, model.v2, model.v3), max_degree)
        original = cls._powers(triple.matrices(), max_degree)
        worst = 0.0
        for k1, k2, k3 in monomial_exponents(max_degree):
            compressed = (dilated[0][k1] @ dilated[1][k2] @ dilated[2][k3])[:n, :n]
            direct = original[0][k1] @ original[1][k2] @ original[2][k3]
            worst = max(worst, SpectralTools.operator_norm(compressed - direct))
        return worst

    @staticmethod
    def verify_model_identities(model: DilationModel) -> Dict[str, float]:
        """
        Commutators of V1, V2, V3 on the whole truncated space; V1 = V2* V3, V2 = V1* V3 and the isometry
        of V3 on the levels above the deepest one; the conditions on F1, F2.

        :return: Named residuals.
        """
        v1, v2, v3 = model.v1, model.v2, model.v3
        f1, f2 = model.f1, model.f2
        inner = model.levels_below(model.depth)
        identity = np.eye(model.dim, dtype=complex)
        residuals = {
            "commutator_v1_v2": SpectralTools.commutator_norm(v1, v2),
            "commutator_v1_v3": SpectralTools.commutator_norm(v1, v3),
            "commutator_v2_v3": SpectralTools.commutator_norm(v2, v3),
            "relation": SpectralTools.operator_norm((v1 - v2.conj().T @ v3) @ inner),
            "adjoint_relation": SpectralTools.operator_norm((v2 - v1.conj().T @ v3) @ inner),
            "v3_isometry_defect": SpectralTools.operator_norm((v3.conj().T @ v3 - identity) @ inner),
            "commutator_f1_f2": SpectralTools.commutator_norm(f1, f2),
            "self_commutator_gap": SpectralTools.operator_norm(
                SpectralTools.commutator(f1, f1.conj().T) - SpectralTools.commutator(f2, f2.conj().T)
            ),
        }

        dc = model.compressed_defect()
        a = v1[model.level(0), model.level(0)]
        b = v2[model.level(0), model.level(0)]
        residuals["third_identity"] = SpectralTools.operator_norm(
            f1.conj().T @ dc @ a + f2 @ f2.conj().T @ dc - f2.conj().T @ dc @ b - f1 @ f1.conj().T @ dc
        )
        return residuals

    @classmethod
    def recover_fundamental(cls, model: DilationModel, triple: OperatorTriple) -> RecoveredFundamental:
        """
        Read F1 and F2 off the first defect level of V1 and V2, check the blocks have the displayed shape,
        and compare D_P F D_P with the direct solution of the fundamental equations.

        :return: The recovered operators and residuals.
        """
        if triple.size != model.h_dim:
            raise BadShape(f"The triple has size {triple.size} but the model has H_dim {model.h_dim}")
        dc = model.compressed_defect()
        first = model.level(1)
        f1 = model.v1[first, first]
        f2 = model.v2[first, first]

        expected = cls._operators(triple.matrices(), dc, f1, f2, model.depth)
        mismatch = max(
            SpectralTools.operator_norm(actual - rebuilt)
            for actual, rebuilt in zip((model.v1, model.v2, model.v3), expected)
        )
        structure_bound = cls.STRUCTURE_TOL * triple.scale
        if mismatch > structure_bound:
            raise BlockStructureMismatch(
                f"The model blocks deviate from the dilation shape by {mismatch:.3e}",
                residual=mismatch,
                tolerance=structure_bound,
            )

        a, b, p = triple.matrices()
        residual_a = SpectralTools.operator_norm(dc @ a - (f1 @ dc + f2.conj().T @ dc @ p))
        residual_b = SpectralTools.operator_norm(dc @ b - (f2 @ dc + f1.conj().T @ dc @ p))

        pair = TetrablockContraction.solve_fundamental_pair(triple)
        agreement = 0.0
        if model.defect_rank or pair.rank:
            agreement = max(
                SpectralTools.operator_norm(dc.conj().T @ f1 @ dc - pair.defect.embed(pair.f1)),
                SpectralTools.operator_norm(dc.conj().T @ f2 @ dc - pair.defect.embed(pair.f2)),
            )
        agreement_bound = cls.AGREEMENT_TOL * triple.scale
        if agreement > agreement_bound:
            raise BlockStructureMismatch(
                f"The model blocks disagree with the fundamental pair by {agreement:.3e}",
                residual=agreement,
                tolerance=agreement_bound,
            )
        return RecoveredFundamental(
            f1=f1, f2=f2, residual_a=residual_a, residual_b=residual_b, solver_agreement=agreement
        )

    @classmethod
    def check_minimality(cls, model: DilationModel) -> int:
        """
        :return: dim K minus the rank of [E_H, V3 E_H, ..., V3^depth E_H]; 0 when the span reaches every level.
        """
        columns = [np.eye(model.dim, dtype=complex)[:, : model.h_dim]]
        for _ in range(model.depth):
            columns.append(model.v3 @ columns[-1])
        krylov = np.hstack(columns)
        if krylov.size == 0:
            return model.dim
        singular_values = svdvals(krylov)
        rank = int(np.sum(singular_values > cls.KRYLOV_TOL * max(1.0, float(singular_values[0]))))
        return model.dim - rank

    @staticmethod
    def e1_numerical_radius(model: DilationModel) -> Tuple[float, float]:
        """
        :return: (w(E1) for the defect block E1 of V1, max over unimodular z of w(F1 + z F2*))
        """
        defect_block = model.v1[model.h_dim:, model.h_dim:]
        sweep, _ = SpectralTools.pencil_numerical_radius(model.f1, model.f2.conj().T)
        return SpectralTools.numerical_radius(defect_block), sweep
