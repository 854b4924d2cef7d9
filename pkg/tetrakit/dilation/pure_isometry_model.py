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

from tetrakit.dilation.isometry_model_spec import IsometryModelSpec
from tetrakit.dilation.schaffer_dilation import SchafferDilation
from tetrakit.errors import SpecInvariantViolated
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.tetra.operator_triple import OperatorTriple

logger = logging.getLogger(__name__)


class PureIsometryModel:
    """
    Truncated multiplication operators by phi1, phi2 and z on E-valued sequences of length depth.
    """

    @staticmethod
    def check(spec: IsometryModelSpec):
        """
        Raise SpecInvariantViolated unless the symbol is contractive on the circle and the coefficients
        satisfy [tau1, tau2] = 0 and [tau1, tau1*] = [tau2, tau2*].
        """
        sup = spec.symbol_sup()
        if sup > 1.0 + spec.tol:
            raise SpecInvariantViolated(
                f"sup ||tau1 + tau2 z|| = {sup:.6f} exceeds 1", residual=sup - 1.0, tolerance=spec.tol
            )
        scale = 1.0 + SpectralTools.operator_norm(spec.tau1) + SpectralTools.operator_norm(spec.tau2)
        bound = spec.tol * scale * scale
        for name, residual in (
            ("[tau1, tau2]", spec.commutator_residual()),
            ("[tau1, tau1*] - [tau2, tau2*]", spec.self_commutator_gap()),
        ):
            if residual > bound:
                raise SpecInvariantViolated(
                    f"{name} has norm {residual:.3e} above {bound:.3e}", residual=residual, tolerance=bound
                )

    @classmethod
    def build(cls, spec: IsometryModelSpec) -> OperatorTriple:
        """
        V3 shifts each level to the next, V1 has tau1 on the diagonal and tau2* below it, V2 has tau2 on the
        diagonal and tau1* below it; the outflow of the deepest level is dropped.

        :return: The triple (V1, V2, V3).
        """
        cls.check(spec)
        size = spec.size
        identity = np.eye(size, dtype=complex)
        zero = np.zeros((size, size), dtype=complex)
        v1 = SchafferDilation.block_bidiagonal(spec.tau1, spec.tau2.conj().T, spec.depth)
        v2 = SchafferDilation.block_bidiagonal(spec.tau2, spec.tau1.conj().T, spec.depth)
        v3 = SchafferDilation.block_bidiagonal(zero, identity, spec.depth)
        logger.debug("pure isometry model on %d levels of dimension %d", spec.depth, size)
        return OperatorTriple.of(v1, v2, v3, spec.tol)

    @staticmethod
    def inner_levels(spec: IsometryModelSpec) -> np.ndarray:
        """
        :return: Identity columns spanning every level but the deepest one.
        """
        dim = spec.depth * spec.size
        return np.eye(dim, dtype=complex)[:, : dim - spec.size]
