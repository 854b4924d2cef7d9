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

from tetrakit.domains.point3 import Point3
from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.sampled_point_suite import SampledPointSuite

logger = logging.getLogger(__name__)


class NeatSliceSuite(SampledPointSuite):
    """
    Round trip between the tetrablock and its circle of slices: x is in the closed tetrablock iff every
    slice (x1 + z x2, z x3) over the grid is in Gamma, x is in bE iff every slice is in bGamma, and inside
    the closed tetrablock x1 = beta1 + conj(beta2) x3, x2 = beta2 + conj(beta1) x3 with |beta1| + |beta2| <= 1.
    """

    name: str = "neat"

    SLICES: int = 64
    RECONSTRUCTION_TOL: float = 1e-10
    # Rounding of the numerators of beta, amplified by 1 / (1 - |x3|^2).
    ROUNDING_FLOOR: float = 4e-15
    BETA_SUM_TOL: float = 1e-8

    @staticmethod
    def clear_mismatch(first: float, second: float, band: float) -> bool:
        """
        :return: True when one margin is clearly positive and the other clearly negative.
        """
        return (first > band and second < -band) or (first < -band and second > band)

    def reconstruction(self, x: Point3) -> Dict[str, float]:
        """
        :return: The beta reconstruction residual, its allowance and |beta1| + |beta2|, empty when
                 beta is undefined at x.
        """
        betas = Tetrablock.beta(x)
        if betas is None:
            return {}
        beta1, beta2 = betas
        x1, x2, x3 = x.as_tuple()
        residual = max(
            abs(x1 - (beta1 + beta2.conjugate() * x3)),
            abs(x2 - (beta2 + beta1.conjugate() * x3)),
        )
        allowance = self.RECONSTRUCTION_TOL + self.ROUNDING_FLOOR / (1.0 - abs(x3) ** 2)
        return {"beta_residual": residual, "beta_allowance": allowance, "beta_sum": abs(beta1) + abs(beta2)}

    def run_case(self, index: int, seed: int) -> CaseOutcome:
        x = self.point(index)
        closed_margin = self.tetrablock.closed_margin(x)
        _, slice_margin = Tetrablock.slices_in_gamma(x, self.SLICES, self.tol)
        deviation = Tetrablock.boundary_deviation(x)
        _, slice_boundary_margin = Tetrablock.slices_on_gamma_boundary(x, self.SLICES, self.tol)

        failures: List[str] = []
        if self.clear_mismatch(closed_margin, slice_margin, self.BAND):
            failures.append("closed membership and the slices disagree")
        if (deviation <= self.tol and slice_boundary_margin < -self.BAND) or (
            deviation > self.BAND and slice_boundary_margin >= -self.tol
        ):
            failures.append("bE membership and the boundary slices disagree")

        quantities = {"slice_mismatch": abs(closed_margin - slice_margin) if closed_margin * slice_margin < 0 else 0.0}
        if closed_margin >= -self.tol:
            beta = self.reconstruction(x)
            if beta:
                quantities["beta_residual"] = beta["beta_residual"]
                quantities["beta_sum"] = beta["beta_sum"]
                if beta["beta_residual"] > beta["beta_allowance"]:
                    failures.append("beta reconstruction residual too large")
                if beta["beta_sum"] > 1.0 + self.BETA_SUM_TOL:
                    failures.append("|beta1| + |beta2| exceeds 1")

        witness = None
        if failures:
            witness = {
                "point": x.to_dict(),
                "closed_margin": MatrixCodec.encode_float(closed_margin),
                "slice_margin": MatrixCodec.encode_float(slice_margin),
                "boundary_deviation": MatrixCodec.encode_float(deviation),
                "slice_boundary_margin": MatrixCodec.encode_float(slice_boundary_margin),
                "failures": failures,
            }
        return CaseOutcome(index=index, passed=not failures, quantities=quantities, witness=witness)
