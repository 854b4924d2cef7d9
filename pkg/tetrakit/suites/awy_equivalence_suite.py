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

from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.domains.tetrablock_sampler import SampleMode
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.sampled_point_suite import SampledPointSuite

logger = logging.getLogger(__name__)


class AwyEquivalenceSuite(SampledPointSuite):
    """
    All closed-form membership criteria agree on sampled points outside the band around zero,
    and each sampling mode lands where it should: interior and near-boundary points in the closed
    tetrablock, boundary points on bE, exterior points outside.
    """

    name: str = "awy-equiv"

    def run_case(self, index: int, seed: int) -> CaseOutcome:
        x = self.point(index)
        mode = self.MODES[index % len(self.MODES)]

        # Raises InternalInconsistency on a clear disagreement, which fails the case.
        self.tetrablock.membership(x, Tetrablock.CLOSED_FORM, self.tol)
        margins: Dict[str, float] = {
            name: getattr(Tetrablock, f"margin_{name}")(x)[0] for name in Tetrablock.CLOSED_FORM
        }
        highest = max(margins.values())
        lowest = min(margins.values())
        disagreement = min(highest, -lowest) if highest > 0.0 > lowest else 0.0

        failures: List[str] = []
        if disagreement > self.BAND:
            failures.append("criteria disagree")
        if mode in (SampleMode.INTERIOR, SampleMode.NEAR_BOUNDARY) and lowest < -self.BAND:
            failures.append(f"{mode.value} point outside the closed tetrablock")
        if mode == SampleMode.EXTERIOR and highest > self.BAND:
            failures.append("exterior point inside the closed tetrablock")
        deviation = Tetrablock.boundary_deviation(x)
        if mode == SampleMode.BOUNDARY and deviation > self.tol:
            failures.append("boundary point off bE")

        quantities = {"disagreement": disagreement}
        if mode == SampleMode.BOUNDARY:
            quantities["boundary_deviation"] = deviation
        witness = None
        if failures:
            witness = {
                "mode": mode.value,
                "point": x.to_dict(),
                "margins": {name: MatrixCodec.encode_float(value) for name, value in margins.items()},
                "failures": failures,
            }
        return CaseOutcome(index=index, passed=not failures, quantities=quantities, witness=witness)
