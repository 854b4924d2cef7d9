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

from tetrakit.errors import HypothesisFailed
from tetrakit.gamma.gamma_contraction import GammaContraction
from tetrakit.linalg.defect_data import DefectData
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.property_suite import PropertySuite
from tetrakit.tetra.tetrablock_contraction import TetrablockContraction
from tetrakit.tetra.triple_families import TripleFamilies

logger = logging.getLogger(__name__)


class FundamentalSuite(PropertySuite):
    """
    Fundamental equations on the certified family: solver residuals, agreement of the pseudoinverse and
    averaging routes, the numerical radius sweep, the two derived equations, the identity of
    A*A - B*B for commuting F1, F2, the combined equation at unimodular z, uniqueness against the
    least-squares route, and the identity for two Gamma-contractions sharing P.
    """

    name: str = "fundamental"

    RESIDUAL_TOL: float = 1e-8
    W_TOL: float = 1e-6
    REMARK_POINTS = (1.0, -1.0, 1j, -1j)

    def run_case(self, index: int, seed: int) -> CaseOutcome:
        triple = TripleFamilies.certified(index, seed)
        pair = TetrablockContraction.solve_fundamental_pair(triple)

        quantities: Dict[str, float] = {
            "residual": max(pair.residual1, pair.residual2),
            "cross_route": pair.cross_route_residual,
            "w_sweep_excess": max(pair.w_sweep - 1.0, 0.0),
            "twoneweqns": max(TetrablockContraction.check_twoneweqns(triple, pair.defect, pair.f1, pair.f2)),
            "remark": max(
                TetrablockContraction.check_remark_pair(triple, pair, z)
                for z in (*self.REMARK_POINTS, pair.w_sweep_z)
            ),
        }
        try:
            quantities["tandf"] = TetrablockContraction.check_tandf(triple, pair)
        except HypothesisFailed as exception:
            logger.debug("case %d: F1 and F2 do not commute, %s", index, exception)

        slice_pair = TetrablockContraction.slice_pair(triple, 1.0)
        pseudo = GammaContraction.solve_fundamental(slice_pair, pair.defect)
        lstsq = GammaContraction.solve_fundamental_lstsq(slice_pair, pair.defect)
        quantities["uniqueness"] = SpectralTools.operator_norm(pseudo - lstsq) if pair.rank else 0.0

        first, second = TripleFamilies.shared_p_gamma_pairs(index, seed)
        shared = DefectData.of(first.p)
        quantities["newresult"] = GammaContraction.check_newresult(
            first.s,
            second.s,
            shared,
            GammaContraction.solve_fundamental(first, shared),
            GammaContraction.solve_fundamental(second, shared),
        )

        failures: List[str] = [
            name
            for name, value in quantities.items()
            if value > (self.W_TOL if name == "w_sweep_excess" else self.RESIDUAL_TOL)
        ]
        witness = None
        if failures:
            witness = {"triple": triple.to_dict(), "pair": pair.to_dict(), "failures": failures}
        return CaseOutcome(index=index, passed=not failures, quantities=quantities, witness=witness)
