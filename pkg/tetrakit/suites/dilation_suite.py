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

from tetrakit.dilation.schaffer_dilation import SchafferDilation
from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.property_suite import PropertySuite
from tetrakit.tetra.tetrablock_contraction import TetrablockContraction
from tetrakit.tetra.triple_families import TripleFamilies

logger = logging.getLogger(__name__)


class DilationSuite(PropertySuite):
    """
    Builds the truncated dilation of every certified triple and checks the moments, the model identities,
    recovery of the fundamental pair from the blocks, minimality, and the numerical radius of the
    defect block of V1.
    """

    name: str = "dilation"

    DEPTH: int = 6
    MAX_DEGREE: int = 5
    MOMENT_TOL: float = 1e-10
    IDENTITY_TOL: float = 1e-8
    RADIUS_TOL: float = 1e-6

    def threshold(self, name: str) -> float:
        """
        :return: The largest admissible value of the quantity called name.
        """
        if name == "moment_residual":
            return self.MOMENT_TOL
        if name == "krylov_deficit":
            return 0.0
        if name.endswith("_excess"):
            return self.RADIUS_TOL
        return self.IDENTITY_TOL

    def run_case(self, index: int, seed: int) -> CaseOutcome:
        triple = TripleFamilies.certified(index, seed)
        pair = TetrablockContraction.solve_fundamental_pair(triple)
        model = SchafferDilation.build(triple, pair, depth=self.DEPTH)

        quantities: Dict[str, float] = {
            "moment_residual": SchafferDilation.verify_moments(model, triple, self.MAX_DEGREE),
        }
        quantities.update(SchafferDilation.verify_model_identities(model))
        recovered = SchafferDilation.recover_fundamental(model, triple)
        quantities["recovery_residual"] = max(recovered.residual_a, recovered.residual_b)
        quantities["recovery_agreement"] = recovered.solver_agreement
        quantities["krylov_deficit"] = float(SchafferDilation.check_minimality(model))
        e1_radius, sweep = SchafferDilation.e1_numerical_radius(model)
        quantities["e1_radius_excess"] = max(e1_radius - 1.0, 0.0)
        quantities["symbol_sweep_excess"] = max(sweep - 1.0, 0.0)

        failures: List[str] = [name for name, value in quantities.items() if value > self.threshold(name)]

        witness = None
        if failures:
            witness = {"triple": triple.to_dict(), "depth": self.DEPTH, "failures": failures}
        return CaseOutcome(index=index, passed=not failures, quantities=quantities, witness=witness)
