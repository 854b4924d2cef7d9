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
from typing import Optional

from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.property_suite import PropertySuite
from tetrakit.tetra.battery_config import BatteryConfig
from tetrakit.tetra.implication_chain import ImplicationChain
from tetrakit.tetra.triple_families import TripleFamilies

logger = logging.getLogger(__name__)


class ChainSuite(PropertySuite):
    """
    The one-way implication chain on certified triples (even cases) and commuting non-contractions
    (odd cases). A non-contraction must never be certified by the spectral set stage.
    """

    name: str = "chain"

    def __init__(self, tol: float = 1e-9, config: Optional[BatteryConfig] = None):
        super().__init__(tol, config)
        self.chain: ImplicationChain = ImplicationChain(self.config, tol=tol)

    def run_case(self, index: int, seed: int) -> CaseOutcome:
        certified = index % 2 == 0
        if certified:
            triple = TripleFamilies.certified(index // 2, seed)
        else:
            triple = TripleFamilies.noncontraction(index // 2, seed)
        report = self.chain.evaluate(triple)

        spurious = not certified and report.stage(ImplicationChain.SPECTRAL_SET).clear_pass
        passed = report.consistent and not spurious
        witness = None
        if not passed:
            witness = {
                "family": "certified" if certified else "noncontraction",
                "triple": triple.to_dict(),
                "chain": report.to_dict(),
            }
        quantities = {
            "violations": float(len(report.violations)),
            "spurious_certificates": float(spurious),
        }
        if certified:
            quantities["certified_rho_margin"] = report.stage(ImplicationChain.RHO).margin
        logger.debug("chain case %d: %d violations", index, len(report.violations))
        return CaseOutcome(index=index, passed=passed, quantities=quantities, witness=witness)
