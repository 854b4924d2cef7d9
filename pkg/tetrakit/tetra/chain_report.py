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

from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import List
from typing import Tuple

from tetrakit.tetra.chain_stage import ChainStage


@dataclass(frozen=True)
class ChainReport:
    """
    The four stages of the chain, spectral set -> rho positivity -> Gamma slices -> fundamental pair,
    and the ordered stage pairs (earlier, later) where the earlier one clearly holds and the later
    one clearly fails.
    """

    stages: Tuple[ChainStage, ...]
    violations: Tuple[Tuple[str, str], ...]

    @property
    def consistent(self) -> bool:
        """
        :return: True when no implication is violated.
        """
        return not self.violations

    def stage(self, name: str) -> ChainStage:
        """
        :return: The stage called name.
        """
        for stage in self.stages:
            if stage.name == name:
                return stage
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Chain JSON.
        """
        violations: List[Dict[str, str]] = [{"from": earlier, "to": later} for earlier, later in self.violations]
        return {
            "stages": [stage.to_dict() for stage in self.stages],
            "violations": violations,
        }
