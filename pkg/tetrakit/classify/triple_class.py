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
from dataclasses import field
from typing import Any
from typing import Dict
from typing import Optional
from typing import Tuple

from tetrakit.classify.triple_kind import TripleKind
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.verdict import Verdict


@dataclass(frozen=True)
class TripleClass:
    """
    A classification with the residuals it was decided on.

    evidence maps residual names to values, criteria maps the equivalent characterizations
    that were evaluated to their verdicts. verdict carries the battery outcome when kind is
    TETRABLOCK_CONTRACTION.
    """

    kind: TripleKind
    evidence: Dict[str, float] = field(default_factory=dict)
    criteria: Dict[str, bool] = field(default_factory=dict)
    verdict: Optional[Verdict] = None
    notes: Tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        """
        :return: True when every evaluated criterion agrees with the others.
        """
        return len(set(self.criteria.values())) <= 1

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Class JSON {"kind", "evidence", ...}.
        """
        description: Dict[str, Any] = {
            "kind": self.kind.value,
            "evidence": {name: MatrixCodec.encode_float(value) for name, value in sorted(self.evidence.items())},
        }
        if self.criteria:
            description["criteria"] = {name: bool(value) for name, value in sorted(self.criteria.items())}
        if self.verdict is not None:
            description["verdict"] = self.verdict.value
        if self.notes:
            description["notes"] = list(self.notes)
        return description
