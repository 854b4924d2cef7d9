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

from tetrakit.linalg.matrix_codec import MatrixCodec


@dataclass(frozen=True)
class CaseOutcome:
    """
    The result of one case of a property suite: the named quantities it measured and, on failure,
    a JSON witness that reproduces it.
    """

    index: int
    passed: bool
    quantities: Dict[str, float] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Outcome JSON.
        """
        document: Dict[str, Any] = {
            "index": self.index,
            "passed": bool(self.passed),
            "quantities": {name: MatrixCodec.encode_float(value) for name, value in sorted(self.quantities.items())},
        }
        if self.witness is not None:
            document["witness"] = self.witness
        return document
