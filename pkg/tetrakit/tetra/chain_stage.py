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

from tetrakit.linalg.matrix_codec import MatrixCodec


@dataclass(frozen=True)
class ChainStage:
    """
    One item of the implication chain: whether it holds, by how much, and whether the decision is clear
    of the tolerance band in either direction.
    """

    name: str
    passed: bool
    margin: float
    clear_pass: bool
    clear_fail: bool

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Stage JSON.
        """
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "margin": MatrixCodec.encode_float(self.margin),
            "clear_pass": bool(self.clear_pass),
            "clear_fail": bool(self.clear_fail),
        }
