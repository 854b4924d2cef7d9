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

import numpy as np

from tetrakit.linalg.matrix_codec import MatrixCodec


@dataclass(frozen=True)
class CriterionResult:
    """
    Outcome of one membership criterion.

    The margin is the right hand side minus the left hand side of the defining inequality,
    positive strictly inside.
    """

    pass_open: bool
    pass_closed: bool
    margin: float

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-friendly dictionary.
        """
        return {
            "pass_open": bool(self.pass_open),
            "pass_closed": bool(self.pass_closed),
            "margin": MatrixCodec.encode_float(self.margin),
        }


@dataclass(frozen=True, eq=False)
class MembershipVerdict:
    """
    Aggregated open/closed membership verdict together with every evaluated criterion.
    """

    in_open: bool
    in_closed: bool
    per_criterion: Dict[str, CriterionResult]
    witness: Optional[Dict[str, Any]] = field(default=None)

    @property
    def min_margin(self) -> float:
        """
        :return: The smallest margin over the evaluated criteria.
        """
        if not self.per_criterion:
            return float("nan")
        return min(result.margin for result in self.per_criterion.values())

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Verdict JSON mirroring the fields of this class.
        """
        description: Dict[str, Any] = {
            "in_open": bool(self.in_open),
            "in_closed": bool(self.in_closed),
            "per_criterion": {name: result.to_dict() for name, result in sorted(self.per_criterion.items())},
        }
        if self.witness is not None:
            description["witness"] = self._encode_witness(self.witness)
        return description

    @staticmethod
    def _encode_witness(witness: Dict[str, Any]) -> Dict[str, Any]:
        encoded: Dict[str, Any] = {}
        for name, value in sorted(witness.items()):
            if isinstance(value, np.ndarray):
                encoded[name] = MatrixCodec.encode_matrix(value)
            elif isinstance(value, complex):
                encoded[name] = MatrixCodec.encode_complex(value)
            else:
                encoded[name] = value
        return encoded
