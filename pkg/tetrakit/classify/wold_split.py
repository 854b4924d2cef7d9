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

import numpy as np

from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.tetra.operator_triple import OperatorTriple


@dataclass(frozen=True, eq=False)
class WoldSplit:
    """
    The splitting H = H_u + H_s of a tetrablock isometry into the part where V3 is unitary and its
    orthogonal complement, with the compressed triples on both.
    """

    unitary_part: OperatorTriple
    shift_part: OperatorTriple
    basis_u: np.ndarray
    basis_s: np.ndarray
    reducing_residual: float

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Split JSON with both parts and their bases.
        """
        return {
            "unitary_part": self.unitary_part.to_dict(),
            "shift_part": self.shift_part.to_dict(),
            "basis_u": MatrixCodec.encode_matrix(self.basis_u),
            "basis_s": MatrixCodec.encode_matrix(self.basis_s),
            "reducing_residual": MatrixCodec.encode_float(self.reducing_residual),
        }
