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


@dataclass(frozen=True, eq=False)
class RecoveredFundamental:
    """
    F1 and F2 read back from the blocks of a dilation, with the residuals of
    D_P A = F1 D_P + F2* D_P P, D_P B = F2 D_P + F1* D_P P, and the distance of D_P F D_P
    to the operators the direct solver produced.
    """

    f1: np.ndarray
    f2: np.ndarray
    residual_a: float
    residual_b: float
    solver_agreement: float

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: JSON with both operators and the residuals.
        """
        return {
            "F1": MatrixCodec.encode_matrix(self.f1),
            "F2": MatrixCodec.encode_matrix(self.f2),
            "residual_a": MatrixCodec.encode_float(self.residual_a),
            "residual_b": MatrixCodec.encode_float(self.residual_b),
            "solver_agreement": MatrixCodec.encode_float(self.solver_agreement),
        }
