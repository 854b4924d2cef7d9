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
from typing import Optional

import numpy as np

from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.verdict import Verdict


@dataclass(frozen=True, eq=False)
class GammaReport:
    """
    Outcome of the Gamma-contraction test of a pair (S, P).

    min_rho_eig is the smallest eigenvalue of rho(beta S, beta^2 P) found over the circle,
    attained at min_beta. phi is the fundamental operator in defect coordinates, present only
    when the pair was not refuted and the fundamental equation could be solved.
    """

    verdict: Verdict
    min_rho_eig: float
    min_beta: complex
    phi: Optional[np.ndarray] = None
    w_phi: Optional[float] = None
    fundamental_residual: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Report JSON.
        """
        description: Dict[str, Any] = {
            "verdict": self.verdict.value,
            "min_rho_eig": MatrixCodec.encode_float(self.min_rho_eig),
            "min_beta": MatrixCodec.encode_complex(self.min_beta),
        }
        if self.phi is not None:
            description["phi"] = MatrixCodec.encode_matrix(self.phi)
            description["w_phi"] = MatrixCodec.encode_float(self.w_phi)
            description["fundamental_residual"] = MatrixCodec.encode_float(self.fundamental_residual)
        return description
