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
from dataclasses import replace
from typing import Any
from typing import Dict

import numpy as np

from tetrakit.linalg.defect_data import DefectData
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.linalg.spectral_tools import SpectralTools


@dataclass(frozen=True, eq=False)
class FundamentalPair:
    """
    Fundamental operators F1, F2 of a triple, in the coordinates of defect.basis, solving
    A - B*P = D_P F1 D_P and B - A*P = D_P F2 D_P.
    """

    f1: np.ndarray
    f2: np.ndarray
    defect: DefectData
    residual1: float
    residual2: float
    cross_route_residual: float = 0.0
    w_sweep: float = 0.0
    w_sweep_z: complex = 1.0 + 0.0j

    @property
    def rank(self) -> int:
        """
        :return: The dimension of the defect space.
        """
        return self.defect.rank

    def commutator_residual(self) -> float:
        """
        :return: ||[F1, F2]||
        """
        return SpectralTools.commutator_norm(self.f1, self.f2)

    def self_commutator_residual(self) -> float:
        """
        :return: ||[F1, F1*] - [F2, F2*]||
        """
        first = SpectralTools.commutator(self.f1, self.f1.conj().T)
        second = SpectralTools.commutator(self.f2, self.f2.conj().T)
        return SpectralTools.operator_norm(first - second)

    def conditions_tolerance(self) -> float:
        """
        :return: 1e-8 (1 + ||F1|| + ||F2||)^2
        """
        total = 1.0 + SpectralTools.operator_norm(self.f1) + SpectralTools.operator_norm(self.f2)
        return 1e-8 * total * total

    def swapped(self) -> "FundamentalPair":
        """
        :return: The pair with F1 and F2 exchanged and everything else kept, for mismatch experiments.
        """
        return replace(self, f1=self.f2, f2=self.f1)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: JSON with both operators and the solver diagnostics.
        """
        return {
            "F1": MatrixCodec.encode_matrix(self.f1),
            "F2": MatrixCodec.encode_matrix(self.f2),
            "defect_rank": int(self.rank),
            "residual1": MatrixCodec.encode_float(self.residual1),
            "residual2": MatrixCodec.encode_float(self.residual2),
            "cross_route_residual": MatrixCodec.encode_float(self.cross_route_residual),
            "w_sweep": MatrixCodec.encode_float(self.w_sweep),
            "w_sweep_z": MatrixCodec.encode_complex(self.w_sweep_z),
        }
