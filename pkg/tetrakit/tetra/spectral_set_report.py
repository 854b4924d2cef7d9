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

from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.verdict import Verdict


@dataclass(frozen=True)
class SpectralSetReport:
    """
    Outcome of the spectral set battery for a commuting triple.

    Stages run in a fixed order: joint spectrum containment, rho positivity on the z-grid,
    polynomial von Neumann sampling. A Refuted report always carries the failing witness
    of the first stage that refuted.
    """

    verdict: Verdict
    spectrum_in_e: bool
    rho12_min_eig: float
    rho12_min_z: complex
    vn_worst_ratio: float
    failing_witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Report JSON.
        """
        description: Dict[str, Any] = {
            "verdict": self.verdict.value,
            "spectrum_in_e": bool(self.spectrum_in_e),
            "rho12_min_eig": MatrixCodec.encode_float(self.rho12_min_eig),
            "rho12_min_z": MatrixCodec.encode_complex(self.rho12_min_z),
            "vn_worst_ratio": MatrixCodec.encode_float(self.vn_worst_ratio),
        }
        if self.failing_witness is not None:
            description["failing_witness"] = self.failing_witness
        return description
