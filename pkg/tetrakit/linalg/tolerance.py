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

import numpy as np


@dataclass(frozen=True)
class Tolerance:
    """
    Mixed absolute/relative tolerance shared by every comparison in the toolkit.
    """

    atol: float = 1e-10
    rtol: float = 1e-8

    def close(self, a: complex, b: complex) -> bool:
        """
        :return: True if |a - b| <= atol + rtol * max(|a|, |b|).
        """
        return abs(a - b) <= self.atol + self.rtol * max(abs(a), abs(b))

    def bound(self, scale: float) -> float:
        """
        :param scale: Magnitude of the quantities being compared.
        :return: The admissible absolute deviation at that magnitude.
        """
        return self.atol + self.rtol * abs(scale)

    @staticmethod
    def clamp_for(p: np.ndarray) -> float:
        """
        Default clamp tolerance for the defect operator of p: 1e-10 * (1 + ||p||^2).
        """
        if p.size == 0:
            return 1e-10
        norm = float(np.linalg.norm(p, 2))
        return 1e-10 * (1.0 + norm * norm)


DEFAULT_TOLERANCE = Tolerance()
