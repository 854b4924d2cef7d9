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

import logging
from typing import Dict
from typing import List
from typing import Optional

from tetrakit.domains.point3 import Point3
from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.domains.tetrablock_sampler import SampleMode
from tetrakit.domains.tetrablock_sampler import TetrablockSampler
from tetrakit.suites.property_suite import PropertySuite
from tetrakit.tetra.battery_config import BatteryConfig

logger = logging.getLogger(__name__)


class SampledPointSuite(PropertySuite):
    """
    Base of the suites over sampled points. Case i uses mode MODES[i % 4], so every mode gets
    a quarter of the cases, and each mode draws its points once per run from its own seed.
    """

    MODES: List[SampleMode] = [
        SampleMode.INTERIOR,
        SampleMode.BOUNDARY,
        SampleMode.EXTERIOR,
        SampleMode.NEAR_BOUNDARY,
    ]
    BAND: float = 1e-6

    def __init__(self, tol: float = 1e-9, config: Optional[BatteryConfig] = None):
        super().__init__(tol, config)
        self.tetrablock: Tetrablock = Tetrablock()
        self.points: Dict[SampleMode, List[Point3]] = {}

    def prepare(self, count: int, seed: int):
        modes = len(self.MODES)
        self.points = {}
        for ordinal, mode in enumerate(self.MODES):
            needed = len(range(ordinal, count, modes))
            if needed:
                self.points[mode] = TetrablockSampler.sample(needed, mode, seed * modes + ordinal)

    def point(self, index: int) -> Point3:
        """
        :return: The point of case index.
        """
        modes = len(self.MODES)
        return self.points[self.MODES[index % modes]][index // modes]
