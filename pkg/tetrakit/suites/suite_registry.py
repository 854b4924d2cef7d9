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

from typing import Dict
from typing import List
from typing import Optional
from typing import Type

from tetrakit.errors import TetrakitError
from tetrakit.suites.awy_equivalence_suite import AwyEquivalenceSuite
from tetrakit.suites.chain_suite import ChainSuite
from tetrakit.suites.classify_suite import ClassifySuite
from tetrakit.suites.dilation_suite import DilationSuite
from tetrakit.suites.fundamental_suite import FundamentalSuite
from tetrakit.suites.neat_slice_suite import NeatSliceSuite
from tetrakit.suites.property_suite import PropertySuite
from tetrakit.tetra.battery_config import BatteryConfig


class SuiteRegistry:
    """
    Maps suite names accepted on the command line to their classes.
    """

    SUITES: Dict[str, Type[PropertySuite]] = {
        suite.name: suite
        for suite in (
            AwyEquivalenceSuite,
            NeatSliceSuite,
            FundamentalSuite,
            ChainSuite,
            DilationSuite,
            ClassifySuite,
        )
    }

    @classmethod
    def names(cls) -> List[str]:
        """
        :return: The registered suite names, in registration order.
        """
        return list(cls.SUITES)

    @classmethod
    def create(cls, name: str, tol: float = 1e-9, config: Optional[BatteryConfig] = None) -> PropertySuite:
        """
        :param name: A registered suite name.
        :param tol: Decision tolerance of the suite.
        :param config: Spectral set battery settings.
        :return: A fresh suite instance.
        """
        suite = cls.SUITES.get(name)
        if suite is None:
            raise TetrakitError(f"Unknown suite '{name}', expected one of {cls.names()}")
        return suite(tol=tol, config=config)
