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
from abc import ABC
from abc import abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import List
from typing import Optional

from tetrakit.errors import TetrakitError
from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.suite_result import SuiteResult
from tetrakit.tetra.battery_config import BatteryConfig

logger = logging.getLogger(__name__)


class PropertySuite(ABC):
    """
    Abstract base class of the property batteries run by the suite command.

    Every case is a pure function of (index, seed), so cases may run on a pool of threads
    while the outcomes are still collected in case order.
    """

    name: str = "suite"

    def __init__(self, tol: float = 1e-9, config: Optional[BatteryConfig] = None):
        """
        Constructor.

        :param tol: Decision tolerance handed to the membership and battery tests.
        :param config: Spectral set battery settings for the suites that run the battery.
        """
        self.tol: float = tol
        self.config: BatteryConfig = config or BatteryConfig()

    @abstractmethod
    def run_case(self, index: int, seed: int) -> CaseOutcome:
        """
        Run one case.

        :param index: Case index, which selects the generated input.
        :param seed: Root seed of the run.
        :return: The outcome of the case.
        """
        raise NotImplementedError

    def prepare(self, count: int, seed: int):
        """
        Hook for work shared by all cases, called once before they run.
        """

    def safe_case(self, index: int, seed: int) -> CaseOutcome:
        """
        :return: The outcome of run_case, or a failed outcome carrying the error when the case raises.
        """
        try:
            return self.run_case(index, seed)
        except TetrakitError as exception:
            logger.debug("case %d of %s raised %s", index, self.name, exception)
            return CaseOutcome(index=index, passed=False, witness={"error": exception.to_dict()})

    def run(self, count: int, seed: int = 0, threads: int = 0) -> SuiteResult:
        """
        :param count: Number of cases, at least 1.
        :param seed: Root seed.
        :param threads: Worker threads; 0 runs the cases serially.
        :return: The summary of all cases.
        """
        if count < 1:
            raise TetrakitError(f"Suite case count must be at least 1, got {count}")
        if threads < 0:
            raise TetrakitError(f"Thread count must not be negative, got {threads}")

        logger.info("running suite %s: %d cases, seed %d, %d threads", self.name, count, seed, threads)
        self.prepare(count, seed)
        indices = range(count)
        outcomes: List[CaseOutcome]
        if threads == 0:
            outcomes = [self.safe_case(index, seed) for index in indices]
        else:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                outcomes = list(executor.map(lambda index: self.safe_case(index, seed), indices))

        result = SuiteResult.collect(self.name, seed, outcomes)
        logger.info("suite %s finished: %d passed, %d failed", self.name, result.passed, result.failed)
        return result
