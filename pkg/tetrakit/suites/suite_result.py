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
from typing import List
from typing import Sequence
from typing import Tuple

from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.suites.case_outcome import CaseOutcome


@dataclass(frozen=True)
class SuiteResult:
    """
    Summary of a suite run. Quantities whose name ends in "_margin" are better when larger, so their
    worst value is the minimum; every other quantity is a residual and its worst value is the maximum.
    """

    suite: str
    count: int
    seed: int
    passed: int
    failed: int
    worst: Dict[str, float]
    witnesses: Tuple[Dict[str, Any], ...]

    MAX_WITNESSES = 5
    MARGIN_SUFFIX = "_margin"

    @property
    def ok(self) -> bool:
        """
        :return: True when every case passed.
        """
        return self.failed == 0

    @classmethod
    def worst_of(cls, name: str, first: float, second: float) -> float:
        """
        :return: The worse of two values of the quantity called name.
        """
        if name.endswith(cls.MARGIN_SUFFIX):
            return min(first, second)
        return max(first, second)

    @classmethod
    def collect(cls, suite: str, seed: int, outcomes: Sequence[CaseOutcome]) -> "SuiteResult":
        """
        :param suite: Name of the suite.
        :param seed: The seed the cases were drawn from.
        :param outcomes: Case outcomes in case order.
        :return: The summary.
        """
        worst: Dict[str, float] = {}
        witnesses: List[Dict[str, Any]] = []
        failed = 0
        for outcome in outcomes:
            for name, value in outcome.quantities.items():
                worst[name] = cls.worst_of(name, worst[name], value) if name in worst else value
            if not outcome.passed:
                failed += 1
                if len(witnesses) < cls.MAX_WITNESSES:
                    witnesses.append(outcome.to_dict())
        return SuiteResult(
            suite=suite,
            count=len(outcomes),
            seed=seed,
            passed=len(outcomes) - failed,
            failed=failed,
            worst=worst,
            witnesses=tuple(witnesses),
        )

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Summary JSON.
        """
        return {
            "suite": self.suite,
            "count": self.count,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "worst": {name: MatrixCodec.encode_float(value) for name, value in sorted(self.worst.items())},
            "witnesses": list(self.witnesses),
        }
