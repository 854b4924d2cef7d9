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

from unittest import TestCase

from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.suite_result import SuiteResult


class TestSuiteResult(TestCase):
    """
    Unit tests for SuiteResult.
    """

    def test_worst_of(self):
        """
        Margins keep their minimum, residuals their maximum.
        """
        self.assertEqual(0.1, SuiteResult.worst_of("rho_margin", 0.1, 0.5))
        self.assertEqual(0.5, SuiteResult.worst_of("residual", 0.1, 0.5))

    def test_collect(self):
        """
        Failures are counted and at most MAX_WITNESSES witnesses are kept, in case order.
        """
        outcomes = [
            CaseOutcome(
                index=index, passed=index % 2 == 0, quantities={"residual": float(index)}, witness={"i": index}
            )
            for index in range(14)
        ]
        result = SuiteResult.collect("demo", 3, outcomes)
        self.assertEqual(14, result.count)
        self.assertEqual(7, result.passed)
        self.assertEqual(7, result.failed)
        self.assertFalse(result.ok)
        self.assertEqual({"residual": 13.0}, result.worst)
        self.assertEqual(SuiteResult.MAX_WITNESSES, len(result.witnesses))
        self.assertEqual([1, 3, 5, 7, 9], [witness["index"] for witness in result.witnesses])

    def test_to_dict(self):
        """
        Passing runs carry no witnesses.
        """
        result = SuiteResult.collect("demo", 0, [CaseOutcome(index=0, passed=True, quantities={"x_margin": 0.5})])
        self.assertTrue(result.ok)
        self.assertEqual(
            {
                "suite": "demo",
                "count": 1,
                "seed": 0,
                "passed": 1,
                "failed": 0,
                "worst": {"x_margin": 0.5},
                "witnesses": [],
            },
            result.to_dict(),
        )
