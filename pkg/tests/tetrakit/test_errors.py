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

from tetrakit.errors import BadShape
from tetrakit.errors import ConditionsNotMet
from tetrakit.errors import TetrakitError


class TestErrors(TestCase):
    """
    Unit tests for the error hierarchy and its JSON form.
    """

    def test_to_dict_with_residual(self):
        """
        Residual and tolerance are carried into the JSON description.
        """
        error = BadShape("wrong shape", residual=1.5, tolerance=0.25)
        self.assertEqual(
            {"error": "BadShape", "message": "wrong shape", "residual": 1.5, "tolerance": 0.25}, error.to_dict()
        )

    def test_to_dict_without_residual(self):
        """
        Absent residuals are left out.
        """
        self.assertEqual({"error": "TetrakitError", "message": "plain"}, TetrakitError("plain").to_dict())

    def test_value_error_family(self):
        """
        Every toolkit error is a ValueError, so the front end catches them in one place.
        """
        self.assertIsInstance(BadShape("x"), TetrakitError)
        self.assertIsInstance(TetrakitError("x"), ValueError)

    def test_conditions_not_met(self):
        """
        The residual of ConditionsNotMet is the larger of its two residuals, and both are serialized.
        """
        error = ConditionsNotMet("conditions", commutator_residual=0.5, self_commutator_residual=0.75, tolerance=1e-8)
        self.assertEqual(0.75, error.residual)
        description = error.to_dict()
        self.assertEqual("ConditionsNotMet", description["error"])
        self.assertEqual(0.5, description["commutator_residual"])
        self.assertEqual(0.75, description["self_commutator_residual"])
        self.assertEqual(1e-8, description["tolerance"])
