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

import math
from unittest import TestCase

import numpy as np

from tetrakit.linalg.circle_maximizer import CircleMaximizer


class TestCircleMaximizer(TestCase):
    """
    Unit tests for CircleMaximizer.
    """

    def test_maximize_off_grid(self):
        """
        The refinement finds a maximum that lies between grid angles.
        """
        value, theta = CircleMaximizer(grid=16).maximize(lambda t: np.cos(t - 1.0))
        self.assertAlmostEqual(1.0, value, places=10)
        self.assertAlmostEqual(1.0, theta, places=5)

    def test_minimize(self):
        """
        cos is smallest at pi.
        """
        value, theta = CircleMaximizer().minimize(np.cos)
        self.assertAlmostEqual(-1.0, value, places=10)
        self.assertAlmostEqual(math.pi, theta, places=5)

    def test_nan_values_are_ignored(self):
        """
        NaN values never win.
        """
        value, _ = CircleMaximizer(grid=8, iterations=0).maximize(lambda t: np.where(t > 3.0, np.nan, np.sin(t)))
        self.assertAlmostEqual(1.0, value, places=10)

    def test_grid_floor(self):
        """
        Grids have at least three angles.
        """
        self.assertEqual(3, CircleMaximizer(grid=1).grid)
        self.assertEqual(3, len(CircleMaximizer(grid=0).thetas()))
