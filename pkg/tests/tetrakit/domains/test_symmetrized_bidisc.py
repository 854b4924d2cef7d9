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

import cmath
from unittest import TestCase

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
from parameterized import parameterized

from tetrakit.domains.point2 import Point2
from tetrakit.domains.symmetrized_bidisc import SymmetrizedBidisc
from tetrakit.errors import BadShape

DISC = st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False)
ANGLES = st.floats(min_value=0.0, max_value=6.283185307179586, allow_nan=False)


class TestSymmetrizedBidisc(TestCase):
    """
    Unit tests for SymmetrizedBidisc.
    """

    @parameterized.expand(
        [
            ("origin", 0.0, 0.0, True, True, 1.0),
            ("symmetrized_unimodular", 2.0, 1.0, False, True, 0.0),
            ("interior", 0.0, -0.25, True, True, 0.9375),
            ("outside", 2.5, 0.0, False, False, -1.5),
        ]
    )
    def test_membership(self, _name, s, p, in_open, in_closed, margin):
        """
        Open and closed membership with the margin of the single criterion.
        """
        verdict = SymmetrizedBidisc.membership(Point2(s, p))
        self.assertEqual(in_open, verdict.in_open)
        self.assertEqual(in_closed, verdict.in_closed)
        self.assertAlmostEqual(margin, verdict.min_margin, places=12)
        self.assertEqual([SymmetrizedBidisc.CRITERION], list(verdict.per_criterion))

    def test_boundary(self):
        """
        bGamma needs |p| = 1 on top of closed membership.
        """
        self.assertTrue(SymmetrizedBidisc.boundary(SymmetrizedBidisc.symmetrize(1.0, 1j)))
        on_boundary, margin = SymmetrizedBidisc.boundary_with_margin(Point2(0.0, -0.25))
        self.assertFalse(on_boundary)
        self.assertAlmostEqual(-0.75, margin, places=12)
        self.assertFalse(SymmetrizedBidisc.boundary(Point2(3.0, 1.0)))

    def test_point_json(self):
        """
        Points read {"x": [s, p]} and refuse other lengths.
        """
        point = Point2.from_dict({"x": [{"re": 1, "im": 2}, 0.5]})
        self.assertEqual(Point2(1.0 + 2.0j, 0.5), point)
        self.assertEqual(point, Point2.from_dict(point.to_dict()))
        with self.assertRaises(BadShape):
            Point2.from_dict({"x": [0, 0, 0]})
        with self.assertRaises(BadShape):
            Point2(float("nan"), 0.0)

    @settings(deadline=None, max_examples=50)
    @given(DISC, DISC)
    def test_symmetrization_lands_in_gamma(self, z1, z2):
        """
        (z1 + z2, z1 z2) is in Gamma for z1, z2 in the closed disc.
        """
        self.assertTrue(SymmetrizedBidisc.membership(SymmetrizedBidisc.symmetrize(z1, z2)).in_closed)

    @settings(deadline=None, max_examples=50)
    @given(ANGLES, ANGLES)
    def test_unimodular_symmetrization_on_boundary(self, first, second):
        """
        (z1 + z2, z1 z2) is in bGamma for unimodular z1, z2.
        """
        z1 = cmath.exp(1j * first)
        z2 = cmath.exp(1j * second)
        self.assertTrue(SymmetrizedBidisc.boundary(SymmetrizedBidisc.symmetrize(z1, z2)))
