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

from parameterized import parameterized

from tetrakit.domains.point3 import Point3
from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.domains.tetrablock_sampler import SampleMode
from tetrakit.domains.tetrablock_sampler import TetrablockSampler
from tetrakit.errors import BadShape
from tetrakit.errors import TetrakitError


class TestTetrablockSampler(TestCase):
    """
    Unit tests for TetrablockSampler and Point3.
    """

    @parameterized.expand([(mode.value, mode) for mode in SampleMode])
    def test_reproducible(self, _name, mode):
        """
        The same seed gives the same points, and a longer sample extends a shorter one.
        """
        first = TetrablockSampler.sample(20, mode, seed=11)
        self.assertEqual(first, TetrablockSampler.sample(20, mode, seed=11))
        self.assertEqual(first[:5], TetrablockSampler.sample(5, mode, seed=11))
        self.assertNotEqual(first, TetrablockSampler.sample(20, mode, seed=12))

    def test_across_chunks(self):
        """
        Samples longer than one chunk keep the prefix of shorter ones.
        """
        count = TetrablockSampler.CHUNK + 10
        points = TetrablockSampler.sample(count, SampleMode.INTERIOR, seed=3)
        self.assertEqual(count, len(points))
        self.assertEqual(points[:10], TetrablockSampler.sample(10, SampleMode.INTERIOR, seed=3))

    def test_interior(self):
        """
        Interior samples are inside every closed form.
        """
        tetrablock = Tetrablock()
        for point in TetrablockSampler.sample(50, SampleMode.INTERIOR, seed=5):
            self.assertTrue(tetrablock.membership(point, Tetrablock.CLOSED_FORM).in_open)

    def test_boundary(self):
        """
        Boundary samples are pi of unitaries, hence on bE.
        """
        for point in TetrablockSampler.sample(50, SampleMode.BOUNDARY, seed=5):
            self.assertLess(Tetrablock.boundary_deviation(point), 1e-10)

    def test_exterior(self):
        """
        Exterior samples clear the tetrablock by the exterior margin.
        """
        tetrablock = Tetrablock()
        for point in TetrablockSampler.sample(50, SampleMode.EXTERIOR, seed=5):
            self.assertLess(Tetrablock.margin_awy5(point)[0], TetrablockSampler.EXTERIOR_MARGIN)
            self.assertLess(tetrablock.closed_margin(point), 0.0)

    def test_near_boundary(self):
        """
        Near-boundary samples stay in the closed tetrablock.
        """
        tetrablock = Tetrablock()
        for point in TetrablockSampler.sample(50, SampleMode.NEAR_BOUNDARY, seed=5):
            self.assertGreaterEqual(tetrablock.closed_margin(point), -1e-9)

    def test_count_is_checked(self):
        """
        At least one point must be requested.
        """
        with self.assertRaises(TetrakitError):
            TetrablockSampler.sample(0)

    def test_point_helpers(self):
        """
        swapped, scaled and the JSON form of Point3.
        """
        point = Point3(1.0, 2.0j, 3.0)
        self.assertEqual(Point3(2.0j, 1.0, 3.0), point.swapped())
        self.assertEqual(Point3(2.0, 4.0j, 12.0), point.scaled(2.0))
        self.assertEqual(point, Point3.from_dict(point.to_dict()))
        with self.assertRaises(BadShape):
            Point3.from_dict({"x": [0, 0]})
        with self.assertRaises(BadShape):
            Point3.from_dict([0, 0, 0])
        with self.assertRaises(BadShape):
            Point3(0.0, float("inf"), 0.0)
