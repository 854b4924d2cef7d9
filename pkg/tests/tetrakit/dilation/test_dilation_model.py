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

import numpy as np

from tetrakit.dilation.dilation_model import DilationModel
from tetrakit.dilation.schaffer_dilation import SchafferDilation
from tetrakit.errors import BadShape
from tetrakit.tetra.operator_triple import OperatorTriple


class TestDilationModel(TestCase):
    """
    Unit tests for DilationModel.
    """

    def setUp(self):
        self.model = SchafferDilation.build(OperatorTriple.scalar(0.5, 0.25, 0.125), depth=3)

    def test_levels(self):
        """
        Level 0 is H, the others are defect copies.
        """
        self.assertEqual(4, self.model.dim)
        self.assertEqual(slice(0, 1), self.model.level(0))
        self.assertEqual(slice(3, 4), self.model.level(3))
        self.assertEqual((4, 3), self.model.levels_below(3).shape)
        self.assertEqual((1, 1), self.model.compressed_defect().shape)

    def test_json(self):
        """
        Models read back from their JSON text.
        """
        copy = DilationModel.from_json(self.model.to_json())
        self.assertEqual(self.model.dim, copy.dim)
        self.assertTrue(np.allclose(self.model.v1, copy.v1))
        self.assertTrue(copy.conditions_ok)

    def test_wrong_sizes(self):
        """
        Blocks must match H_dim + depth * defectRank.
        """
        document = self.model.to_dict()
        document["V1"] = {"rows": 1, "cols": 1, "re": [[0.0]], "im": [[0.0]]}
        with self.assertRaises(BadShape):
            DilationModel.from_dict(document)
        with self.assertRaises(BadShape):
            DilationModel.from_dict([])
        del document["F2"]
        with self.assertRaises(BadShape):
            DilationModel.from_dict(document)
