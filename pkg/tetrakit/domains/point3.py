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
from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Tuple

from tetrakit.errors import BadShape
from tetrakit.linalg.matrix_codec import MatrixCodec


@dataclass(frozen=True)
class Point3:
    """
    A candidate point (x1, x2, x3) of C^3 for tetrablock membership.
    """

    x1: complex
    x2: complex
    x3: complex

    def __post_init__(self):
        for name in ("x1", "x2", "x3"):
            value = complex(getattr(self, name))
            if not cmath.isfinite(value):
                raise BadShape(f"Point coordinate {name} is not finite")
            object.__setattr__(self, name, value)

    def as_tuple(self) -> Tuple[complex, complex, complex]:
        """
        :return: (x1, x2, x3)
        """
        return self.x1, self.x2, self.x3

    def swapped(self) -> "Point3":
        """
        :return: (x2, x1, x3), the point the primed criteria look at.
        """
        return Point3(self.x2, self.x1, self.x3)

    def scaled(self, factor: float) -> "Point3":
        """
        :return: (r x1, r x2, r^2 x3), the image of the point under A -> rA.
        """
        return Point3(factor * self.x1, factor * self.x2, factor * factor * self.x3)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Point JSON {"x": [{"re", "im"} x 3]}
        """
        return {"x": [MatrixCodec.encode_complex(value) for value in self.as_tuple()]}

    @classmethod
    def from_dict(cls, document: Any) -> "Point3":
        """
        :param document: Parsed point JSON.
        :return: The point.
        """
        if not isinstance(document, dict) or not isinstance(document.get("x"), list):
            raise BadShape("Point JSON must be an object with an 'x' list")
        coordinates = document["x"]
        if len(coordinates) != 3:
            raise BadShape(f"A tetrablock point has 3 coordinates, got {len(coordinates)}")
        return cls(*(MatrixCodec.decode_complex(value) for value in coordinates))
