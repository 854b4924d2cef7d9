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

from tetrakit.errors import BadShape
from tetrakit.linalg.matrix_codec import MatrixCodec


@dataclass(frozen=True)
class Point2:
    """
    A candidate point (s, p) of C^2 for symmetrized bidisc membership.
    """

    s: complex
    p: complex

    def __post_init__(self):
        for name in ("s", "p"):
            value = complex(getattr(self, name))
            if not cmath.isfinite(value):
                raise BadShape(f"Point coordinate {name} is not finite")
            object.__setattr__(self, name, value)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Point JSON {"x": [s, p]} with {"re", "im"} entries.
        """
        return {"x": [MatrixCodec.encode_complex(self.s), MatrixCodec.encode_complex(self.p)]}

    @classmethod
    def from_dict(cls, document: Any) -> "Point2":
        """
        :param document: Parsed point JSON.
        :return: The point.
        """
        if not isinstance(document, dict) or not isinstance(document.get("x"), list):
            raise BadShape("Point JSON must be an object with an 'x' list")
        coordinates = document["x"]
        if len(coordinates) != 2:
            raise BadShape(f"A symmetrized bidisc point has 2 coordinates, got {len(coordinates)}")
        return cls(*(MatrixCodec.decode_complex(value) for value in coordinates))
