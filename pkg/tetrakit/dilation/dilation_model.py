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

import numpy as np

from tetrakit.errors import BadShape
from tetrakit.linalg.matrix_codec import MatrixCodec


@dataclass(frozen=True, eq=False)
class DilationModel:
    """
    A truncated isometric dilation (V1, V2, V3) acting on H + D_P^depth.

    Level 0 is H, of dimension h_dim; levels 1..depth are copies of the defect space, each of dimension
    defect_rank. Every block operator is lower triangular in the levels and moves a vector at most one
    level down; whatever would leave the deepest level is dropped.
    """

    h_dim: int
    defect_rank: int
    depth: int
    v1: np.ndarray
    v2: np.ndarray
    v3: np.ndarray
    f1: np.ndarray
    f2: np.ndarray
    conditions_ok: bool
    commutator_residual: float = 0.0
    self_commutator_residual: float = 0.0

    @property
    def dim(self) -> int:
        """
        :return: h_dim + depth * defect_rank
        """
        return self.h_dim + self.depth * self.defect_rank

    def level(self, k: int) -> slice:
        """
        :return: The index range of level k, level 0 being H.
        """
        if k == 0:
            return slice(0, self.h_dim)
        start = self.h_dim + (k - 1) * self.defect_rank
        return slice(start, start + self.defect_rank)

    def levels_below(self, k: int) -> np.ndarray:
        """
        :param k: At least 1.
        :return: Identity columns spanning levels 0..k-1.
        """
        return np.eye(self.dim, dtype=complex)[:, : self.h_dim + max(k - 1, 0) * self.defect_rank]

    def compressed_defect(self) -> np.ndarray:
        """
        :return: The block of V3 mapping H into level 1, D_P in defect coordinates.
        """
        if self.depth == 0 or self.defect_rank == 0:
            return np.zeros((0, self.h_dim), dtype=complex)
        return self.v3[self.level(1), self.level(0)]

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Model JSON {"H_dim", "defectRank", "depth", "V1", "V2", "V3", "F1", "F2", ...}.
        """
        return {
            "H_dim": int(self.h_dim),
            "defectRank": int(self.defect_rank),
            "depth": int(self.depth),
            "V1": MatrixCodec.encode_matrix(self.v1),
            "V2": MatrixCodec.encode_matrix(self.v2),
            "V3": MatrixCodec.encode_matrix(self.v3),
            "F1": MatrixCodec.encode_matrix(self.f1),
            "F2": MatrixCodec.encode_matrix(self.f2),
            "conditionsOK": bool(self.conditions_ok),
            "commutatorResidual": MatrixCodec.encode_float(self.commutator_residual),
            "selfCommutatorResidual": MatrixCodec.encode_float(self.self_commutator_residual),
        }

    @classmethod
    def from_dict(cls, document: Any) -> "DilationModel":
        """
        :param document: Parsed model JSON.
        :return: The model, with every block shape validated.
        """
        if not isinstance(document, dict):
            raise BadShape("Model JSON must be an object")
        required = ("H_dim", "defectRank", "depth", "V1", "V2", "V3", "F1", "F2")
        missing = [key for key in required if key not in document]
        if missing:
            raise BadShape(f"Model JSON is missing {missing}")

        h_dim = int(document["H_dim"])
        defect_rank = int(document["defectRank"])
        depth = int(document["depth"])
        if min(h_dim, defect_rank, depth) < 0:
            raise BadShape("H_dim, defectRank and depth must not be negative")
        dim = h_dim + depth * defect_rank
        matrices = {}
        for key, size in (("V1", dim), ("V2", dim), ("V3", dim), ("F1", defect_rank), ("F2", defect_rank)):
            matrix = MatrixCodec.decode_matrix(document[key])
            if matrix.shape != (size, size):
                raise BadShape(f"{key} must be {size}x{size}, got {matrix.shape}")
            matrices[key] = matrix

        return cls(
            h_dim=h_dim,
            defect_rank=defect_rank,
            depth=depth,
            v1=matrices["V1"],
            v2=matrices["V2"],
            v3=matrices["V3"],
            f1=matrices["F1"],
            f2=matrices["F2"],
            conditions_ok=bool(document.get("conditionsOK", True)),
            commutator_residual=float(document.get("commutatorResidual") or 0.0),
            self_commutator_residual=float(document.get("selfCommutatorResidual") or 0.0),
        )

    def to_json(self) -> str:
        """
        :return: The model JSON text.
        """
        return MatrixCodec.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "DilationModel":
        """
        :return: The model parsed from JSON text.
        """
        return cls.from_dict(MatrixCodec.loads(text))
