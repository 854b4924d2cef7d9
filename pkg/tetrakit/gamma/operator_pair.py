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
from tetrakit.errors import NotCommuting
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.linalg.spectral_tools import SpectralTools


@dataclass(frozen=True, eq=False)
class OperatorPair:
    """
    A commuting pair (S, P) of square matrices of the same size.
    """

    s: np.ndarray
    p: np.ndarray
    commutation_residual: float
    tol: float

    @property
    def size(self) -> int:
        """
        :return: The dimension of the space the pair acts on.
        """
        return int(self.s.shape[0])

    @classmethod
    def of(cls, s: Any, p: Any, tol: float = 1e-8) -> "OperatorPair":
        """
        :param s: The first matrix.
        :param p: The second matrix.
        :param tol: Relative commutation tolerance, ||SP - PS|| <= tol (1 + ||S|| ||P||).
        :return: The validated pair.
        """
        s = SpectralTools.as_matrix(s, square=True)
        p = SpectralTools.as_matrix(p, square=True)
        if s.shape != p.shape:
            raise BadShape(f"S and P must have the same shape, got {s.shape} and {p.shape}")
        residual = SpectralTools.commutator_norm(s, p)
        bound = tol * (1.0 + SpectralTools.operator_norm(s) * SpectralTools.operator_norm(p))
        if residual > bound:
            raise NotCommuting(f"||SP - PS|| = {residual:.3e} exceeds {bound:.3e}", residual=residual, tolerance=bound)
        return cls(s=s, p=p, commutation_residual=residual, tol=tol)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Pair JSON {"S", "P"}.
        """
        return {"S": MatrixCodec.encode_matrix(self.s), "P": MatrixCodec.encode_matrix(self.p)}

    @classmethod
    def from_dict(cls, document: Any, tol: float = 1e-8) -> "OperatorPair":
        """
        :param document: Parsed pair JSON.
        :param tol: Relative commutation tolerance.
        :return: The validated pair.
        """
        if not isinstance(document, dict) or "S" not in document or "P" not in document:
            raise BadShape("Pair JSON must be an object with 'S' and 'P'")
        return cls.of(MatrixCodec.decode_matrix(document["S"]), MatrixCodec.decode_matrix(document["P"]), tol)
