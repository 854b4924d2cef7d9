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
from typing import Tuple

import numpy as np

from tetrakit.errors import BadShape
from tetrakit.errors import NotCommuting
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.linalg.spectral_tools import SpectralTools


@dataclass(frozen=True, eq=False)
class OperatorTriple:
    """
    A commuting triple (A, B, P) of square matrices of one size, with its pairwise commutator norms.
    """

    a: np.ndarray
    b: np.ndarray
    p: np.ndarray
    residuals: Tuple[float, float, float]
    tol: float

    @property
    def size(self) -> int:
        """
        :return: The dimension of the space the triple acts on.
        """
        return int(self.a.shape[0])

    @property
    def scale(self) -> float:
        """
        :return: (1 + ||A||)(1 + ||B||)(1 + ||P||), the magnitude residuals are measured against.
        """
        return (
            (1.0 + SpectralTools.operator_norm(self.a))
            * (1.0 + SpectralTools.operator_norm(self.b))
            * (1.0 + SpectralTools.operator_norm(self.p))
        )

    def matrices(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        :return: (A, B, P)
        """
        return self.a, self.b, self.p

    @classmethod
    def of(cls, a: Any, b: Any, p: Any, tol: float = 1e-8) -> "OperatorTriple":
        """
        :param tol: Relative commutation tolerance, ||XY - YX|| <= tol (1 + ||X|| ||Y||) for each pair.
        :return: The validated triple.
        """
        a = SpectralTools.as_matrix(a, square=True)
        b = SpectralTools.as_matrix(b, square=True)
        p = SpectralTools.as_matrix(p, square=True)
        if not a.shape == b.shape == p.shape:
            raise BadShape(f"A, B and P must have one shape, got {a.shape}, {b.shape} and {p.shape}")

        residuals = []
        for name, x, y in (("AB", a, b), ("AP", a, p), ("BP", b, p)):
            residual = SpectralTools.commutator_norm(x, y)
            bound = tol * (1.0 + SpectralTools.operator_norm(x) * SpectralTools.operator_norm(y))
            if residual > bound:
                raise NotCommuting(
                    f"Commutator [{name[0]}, {name[1]}] has norm {residual:.3e} above {bound:.3e}",
                    residual=residual,
                    tolerance=bound,
                )
            residuals.append(residual)
        return cls(a=a, b=b, p=p, residuals=tuple(residuals), tol=tol)

    def adjoint(self) -> "OperatorTriple":
        """
        :return: (A*, B*, P*)
        """
        return OperatorTriple.of(self.a.conj().T, self.b.conj().T, self.p.conj().T, self.tol)

    def compress(self, basis: np.ndarray) -> "OperatorTriple":
        """
        :param basis: Orthonormal columns spanning a jointly invariant subspace.
        :return: The triple compressed to that subspace.
        """
        return OperatorTriple.of(
            basis.conj().T @ self.a @ basis,
            basis.conj().T @ self.b @ basis,
            basis.conj().T @ self.p @ basis,
            self.tol,
        )

    @classmethod
    def scalar(cls, a: complex, b: complex, p: complex) -> "OperatorTriple":
        """
        :return: The 1x1 triple (a, b, p).
        """
        return cls.of([[a]], [[b]], [[p]])

    @classmethod
    def diagonal(cls, entries: Any) -> "OperatorTriple":
        """
        :param entries: A sequence of (a, b, p) tuples.
        :return: The diagonal triple carrying them.
        """
        columns = np.asarray(entries, dtype=complex).reshape(-1, 3)
        return cls.of(np.diag(columns[:, 0]), np.diag(columns[:, 1]), np.diag(columns[:, 2]))

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Triple JSON {"A", "B", "P"}.
        """
        return {
            "A": MatrixCodec.encode_matrix(self.a),
            "B": MatrixCodec.encode_matrix(self.b),
            "P": MatrixCodec.encode_matrix(self.p),
        }

    @classmethod
    def from_dict(cls, document: Any, tol: float = 1e-8) -> "OperatorTriple":
        """
        :param document: Parsed triple JSON.
        :return: The validated triple.
        """
        if not isinstance(document, dict) or any(key not in document for key in ("A", "B", "P")):
            raise BadShape("Triple JSON must be an object with 'A', 'B' and 'P'")
        return cls.of(
            MatrixCodec.decode_matrix(document["A"]),
            MatrixCodec.decode_matrix(document["B"]),
            MatrixCodec.decode_matrix(document["P"]),
            tol,
        )
