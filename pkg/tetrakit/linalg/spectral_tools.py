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

import logging
from typing import Any
from typing import Tuple

import numpy as np
from scipy.optimize import minimize

from tetrakit.errors import BadShape
from tetrakit.linalg.circle_maximizer import CircleMaximizer

logger = logging.getLogger(__name__)


class SpectralTools:
    """
    Norms, radii and commutators of dense complex matrices.

    Matrices are plain numpy arrays of dtype complex128, treated as immutable.
    """

    @staticmethod
    def as_matrix(value: Any, square: bool = False) -> np.ndarray:
        """
        Validate and convert a value into a complex matrix.

        :param value: Anything numpy can turn into a 2-d array.
        :param square: If True, also require a square shape.
        :return: A complex128 2-d array.
        """
        matrix = np.asarray(value, dtype=complex)
        if matrix.ndim == 0:
            matrix = matrix.reshape(1, 1)
        if matrix.ndim != 2:
            raise BadShape(f"Expected a 2-d matrix, got {matrix.ndim} dimensions")
        if square and matrix.shape[0] != matrix.shape[1]:
            raise BadShape(f"Expected a square matrix, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise BadShape("Matrix has non-finite entries")
        return matrix

    @staticmethod
    def adjoint(m: np.ndarray) -> np.ndarray:
        """
        :return: The conjugate transpose of m.
        """
        return m.conj().T

    @staticmethod
    def hermitian_part(m: np.ndarray) -> np.ndarray:
        """
        :return: Re(m) = (m + m*) / 2
        """
        return (m + m.conj().T) / 2.0

    @staticmethod
    def operator_norm(m: np.ndarray) -> float:
        """
        :return: The largest singular value of m (0 for empty matrices).
        """
        if m.size == 0:
            return 0.0
        return float(np.linalg.norm(m, 2))

    @staticmethod
    def spectral_radius(m: np.ndarray) -> float:
        """
        :return: max |eigenvalue| of the square matrix m.
        """
        if m.size == 0:
            return 0.0
        return float(np.max(np.abs(np.linalg.eigvals(m))))

    @staticmethod
    def numerical_radius(m: np.ndarray, theta_grid: int = 512) -> float:
        """
        w(m) = max over theta of lambda_max(Re(e^{i theta} m)).

        The grid plus golden-section refinement returns a certified lower bound
        which is also an upper bound to about 1e-8 once the refinement converges,
        since lambda_max(Re(e^{i theta} m)) is smooth in theta.

        :param m: Square matrix.
        :param theta_grid: Number of grid angles.
        :return: The numerical radius.
        """
        if m.size == 0:
            return 0.0

        def top_eigenvalue(thetas: np.ndarray) -> np.ndarray:
            rotated = np.exp(1j * thetas)[:, None, None] * m[None, :, :]
            hermitian = (rotated + np.conj(np.swapaxes(rotated, 1, 2))) / 2.0
            return np.linalg.eigvalsh(hermitian)[:, -1]

        value, theta = CircleMaximizer(grid=theta_grid).maximize(top_eigenvalue)
        logger.debug("numerical radius %.3e attained at theta=%.6f", value, theta)
        return max(value, 0.0)

    @staticmethod
    def pencil_numerical_radius(first: np.ndarray, second: np.ndarray, grid: int = 64) -> Tuple[float, complex]:
        """
        max over unimodular z of w(first + z second).

        Both angles of lambda_max(Re(e^{i theta} first + e^{i (theta + phi)} second)) run over a
        grid x grid torus, and Nelder-Mead refines the best grid point. Like numerical_radius,
        the value is an attained lower bound.

        :return: (maximum, maximizing z)
        """
        if first.size == 0:
            return 0.0, 1.0 + 0.0j

        def top(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
            outer = np.exp(1j * theta)[..., None, None]
            inner = np.exp(1j * (theta + phi))[..., None, None]
            rotated = outer * first + inner * second
            hermitian = (rotated + np.conj(np.swapaxes(rotated, -1, -2))) / 2.0
            return np.linalg.eigvalsh(hermitian)[..., -1]

        angles = 2.0 * np.pi * np.arange(grid) / grid
        values = top(angles[:, None], angles[None, :])
        row, col = np.unravel_index(int(np.argmax(values)), values.shape)
        best = float(values[row, col])
        best_phi = float(angles[col])

        refined = minimize(
            lambda v: -float(top(np.array(v[0]), np.array(v[1]))),
            np.array([angles[row], angles[col]]),
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-13},
        )
        if -refined.fun > best:
            best = float(-refined.fun)
            best_phi = float(refined.x[1])
        return best, complex(np.exp(1j * best_phi))

    @staticmethod
    def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """
        :return: [x, y] = xy - yx
        """
        if x.shape != y.shape or x.shape[0] != x.shape[1]:
            raise BadShape(f"Commutator needs equal square shapes, got {x.shape} and {y.shape}")
        return x @ y - y @ x

    @classmethod
    def commutator_norm(cls, x: np.ndarray, y: np.ndarray) -> float:
        """
        :return: ||[x, y]||
        """
        return cls.operator_norm(cls.commutator(x, y))

    @classmethod
    def normality_residual(cls, m: np.ndarray) -> float:
        """
        :return: ||m* m - m m*||
        """
        return cls.operator_norm(cls.commutator(m.conj().T, m))

    @classmethod
    def min_eigenvalue(cls, hermitian: np.ndarray) -> float:
        """
        :return: The smallest eigenvalue of the Hermitian part of the argument (inf when empty).
        """
        if hermitian.size == 0:
            return float("inf")
        return float(np.linalg.eigvalsh(cls.hermitian_part(hermitian))[0])
