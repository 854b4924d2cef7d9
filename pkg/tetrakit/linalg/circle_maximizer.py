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
from typing import Callable
from typing import Tuple

import numpy as np

GOLDEN: float = (math.sqrt(5.0) - 1.0) / 2.0


class CircleMaximizer:
    """
    Maximizes a real function of an angle over the unit circle.

    A uniform grid finds the best brackets, then golden-section search refines each of them.
    The result is a certified lower bound on the true maximum (every value returned was
    actually attained) and a heuristic upper bound once the refinement converges.
    """

    def __init__(self, grid: int = 256, brackets: int = 4, iterations: int = 60):
        """
        Constructor.

        :param grid: Number of equally spaced angles in [0, 2 pi).
        :param brackets: How many of the best grid points get refined.
        :param iterations: Golden-section iterations per bracket.
        """
        self.grid: int = max(int(grid), 3)
        self.brackets: int = max(int(brackets), 1)
        self.iterations: int = max(int(iterations), 0)

    def thetas(self) -> np.ndarray:
        """
        :return: The grid angles.
        """
        return 2.0 * np.pi * np.arange(self.grid) / self.grid

    def maximize(self, func: Callable[[np.ndarray], np.ndarray]) -> Tuple[float, float]:
        """
        :param func: Vectorized function mapping an array of angles to an array of reals.
                     NaN values are ignored.
        :return: (maximum value, maximizing angle). Ties on the grid go to the smallest index.
        """
        thetas = self.thetas()
        values = np.asarray(func(thetas), dtype=float)
        values = np.where(np.isnan(values), -np.inf, values)

        order = np.argsort(-values, kind="stable")
        best_value = float(values[order[0]])
        best_theta = float(thetas[order[0]])
        step = 2.0 * np.pi / self.grid

        for index in order[: self.brackets]:
            if not np.isfinite(values[index]):
                continue
            value, theta = self._golden(func, float(thetas[index]) - step, float(thetas[index]) + step)
            if value > best_value:
                best_value, best_theta = value, theta
        return best_value, best_theta

    def minimize(self, func: Callable[[np.ndarray], np.ndarray]) -> Tuple[float, float]:
        """
        :return: (minimum value, minimizing angle) of func over the circle.
        """
        value, theta = self.maximize(lambda t: -np.asarray(func(t), dtype=float))
        return -value, theta

    def _golden(self, func: Callable[[np.ndarray], np.ndarray], low: float, high: float) -> Tuple[float, float]:
        """
        Golden-section search for a maximum on [low, high].
        """
        left = high - GOLDEN * (high - low)
        right = low + GOLDEN * (high - low)
        f_left = self._single(func, left)
        f_right = self._single(func, right)
        for _ in range(self.iterations):
            if f_left >= f_right:
                high, right, f_right = right, left, f_left
                left = high - GOLDEN * (high - low)
                f_left = self._single(func, left)
            else:
                low, left, f_left = left, right, f_right
                right = low + GOLDEN * (high - low)
                f_right = self._single(func, right)
        if f_left >= f_right:
            return f_left, left
        return f_right, right

    @staticmethod
    def _single(func: Callable[[np.ndarray], np.ndarray], theta: float) -> float:
        value = float(np.asarray(func(np.array([theta])), dtype=float)[0])
        return -np.inf if math.isnan(value) else value
