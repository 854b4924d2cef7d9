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
import logging
import math
from typing import Any
from typing import Callable
from typing import Dict
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np
from scipy.optimize import minimize
from scipy.optimize import minimize_scalar

from tetrakit.domains.membership_verdict import CriterionResult
from tetrakit.domains.membership_verdict import MembershipVerdict
from tetrakit.domains.point2 import Point2
from tetrakit.domains.point3 import Point3
from tetrakit.domains.symmetrized_bidisc import SymmetrizedBidisc
from tetrakit.errors import BadShape
from tetrakit.errors import InternalInconsistency
from tetrakit.errors import NotUnimodular
from tetrakit.errors import TetrakitError
from tetrakit.linalg.circle_maximizer import CircleMaximizer
from tetrakit.linalg.spectral_tools import SpectralTools

logger = logging.getLogger(__name__)

Margin = Tuple[float, Optional[Dict[str, Any]]]


class Tetrablock:
    """
    Scalar geometry of the tetrablock E = {pi(A) : ||A|| < 1}, its closure and its distinguished boundary bE.

    Every criterion reports a margin, the right hand side minus the left hand side of its
    defining inequality, so that positive means strictly inside. Closed-form criteria decide
    membership by majority; grid criteria (awy1, awy2, awy2p) can only refute, and the matrix
    criteria (awy7, awy8) are reported alongside.
    """

    CLOSED_FORM: Tuple[str, ...] = ("awy3", "awy3p", "awy4", "awy4p", "awy5", "awy6", "awy9")
    GRID: Tuple[str, ...] = ("awy1", "awy2", "awy2p")
    MATRIX: Tuple[str, ...] = ("awy7", "awy8")
    ALL_CRITERIA: Tuple[str, ...] = (
        "awy1",
        "awy2",
        "awy2p",
        "awy3",
        "awy3p",
        "awy4",
        "awy4p",
        "awy5",
        "awy6",
        "awy7",
        "awy8",
        "awy9",
    )

    # Band around |x3| = 1 where the beta formulas are replaced by the bE test.
    UNIMODULAR_BAND: float = 1e-8
    UNIMODULAR_TOL: float = 1e-12

    def __init__(self, circle_grid: int = 256, disc_grid: int = 64):
        """
        Constructor.

        :param circle_grid: Angles per circle for the H-infinity criteria.
        :param disc_grid: Radii and angles of the polar grid over the closed disc for criterion awy1.
        """
        self.circle_grid: int = circle_grid
        self.disc_grid: int = disc_grid

    @staticmethod
    def pi_map(a: Any) -> Point3:
        """
        :param a: A 2x2 matrix.
        :return: (a11, a22, det A)
        """
        matrix = SpectralTools.as_matrix(a)
        if matrix.shape != (2, 2):
            raise BadShape(f"pi is defined on 2x2 matrices, got shape {matrix.shape}")
        return Point3(
            matrix[0, 0],
            matrix[1, 1],
            matrix[0, 0] * matrix[1, 1] - matrix[0, 1] * matrix[1, 0],
        )

    @classmethod
    def in_unimodular_band(cls, x3: complex) -> bool:
        """
        :return: True when ||x3| - 1| < UNIMODULAR_BAND.
        """
        return abs(1.0 - abs(x3)) < cls.UNIMODULAR_BAND

    @staticmethod
    def beta(x: Point3) -> Optional[Tuple[complex, complex]]:
        """
        Solve x1 = beta1 + conj(beta2) x3 and x2 = beta2 + conj(beta1) x3.

        :return: (beta1, beta2), or None when |x3| is within the unimodular band or outside the disc.
        """
        x1, x2, x3 = x.as_tuple()
        if abs(x3) > 1.0 or Tetrablock.in_unimodular_band(x3):
            return None
        denominator = 1.0 - abs(x3) ** 2
        beta1 = (x1 - x2.conjugate() * x3) / denominator
        beta2 = (x2 - x1.conjugate() * x3) / denominator
        return beta1, beta2

    @staticmethod
    def boundary_deviation(x: Point3) -> float:
        """
        :return: max(||x3| - 1|, |x1 - conj(x2) x3|, |x2| - 1), zero exactly on bE.
        """
        x1, x2, x3 = x.as_tuple()
        return max(abs(abs(x3) - 1.0), abs(x1 - x2.conjugate() * x3), abs(x2) - 1.0, 0.0)

    @staticmethod
    def margin_awy3(x: Point3) -> Margin:
        """
        |x1 - conj(x2) x3| + |x1 x2 - x3| < 1 - |x2|^2, together with |x1| < 1 which the
        closed form needs when x1 x2 = x3.
        """
        x1, x2, x3 = x.as_tuple()
        main = (1.0 - abs(x2) ** 2) - (abs(x1 - x2.conjugate() * x3) + abs(x1 * x2 - x3))
        return min(main, 1.0 - abs(x1)), None

    @classmethod
    def margin_awy3p(cls, x: Point3) -> Margin:
        return cls.margin_awy3(x.swapped())

    @staticmethod
    def margin_awy4(x: Point3) -> Margin:
        """
        |x1|^2 - |x2|^2 + |x3|^2 + 2 |x2 - conj(x1) x3| < 1 and |x2| < 1
        """
        x1, x2, x3 = x.as_tuple()
        main = 1.0 - (abs(x1) ** 2 - abs(x2) ** 2 + abs(x3) ** 2 + 2.0 * abs(x2 - x1.conjugate() * x3))
        return min(main, 1.0 - abs(x2)), None

    @classmethod
    def margin_awy4p(cls, x: Point3) -> Margin:
        return cls.margin_awy4(x.swapped())

    @staticmethod
    def margin_awy5(x: Point3) -> Margin:
        """
        |x1|^2 + |x2|^2 - |x3|^2 + 2 |x1 x2 - x3| < 1 and |x3| < 1
        """
        x1, x2, x3 = x.as_tuple()
        main = 1.0 - (abs(x1) ** 2 + abs(x2) ** 2 - abs(x3) ** 2 + 2.0 * abs(x1 * x2 - x3))
        return min(main, 1.0 - abs(x3)), None

    @staticmethod
    def margin_awy6(x: Point3) -> Margin:
        """
        |x1 - conj(x2) x3| + |x2 - conj(x1) x3| < 1 - |x3|^2, with |x1|, |x2| < 1 for the closed form.
        """
        x1, x2, x3 = x.as_tuple()
        main = (1.0 - abs(x3) ** 2) - (abs(x1 - x2.conjugate() * x3) + abs(x2 - x1.conjugate() * x3))
        return min(main, 1.0 - abs(x1), 1.0 - abs(x2)), None

    @classmethod
    def margin_awy9(cls, x: Point3) -> Margin:
        """
        |x3| < 1 and |beta1| + |beta2| < 1. Within the unimodular band the bE test decides instead.
        """
        x3 = x.x3
        if cls.in_unimodular_band(x3):
            return -cls.boundary_deviation(x), None
        if abs(x3) > 1.0:
            return 1.0 - abs(x3), None
        beta1, beta2 = cls.beta(x)
        witness = {"beta1": complex(beta1), "beta2": complex(beta2)}
        return min(1.0 - abs(x3), 1.0 - abs(beta1) - abs(beta2)), witness

    @staticmethod
    def symmetric_witness(x: Point3) -> np.ndarray:
        """
        :return: The symmetric matrix [[x1, w], [w, x2]] with w^2 = x1 x2 - x3, so pi of it is x.
        """
        x1, x2, x3 = x.as_tuple()
        w = cmath.sqrt(x1 * x2 - x3)
        return np.array([[x1, w], [w, x2]], dtype=complex)

    @classmethod
    def margin_awy8(cls, x: Point3) -> Margin:
        """
        1 - ||A|| for the symmetric witness, which is unique up to a diagonal unitary similarity.
        """
        witness = cls.symmetric_witness(x)
        return 1.0 - SpectralTools.operator_norm(witness), {"symmetric_matrix": witness}

    @staticmethod
    def margin_awy7(x: Point3) -> Margin:
        """
        1 - min over t > 0 of ||[[x1, t], [c / t, x2]]|| where c = x1 x2 - x3.

        Every A with pi(A) = x is diagonally unitarily similar to one of these.
        """
        x1, x2, x3 = x.as_tuple()
        c = x1 * x2 - x3
        if abs(c) == 0.0:
            return 1.0 - max(abs(x1), abs(x2)), None

        def norm_at(log_t: float) -> float:
            t = math.exp(log_t)
            return SpectralTools.operator_norm(np.array([[x1, t], [c / t, x2]], dtype=complex))

        balanced = 0.5 * math.log(abs(c))
        result = minimize_scalar(norm_at, bounds=(balanced - 30.0, balanced + 30.0), method="bounded")
        best = min(float(result.fun), norm_at(balanced))
        return 1.0 - best, None

    def margin_awy2(self, x: Point3) -> Margin:
        """
        1 - sup over the circle of |Psi(z, x)|, Psi(z, x) = (x3 z - x1) / (x2 z - 1), together with |x2| < 1
        so that Psi has no pole in the disc.
        """
        x1, x2, x3 = x.as_tuple()

        def modulus(thetas: np.ndarray) -> np.ndarray:
            z = np.exp(1j * thetas)
            with np.errstate(divide="ignore", invalid="ignore"):
                return np.abs((x3 * z - x1) / (x2 * z - 1.0))

        supremum, _ = CircleMaximizer(grid=self.circle_grid).maximize(modulus)
        return min(1.0 - supremum, 1.0 - abs(x2)), None

    def margin_awy2p(self, x: Point3) -> Margin:
        """
        The same test for Upsilon(z, x) = (x3 z - x2) / (x1 z - 1).
        """
        return self.margin_awy2(x.swapped())

    def margin_awy1(self, x: Point3) -> Margin:
        """
        min over the closed disc of |1 - x1 z| - |x2 - x3 z|.

        For fixed z the minimum of |1 - x1 z - x2 w + x3 z w| over |w| <= 1 is max(that difference, 0),
        so a negative value exhibits a zero in the bidisc. Grid infima are upper bounds only.
        """
        x1, x2, x3 = x.as_tuple()

        def gap(radius: np.ndarray, theta: np.ndarray) -> np.ndarray:
            z = radius * np.exp(1j * theta)
            return np.abs(1.0 - x1 * z) - np.abs(x2 - x3 * z)

        radii = np.linspace(0.0, 1.0, self.disc_grid)
        thetas = 2.0 * np.pi * np.arange(self.disc_grid) / self.disc_grid
        grid = gap(radii[:, None], thetas[None, :])
        row, col = np.unravel_index(int(np.argmin(grid)), grid.shape)
        best = float(grid[row, col])

        step = 2.0 * np.pi / self.disc_grid
        start = np.array([radii[row], thetas[col]])
        refined = minimize(
            lambda v: float(gap(np.array(v[0]), np.array(v[1]))),
            start,
            method="L-BFGS-B",
            bounds=[(0.0, 1.0), (thetas[col] - step, thetas[col] + step)],
        )
        if np.isfinite(refined.fun):
            best = min(best, float(refined.fun))
        return best, None

    def _criterion(self, name: str) -> Callable[[Point3], Margin]:
        if name not in self.ALL_CRITERIA:
            raise TetrakitError(f"Unknown membership criterion '{name}'")
        return getattr(self, f"margin_{name}")

    def membership(
        self, x: Point3, criteria: Optional[Sequence[str]] = None, tol: float = 1e-9
    ) -> MembershipVerdict:
        """
        Evaluate the requested criteria and aggregate them.

        :param x: The candidate point.
        :param criteria: Criterion ids, all of them by default.
        :param tol: Open pass needs margin > tol, closed pass needs margin >= -tol.
        :return: The aggregated verdict. The majority of the closed-form criteria decides;
                 when none was requested, the requested criteria vote instead.
        """
        names = list(self.ALL_CRITERIA if criteria is None else criteria)
        per_criterion: Dict[str, CriterionResult] = {}
        witness: Dict[str, Any] = {}
        for name in names:
            margin, extra = self._criterion(name)(x)
            per_criterion[name] = CriterionResult(pass_open=margin > tol, pass_closed=margin >= -tol, margin=margin)
            if extra:
                witness.update(extra)

        voters = [name for name in names if name in self.CLOSED_FORM] or names
        in_open = self._majority([per_criterion[name].pass_open for name in voters])
        in_closed = self._majority([per_criterion[name].pass_closed for name in voters])
        in_open = in_open and in_closed

        self._check_consistency(x, voters, per_criterion, in_open, in_closed, tol)
        return MembershipVerdict(
            in_open=in_open,
            in_closed=in_closed,
            per_criterion=per_criterion,
            witness=witness or None,
        )

    @staticmethod
    def _majority(votes: Sequence[bool]) -> bool:
        return 2 * sum(votes) > len(votes)

    @staticmethod
    def _check_consistency(
        x: Point3,
        voters: Sequence[str],
        per_criterion: Dict[str, CriterionResult],
        in_open: bool,
        in_closed: bool,
        tol: float,
    ):
        band = 10.0 * tol
        for name in voters:
            margin = per_criterion[name].margin
            if (margin > band and not in_open) or (margin < -band and in_closed):
                raise InternalInconsistency(
                    f"Criterion {name} has margin {margin:.3e} against the aggregated verdict at {x.as_tuple()}",
                    residual=abs(margin),
                    tolerance=band,
                )

    def closed_margin(self, x: Point3) -> float:
        """
        :return: The median margin of the closed-form criteria, which has the sign of the majority.
        """
        margins = sorted(self._criterion(name)(x)[0] for name in self.CLOSED_FORM)
        return margins[len(margins) // 2]

    def boundary(self, x: Point3, tol: float = 1e-9) -> Tuple[bool, float]:
        """
        Test x in bE: |x3| = 1, |x2| <= 1 and x1 = conj(x2) x3, each within tol.

        The equivalent description "x in the closed tetrablock and |x3| = 1" is evaluated too,
        and a clear disagreement raises InternalInconsistency.

        :return: (decision, margin) where the margin is minus the largest deviation.
        """
        deviation = self.boundary_deviation(x)
        on_boundary = deviation <= tol

        closed = self.membership(x, self.CLOSED_FORM, tol)
        band = 10.0 * tol
        clearly_outside = not closed.in_closed and closed.min_margin < -band
        clearly_unimodular = abs(abs(x.x3) - 1.0) <= tol
        if on_boundary and clearly_outside:
            raise InternalInconsistency(
                f"{x.as_tuple()} passes the bE test but lies outside the closed tetrablock",
                residual=-closed.min_margin,
                tolerance=band,
            )
        if deviation > band and closed.in_closed and clearly_unimodular:
            raise InternalInconsistency(
                f"{x.as_tuple()} is in the closed tetrablock with |x3| = 1 but fails the bE test",
                residual=deviation,
                tolerance=band,
            )
        return on_boundary, -deviation

    @classmethod
    def neat_slice(cls, x: Point3, z: complex) -> Point2:
        """
        :param x: The point.
        :param z: A unimodular number.
        :return: (x1 + z x2, z x3)
        """
        z = complex(z)
        if abs(abs(z) - 1.0) > cls.UNIMODULAR_TOL:
            raise NotUnimodular(
                f"|z| = {abs(z):.15f} is not 1", residual=abs(abs(z) - 1.0), tolerance=cls.UNIMODULAR_TOL
            )
        return Point2(x.x1 + z * x.x2, z * x.x3)

    @classmethod
    def slices_in_gamma(cls, x: Point3, count: int = 64, tol: float = 1e-9) -> Tuple[bool, float]:
        """
        Closed membership through the circle of slices (x1 + z x2, z x3), z on a grid of the circle.

        :return: (all slices in Gamma, smallest slice margin)
        """
        margins = [SymmetrizedBidisc.margin(cls.neat_slice(x, z)) for z in cls.circle_points(count)]
        worst = min(margins)
        return worst >= -tol, worst

    @classmethod
    def slices_on_gamma_boundary(cls, x: Point3, count: int = 64, tol: float = 1e-9) -> Tuple[bool, float]:
        """
        :return: (all slices in bGamma, smallest boundary margin)
        """
        margins = [
            SymmetrizedBidisc.boundary_with_margin(cls.neat_slice(x, z), tol)[1] for z in cls.circle_points(count)
        ]
        worst = min(margins)
        return worst >= -tol, worst

    @staticmethod
    def circle_points(count: int) -> np.ndarray:
        """
        :return: count equally spaced points of the unit circle, starting at 1.
        """
        return np.exp(2j * np.pi * np.arange(count) / count)
