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

from typing import Tuple

from tetrakit.domains.membership_verdict import CriterionResult
from tetrakit.domains.membership_verdict import MembershipVerdict
from tetrakit.domains.point2 import Point2


class SymmetrizedBidisc:
    """
    Membership in the open symmetrized bidisc G, its closure Gamma and the distinguished boundary bGamma.

    (s, p) is in G iff |s - conj(s) p| < 1 - |p|^2 and |s| < 2, and in Gamma with both
    inequalities relaxed to <=.
    """

    CRITERION: str = "sp"

    @staticmethod
    def margin(q: Point2) -> float:
        """
        :return: min((1 - |p|^2) - |s - conj(s) p|, 2 - |s|), positive inside G.
        """
        s, p = q.s, q.p
        return min((1.0 - abs(p) ** 2) - abs(s - s.conjugate() * p), 2.0 - abs(s))

    @classmethod
    def membership(cls, q: Point2, tol: float = 1e-9) -> MembershipVerdict:
        """
        :param q: The candidate point.
        :param tol: Decision tolerance. Open membership needs margin > tol, closed needs margin >= -tol.
        :return: The verdict, with the single criterion "sp".
        """
        margin = cls.margin(q)
        result = CriterionResult(pass_open=margin > tol, pass_closed=margin >= -tol, margin=margin)
        return MembershipVerdict(
            in_open=result.pass_open, in_closed=result.pass_closed, per_criterion={cls.CRITERION: result}
        )

    @classmethod
    def boundary(cls, q: Point2, tol: float = 1e-9) -> bool:
        """
        :return: True iff |p| = 1 within tol and q lies in Gamma.
        """
        return cls.boundary_with_margin(q, tol)[0]

    @classmethod
    def boundary_with_margin(cls, q: Point2, tol: float = 1e-9) -> Tuple[bool, float]:
        """
        :return: The boundary decision and its margin min(-||p| - 1|, closed margin), nonpositive on bGamma.
        """
        margin = min(-abs(abs(q.p) - 1.0), cls.margin(q))
        return margin >= -tol, margin

    @staticmethod
    def symmetrize(z1: complex, z2: complex) -> Point2:
        """
        :return: (z1 + z2, z1 z2)
        """
        return Point2(z1 + z2, z1 * z2)
