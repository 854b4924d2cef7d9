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

from typing import Any
from typing import Dict
from typing import Optional


class TetrakitError(ValueError):
    """
    Base class for every error raised by the toolkit.

    Carries an optional residual and the tolerance it was compared against so that
    command handlers can serialize the failure.
    """

    def __init__(self, message: str, residual: Optional[float] = None, tolerance: Optional[float] = None):
        """
        Constructor.

        :param message: Human readable description of the failure.
        :param residual: The offending residual, if the failure is a numerical comparison.
        :param tolerance: The tolerance the residual was compared against.
        """
        super().__init__(message)
        self.residual: Optional[float] = residual
        self.tolerance: Optional[float] = tolerance

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-friendly description of this error.
        """
        description: Dict[str, Any] = {"error": self.__class__.__name__, "message": str(self)}
        if self.residual is not None:
            description["residual"] = float(self.residual)
        if self.tolerance is not None:
            description["tolerance"] = float(self.tolerance)
        return description


class BadShape(TetrakitError):
    """Matrix or point has the wrong shape or non-finite entries."""


class NotAContraction(TetrakitError):
    """I - P*P has an eigenvalue below the clamp tolerance."""


class NotCommuting(TetrakitError):
    """A commutator exceeds its tolerance."""


class TriangularizationFailed(TetrakitError):
    """Simultaneous Schur triangularization left off-triangular mass after all retries."""


class NotUnimodular(TetrakitError):
    """A parameter that must lie on the unit circle does not."""


class InternalInconsistency(TetrakitError):
    """Equivalent criteria disagree at a clear margin. Signals a bug."""


class ResidualTooLarge(TetrakitError):
    """An operator equation could not be solved to tolerance."""


class HypothesisFailed(TetrakitError):
    """The hypothesis of an identity does not hold, so the identity is not asserted."""


class NotIsometry(TetrakitError):
    """The triple is not a tetrablock isometry."""


class BadDepth(TetrakitError):
    """Truncation depth must be at least one."""


class DepthTooShallow(TetrakitError):
    """The requested moment degree reaches truncated levels."""


class BlockStructureMismatch(TetrakitError):
    """A dilation model does not have the expected block structure."""


class SpecInvariantViolated(TetrakitError):
    """The symbol of a pure isometry model violates its norm or commutation conditions."""


class ConditionsNotMet(TetrakitError):
    """
    The fundamental operators do not satisfy the commutation conditions the dilation needs.
    """

    def __init__(self, message: str, commutator_residual: float, self_commutator_residual: float, tolerance: float):
        """
        Constructor.

        :param message: Human readable description of the failure.
        :param commutator_residual: ||[F1, F2]||
        :param self_commutator_residual: ||[F1, F1*] - [F2, F2*]||
        :param tolerance: The tolerance both residuals were compared against.
        """
        super().__init__(message, max(commutator_residual, self_commutator_residual), tolerance)
        self.commutator_residual: float = commutator_residual
        self.self_commutator_residual: float = self_commutator_residual

    def to_dict(self) -> Dict[str, Any]:
        description: Dict[str, Any] = super().to_dict()
        description["commutator_residual"] = float(self.commutator_residual)
        description["self_commutator_residual"] = float(self.self_commutator_residual)
        return description
