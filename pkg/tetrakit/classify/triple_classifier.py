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
from typing import Dict
from typing import Optional
from typing import Tuple

import numpy as np

from tetrakit.classify.triple_class import TripleClass
from tetrakit.classify.triple_kind import TripleKind
from tetrakit.classify.wold_split import WoldSplit
from tetrakit.classify.wold_splitter import WoldSplitter
from tetrakit.domains.point3 import Point3
from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.errors import NotIsometry
from tetrakit.errors import TriangularizationFailed
from tetrakit.gamma.gamma_class import GammaClass
from tetrakit.gamma.gamma_contraction import GammaContraction
from tetrakit.linalg.joint_spectrum import JointSpectrum
from tetrakit.linalg.spectral_tools import SpectralTools
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.spectral_set_battery import SpectralSetBattery
from tetrakit.tetra.tetrablock_contraction import TetrablockContraction
from tetrakit.verdict import Verdict

logger = logging.getLogger(__name__)


class TripleClassifier:
    """
    Recognizes tetrablock unitaries and tetrablock isometries through their equivalent characterizations,
    and falls back on the spectral set battery for everything else.
    """

    FINITE_DIMENSION_NOTE: str = (
        "pure tetrablock isometries do not exist on finite-dimensional spaces; "
        "a shift part only appears in truncated models"
    )

    def __init__(
        self,
        tol: float = 1e-8,
        slices: int = 16,
        battery: Optional[SpectralSetBattery] = None,
        tetrablock: Optional[Tetrablock] = None,
    ):
        """
        Constructor.

        :param tol: Relative tolerance; residuals are compared against tol times the scale of the triple.
        :param slices: Number of unimodular z for the Gamma-unitary slice criterion.
        :param battery: Spectral set battery for the contraction criteria.
        :param tetrablock: Evaluator of the distinguished boundary test.
        """
        self.tol: float = tol
        self.slices: int = slices
        self.battery: SpectralSetBattery = battery or SpectralSetBattery()
        self.tetrablock: Tetrablock = tetrablock or Tetrablock()
        self.gamma: GammaContraction = GammaContraction()

    def _bound(self, triple: OperatorTriple) -> float:
        return self.tol * triple.scale

    def _boundary_deviation(self, triple: OperatorTriple) -> float:
        try:
            tuples = JointSpectrum.joint_eigenvalues(triple.matrices(), tol=max(triple.tol, 1e-8))
        except TriangularizationFailed:
            return float("inf")
        return max((Tetrablock.boundary_deviation(Point3(*values)) for values in tuples), default=0.0)

    def _slices_gamma_unitary(self, triple: OperatorTriple) -> int:
        failures = 0
        for z in Tetrablock.circle_points(self.slices):
            pair = TetrablockContraction.slice_pair(triple, z)
            if self.gamma.classify(pair) != GammaClass.GAMMA_UNITARY:
                failures += 1
        return failures

    def is_tetrablock_unitary(self, triple: OperatorTriple) -> TripleClass:
        """
        Decide by N3 unitary, ||N2|| <= 1 and N1 = N2* N3, and evaluate the other characterizations:
        normality with joint spectrum in bE, N3 unitary with the spectral set battery not refuting,
        and every slice (N1 + z N2, z N3) a Gamma-unitary.

        :return: TETRABLOCK_UNITARY or NONE, with evidence and the verdict of every characterization.
        """
        n1, n2, n3 = triple.matrices()
        identity = np.eye(triple.size, dtype=complex)
        bound = self._bound(triple)
        normal_bound = self.tol * triple.scale**2

        evidence: Dict[str, float] = {
            "n3_isometry_defect": SpectralTools.operator_norm(n3.conj().T @ n3 - identity),
            "n3_coisometry_defect": SpectralTools.operator_norm(n3 @ n3.conj().T - identity),
            "n2_norm_excess": max(SpectralTools.operator_norm(n2) - 1.0, 0.0),
            "relation": SpectralTools.operator_norm(n1 - n2.conj().T @ n3),
            "normality_n1": SpectralTools.normality_residual(n1),
            "normality_n2": SpectralTools.normality_residual(n2),
            "normality_n3": SpectralTools.normality_residual(n3),
            "be_deviation": self._boundary_deviation(triple),
        }
        n3_unitary = evidence["n3_isometry_defect"] <= bound and evidence["n3_coisometry_defect"] <= bound
        normal = all(evidence[name] <= normal_bound for name in ("normality_n1", "normality_n2", "normality_n3"))

        report = self.battery.run(triple)
        evidence["slices_not_gamma_unitary"] = float(self._slices_gamma_unitary(triple))
        criteria = {
            "normal_spectrum_in_be": normal and evidence["be_deviation"] <= bound,
            "unitary_contraction_relation": n3_unitary
            and evidence["n2_norm_excess"] <= bound
            and evidence["relation"] <= bound,
            "unitary_and_contraction": n3_unitary and report.verdict != Verdict.REFUTED,
            "gamma_unitary_slices": evidence["slices_not_gamma_unitary"] == 0.0,
        }
        unitary = criteria["unitary_contraction_relation"]
        return TripleClass(
            kind=TripleKind.TETRABLOCK_UNITARY if unitary else TripleKind.NONE,
            evidence=evidence,
            criteria=criteria,
        )

    def is_tetrablock_isometry(self, triple: OperatorTriple, subspace: Optional[np.ndarray] = None) -> TripleClass:
        """
        Decide by V3 isometric, r(V1), r(V2) <= 1 and V1 = V2* V3; the contraction form with ||V1||, ||V2|| <= 1
        is evaluated next to it, and V2 = V1* V3 is reported.

        :param subspace: Orthonormal columns the isometry and relation checks are restricted to, the whole
                         space by default.
        :return: TETRABLOCK_ISOMETRY or NONE.
        """
        v1, v2, v3 = triple.matrices()
        basis = subspace if subspace is not None else np.eye(triple.size, dtype=complex)
        identity = np.eye(triple.size, dtype=complex)
        bound = self._bound(triple)

        evidence: Dict[str, float] = {
            "v3_isometry_defect": SpectralTools.operator_norm((v3.conj().T @ v3 - identity) @ basis),
            "v1_norm_excess": max(SpectralTools.operator_norm(v1) - 1.0, 0.0),
            "v2_norm_excess": max(SpectralTools.operator_norm(v2) - 1.0, 0.0),
            "v1_radius_excess": max(SpectralTools.spectral_radius(v1) - 1.0, 0.0),
            "v2_radius_excess": max(SpectralTools.spectral_radius(v2) - 1.0, 0.0),
            "relation": SpectralTools.operator_norm((v1 - v2.conj().T @ v3) @ basis),
            "adjoint_relation": SpectralTools.operator_norm((v2 - v1.conj().T @ v3) @ basis),
        }
        shared = evidence["v3_isometry_defect"] <= bound and evidence["relation"] <= bound
        criteria = {
            "contraction_form": shared
            and evidence["v1_norm_excess"] <= bound
            and evidence["v2_norm_excess"] <= bound,
            "spectral_radius_form": shared
            and evidence["v1_radius_excess"] <= bound
            and evidence["v2_radius_excess"] <= bound,
        }
        isometry = criteria["spectral_radius_form"]
        return TripleClass(
            kind=TripleKind.TETRABLOCK_ISOMETRY if isometry else TripleKind.NONE,
            evidence=evidence,
            criteria=criteria,
            notes=(self.FINITE_DIMENSION_NOTE,),
        )

    def wold_split(self, triple: OperatorTriple, subspace: Optional[np.ndarray] = None) -> WoldSplit:
        """
        :param subspace: Restriction of the isometry checks, as in is_tetrablock_isometry.
        :return: The splitting into the unitary part of V3 and the rest.
        """
        verdict = self.is_tetrablock_isometry(triple, subspace)
        if verdict.kind != TripleKind.TETRABLOCK_ISOMETRY:
            defect = max(verdict.evidence["v3_isometry_defect"], verdict.evidence["relation"])
            raise NotIsometry(
                "The triple is not a tetrablock isometry", residual=defect, tolerance=self._bound(triple)
            )
        return WoldSplitter(self.tol).split(triple)

    @staticmethod
    def stampfli_check(v1: np.ndarray, v2: np.ndarray, v3: np.ndarray) -> Tuple[float, float, float, float]:
        """
        B1 = [[0, V1], [V2, 0]] and B2 = diag(V3, V3).

        :return: (||B1||, r(B1), lambda_min(B1* B1 - B1 B1*), ||B1 - B1* B2||)
        """
        zero = np.zeros_like(v1)
        b1 = np.block([[zero, v1], [v2, zero]])
        b2 = np.block([[v3, zero], [zero, v3]])
        hyponormal = SpectralTools.min_eigenvalue(b1.conj().T @ b1 - b1 @ b1.conj().T)
        if not np.isfinite(hyponormal):
            hyponormal = 0.0
        return (
            SpectralTools.operator_norm(b1),
            SpectralTools.spectral_radius(b1),
            hyponormal,
            SpectralTools.operator_norm(b1 - b1.conj().T @ b2),
        )

    def classify(self, triple: OperatorTriple) -> TripleClass:
        """
        :return: The most special class that applies: unitary, isometry, contraction (with the battery
                 verdict), or NONE when the battery refutes.
        """
        unitary = self.is_tetrablock_unitary(triple)
        if unitary.kind == TripleKind.TETRABLOCK_UNITARY:
            return unitary
        isometry = self.is_tetrablock_isometry(triple)
        if isometry.kind == TripleKind.TETRABLOCK_ISOMETRY:
            return isometry

        report = self.battery.run(triple)
        kind = TripleKind.NONE if report.verdict == Verdict.REFUTED else TripleKind.TETRABLOCK_CONTRACTION
        logger.debug("triple of size %d classified as %s (%s)", triple.size, kind.value, report.verdict.value)
        return TripleClass(
            kind=kind,
            evidence={"rho12_min_eig": report.rho12_min_eig, "vn_worst_ratio": report.vn_worst_ratio},
            verdict=report.verdict,
        )
