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
from typing import List
from typing import Optional

import numpy as np

from tetrakit.classify.tetrablock_unitary_generator import TetrablockUnitaryGenerator
from tetrakit.classify.triple_classifier import TripleClassifier
from tetrakit.classify.triple_kind import TripleKind
from tetrakit.dilation.isometry_model_spec import IsometryModelSpec
from tetrakit.dilation.pure_isometry_model import PureIsometryModel
from tetrakit.suites.case_outcome import CaseOutcome
from tetrakit.suites.property_suite import PropertySuite
from tetrakit.tetra.battery_config import BatteryConfig
from tetrakit.tetra.spectral_set_battery import SpectralSetBattery
from tetrakit.tetra.triple_families import TripleFamilies

logger = logging.getLogger(__name__)


class ClassifySuite(PropertySuite):
    """
    Every generated tetrablock unitary passes all four unitary characterizations, has a normal N2
    without that being imposed, is a tetrablock isometry by both forms and has no shift part;
    truncated pure isometry models get the same verdict from both isometry forms and no unitary part.
    """

    name: str = "classify"

    NORMALITY_TOL: float = 1e-8
    STAMPFLI_TOL: float = 1e-6
    MODEL_DEPTH: int = 4
    MODEL_MAX_SIZE: int = 3
    # Keeps the symbol clear of the circle, where eigenvalues of the truncated model are ill-conditioned.
    MODEL_SYMBOL_BOUND: float = 0.9

    def __init__(self, tol: float = 1e-9, config: Optional[BatteryConfig] = None):
        super().__init__(tol, config)
        self.classifier: TripleClassifier = TripleClassifier(battery=SpectralSetBattery(self.config, tol=tol))

    @classmethod
    def model_spec(cls, index: int, seed: int) -> IsometryModelSpec:
        """
        :return: Diagonal coefficients with |tau1_k| + |tau2_k| <= MODEL_SYMBOL_BOUND.
        """
        rng = TripleFamilies.rng(index, seed)
        size = 1 + index % cls.MODEL_MAX_SIZE
        total = cls.MODEL_SYMBOL_BOUND * rng.random(size)
        share = rng.random(size)
        phases = np.exp(2j * np.pi * rng.random((2, size)))
        return IsometryModelSpec(
            tau1=np.diag(total * share * phases[0]),
            tau2=np.diag(total * (1.0 - share) * phases[1]),
            depth=cls.MODEL_DEPTH,
        )

    def unitary_quantities(self, index: int, seed: int, failures: List[str]) -> Dict[str, float]:
        """
        :return: Quantities of the generated unitary of case index; failed checks are appended to failures.
        """
        triple = TetrablockUnitaryGenerator.generate(index, seed)
        unitary = self.classifier.is_tetrablock_unitary(triple)
        if unitary.kind != TripleKind.TETRABLOCK_UNITARY or not all(unitary.criteria.values()):
            failures.append("unitary criteria")
        isometry = self.classifier.is_tetrablock_isometry(triple)
        if isometry.kind != TripleKind.TETRABLOCK_ISOMETRY or not isometry.consistent:
            failures.append("unitary is not an isometry by both forms")
        split = self.classifier.wold_split(triple)
        norm, radius, hyponormal, relation = TripleClassifier.stampfli_check(*triple.matrices())

        quantities = {
            "normality_n2": unitary.evidence["normality_n2"],
            "shift_dimension": float(split.basis_s.shape[1]),
            "stampfli_gap": norm - radius,
            "stampfli_hyponormal_margin": hyponormal,
            "stampfli_relation": relation,
        }
        if quantities["normality_n2"] > self.NORMALITY_TOL:
            failures.append("normality_n2")
        if quantities["shift_dimension"] > 0:
            failures.append("shift part of a unitary")
        if abs(quantities["stampfli_gap"]) > self.STAMPFLI_TOL:
            failures.append("stampfli_gap")
        return quantities

    def model_quantities(self, index: int, seed: int, failures: List[str]) -> Dict[str, float]:
        """
        :return: Quantities of the pure isometry model of case index; failed checks are appended to failures.
        """
        spec = self.model_spec(index, seed)
        triple = PureIsometryModel.build(spec)
        inner = PureIsometryModel.inner_levels(spec)
        isometry = self.classifier.is_tetrablock_isometry(triple, inner)
        if not isometry.consistent:
            failures.append("isometry forms disagree on a pure model")
        split = self.classifier.wold_split(triple, inner)
        unitary_dimension = float(split.basis_u.shape[1])
        if unitary_dimension > 0:
            failures.append("unitary part of a pure model")
        return {
            "model_relation": isometry.evidence["relation"],
            "model_unitary_dimension": unitary_dimension,
        }

    def run_case(self, index: int, seed: int) -> CaseOutcome:
        failures: List[str] = []
        quantities = self.unitary_quantities(index, seed, failures)
        quantities.update(self.model_quantities(index, seed, failures))
        witness = None
        if failures:
            witness = {
                "unitary": TetrablockUnitaryGenerator.generate(index, seed).to_dict(),
                "model": self.model_spec(index, seed).to_dict(),
                "failures": failures,
            }
        return CaseOutcome(index=index, passed=not failures, quantities=quantities, witness=witness)
