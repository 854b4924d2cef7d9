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
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from tetrakit.errors import NotAContraction
from tetrakit.errors import ResidualTooLarge
from tetrakit.gamma.gamma_contraction import GammaContraction
from tetrakit.tetra.battery_config import BatteryConfig
from tetrakit.tetra.chain_report import ChainReport
from tetrakit.tetra.chain_stage import ChainStage
from tetrakit.tetra.fundamental_pair import FundamentalPair
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.spectral_set_battery import SpectralSetBattery
from tetrakit.tetra.tetrablock_contraction import TetrablockContraction
from tetrakit.verdict import Verdict

logger = logging.getLogger(__name__)


class ImplicationChain:
    """
    Evaluates the one-way chain
        (1) the closed tetrablock is a spectral set,
        (2) rho1 and rho2 are positive on the closed disc,
        (3) every slice (A + zB, zP) is a Gamma-contraction,
        (4) the fundamental pair exists with w(F1 + z F2) <= 1 on the circle,
    on one triple. Only an earlier stage passing clearly with a later one failing clearly counts as a violation;
    the converse implications are never assumed.
    """

    SPECTRAL_SET: str = "spectral_set"
    RHO: str = "rho"
    GAMMA_SLICES: str = "gamma_slices"
    FUNDAMENTAL: str = "fundamental"

    def __init__(
        self,
        config: Optional[BatteryConfig] = None,
        tol: float = 1e-9,
        band: float = 1e-6,
        w_tol: float = 1e-6,
        battery: Optional[SpectralSetBattery] = None,
    ):
        """
        Constructor.

        :param config: Battery settings, including the number of slices.
        :param tol: Pass threshold of the eigenvalue margins.
        :param band: Margins within the band of zero are neither clear passes nor clear failures.
        :param w_tol: Allowance of the numerical radius sweep above 1.
        :param battery: The spectral set battery, built from config when absent.
        """
        self.config: BatteryConfig = config or BatteryConfig()
        self.tol: float = tol
        self.band: float = band
        self.w_tol: float = w_tol
        self.battery: SpectralSetBattery = battery or SpectralSetBattery(self.config, tol=tol)
        self.gamma: GammaContraction = GammaContraction(tol=tol)

    def _margin_stage(self, name: str, margin: float, threshold: float) -> ChainStage:
        return ChainStage(
            name=name,
            passed=margin >= -threshold,
            margin=margin,
            clear_pass=margin > self.band,
            clear_fail=margin < -self.band,
        )

    def fundamental_stage(self, triple: OperatorTriple) -> Tuple[ChainStage, Optional[FundamentalPair]]:
        """
        :return: Stage (4) with margin 1 - max_z w(F1 + z F2), and the pair when it could be solved.
        """
        try:
            pair = TetrablockContraction.solve_fundamental_pair(triple)
        except (NotAContraction, ResidualTooLarge) as exception:
            logger.debug("fundamental pair unavailable: %s", exception)
            stage = ChainStage(self.FUNDAMENTAL, passed=False, margin=float("-inf"), clear_pass=False, clear_fail=True)
            return stage, None
        return self._margin_stage(self.FUNDAMENTAL, 1.0 - pair.w_sweep, self.w_tol), pair

    def slice_stage(self, triple: OperatorTriple, extra: Optional[complex] = None) -> ChainStage:
        """
        Stage (3): the rho battery of every slice pair at config.slices equally spaced unimodular z, plus extra.

        :return: The stage, with margin the smallest rho eigenvalue over all slices.
        """
        count = self.config.slices
        points: List[complex] = list(np.exp(2j * np.pi * np.arange(count) / count))
        if extra is not None:
            points.append(extra / abs(extra))

        worst = float("inf")
        refuted = False
        for z in points:
            report = self.gamma.contraction_test(TetrablockContraction.slice_pair(triple, z))
            worst = min(worst, report.min_rho_eig)
            refuted = refuted or report.verdict == Verdict.REFUTED
        return ChainStage(
            name=self.GAMMA_SLICES,
            passed=not refuted,
            margin=worst,
            clear_pass=worst > self.band,
            clear_fail=worst < -self.band,
        )

    def evaluate(self, triple: OperatorTriple) -> ChainReport:
        """
        :param triple: A commuting triple.
        :return: All four stages and the violated implications.
        """
        report = self.battery.run(triple)
        first = ChainStage(
            name=self.SPECTRAL_SET,
            passed=report.verdict != Verdict.REFUTED,
            margin=1.0 - report.vn_worst_ratio,
            clear_pass=report.verdict == Verdict.CERTIFIED,
            clear_fail=report.verdict == Verdict.REFUTED,
        )
        second = self._margin_stage(self.RHO, report.rho12_min_eig, self.tol)
        fourth, pair = self.fundamental_stage(triple)
        third = self.slice_stage(triple, pair.w_sweep_z if pair is not None else None)

        stages = (first, second, third, fourth)
        violations = tuple(
            (earlier.name, later.name)
            for index, earlier in enumerate(stages)
            for later in stages[index + 1:]
            if earlier.clear_pass and later.clear_fail
        )
        if violations:
            logger.warning("implication chain violated: %s", violations)
        return ChainReport(stages=stages, violations=violations)
