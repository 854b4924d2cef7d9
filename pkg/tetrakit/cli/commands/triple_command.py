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

import argparse
import logging
from typing import TextIO

from tetrakit.classify.triple_classifier import TripleClassifier
from tetrakit.classify.triple_kind import TripleKind
from tetrakit.cli.commands.command import Command
from tetrakit.cli.commands.command_result import CommandResult
from tetrakit.cli.run_config import RunConfig
from tetrakit.linalg.defect_data import DefectData
from tetrakit.tetra.implication_chain import ImplicationChain
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.spectral_set_battery import SpectralSetBattery
from tetrakit.tetra.tetrablock_contraction import TetrablockContraction
from tetrakit.verdict import Verdict

logger = logging.getLogger(__name__)


class TripleCommand(Command):
    """
    triple {check|fundamental|classify|chain}: the spectral set battery, the fundamental pair,
    the classification or the implication chain of one commuting triple read as JSON.
    """

    name: str = "triple"
    help: str = "Spectral set battery, fundamental operators and classification of a commuting triple"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument("action", choices=["check", "fundamental", "classify", "chain"], help="What to compute")
        self.add_input_argument(parser)

    @staticmethod
    def battery(config: RunConfig) -> SpectralSetBattery:
        """
        :return: The spectral set battery with the configured settings.
        """
        return SpectralSetBattery(config.battery_config(), tol=config.tol, tetrablock=config.tetrablock())

    def execute(self, args: argparse.Namespace, config: RunConfig, stdin: TextIO) -> CommandResult:
        triple = OperatorTriple.from_dict(self.read_input(args, stdin), tol=config.rtol)
        logger.info("triple %s on a triple of size %d", args.action, triple.size)

        if args.action == "check":
            report = self.battery(config).run(triple)
            return CommandResult(1 if report.verdict == Verdict.REFUTED else 0, report.to_dict())

        if args.action == "fundamental":
            defect = DefectData.of(triple.p, config.clamp_tol)
            pair = TetrablockContraction.solve_fundamental_pair(triple, defect)
            return CommandResult(0, pair.to_dict())

        if args.action == "classify":
            classifier = TripleClassifier(
                tol=config.rtol, battery=self.battery(config), tetrablock=config.tetrablock()
            )
            result = classifier.classify(triple)
            return CommandResult(1 if result.kind == TripleKind.NONE else 0, result.to_dict())

        chain = ImplicationChain(config.battery_config(), tol=config.tol, battery=self.battery(config))
        report = chain.evaluate(triple)
        return CommandResult(0 if report.consistent else 1, report.to_dict())
