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
from typing import Any
from typing import Dict
from typing import TextIO

from tetrakit.classify.triple_classifier import TripleClassifier
from tetrakit.cli.commands.command import Command
from tetrakit.cli.commands.command_result import CommandResult
from tetrakit.cli.run_config import RunConfig
from tetrakit.dilation.dilation_model import DilationModel
from tetrakit.dilation.isometry_model_spec import IsometryModelSpec
from tetrakit.dilation.pure_isometry_model import PureIsometryModel
from tetrakit.dilation.schaffer_dilation import SchafferDilation
from tetrakit.errors import ConditionsNotMet
from tetrakit.linalg.defect_data import DefectData
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.tetra.operator_triple import OperatorTriple
from tetrakit.tetra.tetrablock_contraction import TetrablockContraction

logger = logging.getLogger(__name__)


class DilateCommand(Command):
    """
    dilate build: the truncated dilation model of a triple.
    dilate verify: moments, identities, recovery and minimality of a model.
    dilate pure: the truncated pure isometry model of symbol coefficients, with its isometry verdict.
    """

    name: str = "dilate"
    help: str = "Build and verify truncated dilations"

    MOMENT_TOL: float = 1e-10
    IDENTITY_TOL: float = 1e-8

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument("action", choices=["build", "verify", "pure"], help="What to do")
        parser.add_argument("--depth", type=int, default=None, help="Number of defect copies of the model")
        parser.add_argument(
            "--max-degree", type=int, default=None, help="Largest moment degree to verify, depth - 1 by default"
        )
        self.add_input_argument(parser)

    def execute(self, args: argparse.Namespace, config: RunConfig, stdin: TextIO) -> CommandResult:
        document = self.read_input(args, stdin)
        logger.info("dilate %s", args.action)
        if args.action == "build":
            return self.build(document, config)
        if args.action == "verify":
            return self.verify(document, args.max_degree, config)
        return self.pure(document, config)

    @staticmethod
    def build(document: Any, config: RunConfig) -> CommandResult:
        """
        :return: The model JSON, or exit 1 with both commutator residuals when the conditions fail.
        """
        triple = OperatorTriple.from_dict(document, tol=config.rtol)
        pair = TetrablockContraction.solve_fundamental_pair(triple, DefectData.of(triple.p, config.clamp_tol))
        try:
            model = SchafferDilation.build(triple, pair, depth=config.depth)
        except ConditionsNotMet as exception:
            logger.warning("dilation refused: %s", exception)
            return CommandResult(1, {"conditionsOK": False, **exception.to_dict()})
        return CommandResult(0, model.to_dict())

    @classmethod
    def verify(cls, document: Any, max_degree: Any, config: RunConfig) -> CommandResult:
        """
        The triple is read off the H block of the model.

        :return: The residual report, exit 1 when a moment or identity residual is too large.
        """
        model = DilationModel.from_dict(document)
        level = model.level(0)
        triple = OperatorTriple.of(model.v1[level, level], model.v2[level, level], model.v3[level, level], config.rtol)
        degree = model.depth - 1 if max_degree is None else max_degree

        moments = SchafferDilation.verify_moments(model, triple, degree)
        identities = SchafferDilation.verify_model_identities(model)
        recovered = SchafferDilation.recover_fundamental(model, triple)
        e1_radius, sweep = SchafferDilation.e1_numerical_radius(model)
        worst_identity = max(identities.values(), default=0.0)
        report: Dict[str, Any] = {
            "maxDegree": degree,
            "momentResidual": MatrixCodec.encode_float(moments),
            "identities": {name: MatrixCodec.encode_float(value) for name, value in sorted(identities.items())},
            "recovery": recovered.to_dict(),
            "krylovDeficit": SchafferDilation.check_minimality(model),
            "e1NumericalRadius": MatrixCodec.encode_float(e1_radius),
            "symbolSweep": MatrixCodec.encode_float(sweep),
        }
        ok = moments <= cls.MOMENT_TOL and (worst_identity <= cls.IDENTITY_TOL or not model.conditions_ok)
        return CommandResult(0 if ok else 1, report)

    @staticmethod
    def pure(document: Any, config: RunConfig) -> CommandResult:
        """
        :return: The model triple with its isometry verdict on the levels above the deepest one.
        """
        spec = IsometryModelSpec.from_dict(document, tol=config.rtol)
        triple = PureIsometryModel.build(spec)
        inner = PureIsometryModel.inner_levels(spec)
        verdict = TripleClassifier(tol=config.rtol).is_tetrablock_isometry(triple, inner)
        return CommandResult(0, {"triple": triple.to_dict(), "isometry": verdict.to_dict()})
