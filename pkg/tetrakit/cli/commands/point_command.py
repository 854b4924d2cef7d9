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

from tetrakit.cli.commands.command import Command
from tetrakit.cli.commands.command_result import CommandResult
from tetrakit.cli.run_config import RunConfig
from tetrakit.domains.point2 import Point2
from tetrakit.domains.point3 import Point3
from tetrakit.domains.symmetrized_bidisc import SymmetrizedBidisc
from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.linalg.matrix_codec import MatrixCodec

logger = logging.getLogger(__name__)


class PointCommand(Command):
    """
    point check --set {tetrablock,be,gamma,bgamma}: membership of one point read as JSON.
    """

    name: str = "point"
    help: str = "Membership tests for points of the tetrablock and the symmetrized bidisc"

    SETS = ("tetrablock", "be", "gamma", "bgamma")

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument("action", choices=["check"], help="What to do with the point")
        parser.add_argument("--set", dest="target", choices=self.SETS, default="tetrablock", help="The set to test")
        parser.add_argument(
            "--criteria",
            type=str,
            default=None,
            help="Comma separated tetrablock criteria, e.g. awy5,awy9; all of them by default",
        )
        self.add_input_argument(parser)

    def execute(self, args: argparse.Namespace, config: RunConfig, stdin: TextIO) -> CommandResult:
        document = self.read_input(args, stdin)
        logger.info("point check against %s", args.target)

        if args.target == "tetrablock":
            criteria = args.criteria.split(",") if args.criteria else None
            verdict = config.tetrablock().membership(Point3.from_dict(document), criteria, config.tol)
            return CommandResult(0 if verdict.in_closed else 1, verdict.to_dict())

        if args.target == "be":
            on_boundary, margin = config.tetrablock().boundary(Point3.from_dict(document), config.tol)
            return CommandResult(
                0 if on_boundary else 1,
                {"on_boundary": bool(on_boundary), "margin": MatrixCodec.encode_float(margin)},
            )

        point = Point2.from_dict(document)
        if args.target == "gamma":
            verdict = SymmetrizedBidisc.membership(point, config.tol)
            return CommandResult(0 if verdict.in_closed else 1, verdict.to_dict())

        on_boundary, margin = SymmetrizedBidisc.boundary_with_margin(point, config.tol)
        return CommandResult(
            0 if on_boundary else 1,
            {"on_boundary": bool(on_boundary), "margin": MatrixCodec.encode_float(margin)},
        )
