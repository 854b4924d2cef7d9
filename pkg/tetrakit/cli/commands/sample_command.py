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
from tetrakit.domains.tetrablock_sampler import SampleMode
from tetrakit.domains.tetrablock_sampler import TetrablockSampler

logger = logging.getLogger(__name__)


class SampleCommand(Command):
    """
    sample --mode MODE --n COUNT: a JSON list of sampled tetrablock points.
    """

    name: str = "sample"
    help: str = "Sample points of the tetrablock, its boundary or its exterior"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument(
            "--mode", choices=[mode.value for mode in SampleMode], default=SampleMode.INTERIOR.value, help="Where"
        )
        parser.add_argument("--n", type=int, default=10, help="Number of points")

    def execute(self, args: argparse.Namespace, config: RunConfig, stdin: TextIO) -> CommandResult:
        points = TetrablockSampler.sample(args.n, SampleMode(args.mode), config.seed)
        logger.info("sampled %d %s points", len(points), args.mode)
        return CommandResult(0, [point.to_dict() for point in points])
