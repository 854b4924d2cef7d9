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
from tetrakit.suites.suite_registry import SuiteRegistry

logger = logging.getLogger(__name__)


class SuiteCommand(Command):
    """
    suite --suite NAME --n COUNT: runs a property suite and reports pass/fail counts, worst values
    and failing witnesses. Exit 0 only when every case passed.
    """

    name: str = "suite"
    help: str = "Run a property suite"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument("--suite", required=True, choices=SuiteRegistry.names(), help="The suite to run")
        parser.add_argument("--n", type=int, default=100, help="Number of cases")

    def execute(self, args: argparse.Namespace, config: RunConfig, stdin: TextIO) -> CommandResult:
        suite = SuiteRegistry.create(args.suite, tol=config.tol, config=config.battery_config())
        result = suite.run(args.n, seed=config.seed, threads=config.threads)
        return CommandResult(0 if result.ok else 1, result.to_dict())
