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
import os
import sys
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import TextIO

import numpy as np
from dotenv import load_dotenv

from tetrakit.cli.commands.command import Command
from tetrakit.cli.commands.dilate_command import DilateCommand
from tetrakit.cli.commands.point_command import PointCommand
from tetrakit.cli.commands.sample_command import SampleCommand
from tetrakit.cli.commands.suite_command import SuiteCommand
from tetrakit.cli.commands.triple_command import TripleCommand
from tetrakit.cli.log_bridge import LogBridge
from tetrakit.cli.run_config import RunConfig
from tetrakit.errors import TetrakitError
from tetrakit.linalg.matrix_codec import MatrixCodec

logger = logging.getLogger(__name__)

# Exit code of every error: bad input, a failed precondition or a numerical failure.
EXIT_ERROR = 2


class TetrakitCli:
    """Command-line front end: JSON in on stdin or --file, JSON out on stdout, diagnostics on stderr."""

    def __init__(self, root_dir: Optional[str] = None):
        """
        :param root_dir: Directory holding the .env file, the current directory by default.
        """
        self.root_dir: str = root_dir or os.getcwd()
        self.commands: Dict[str, Command] = {
            command.name: command
            for command in (PointCommand(), TripleCommand(), DilateCommand(), SuiteCommand(), SampleCommand())
        }
        self.log_bridge: Optional[LogBridge] = None

    def load_env_variables(self):
        """Load the .env file of the root directory into the environment, if there is one."""
        env_path = os.path.join(self.root_dir, ".env")
        if os.path.exists(env_path):
            load_dotenv(env_path)

    def build_parser(self) -> argparse.ArgumentParser:
        """Build the parser with the global flags and one subparser per command."""
        parser = argparse.ArgumentParser(
            prog="tetrakit",
            description="Numerical toolkit for the tetrablock and tetrablock contractions.",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        parser.add_argument("--config", type=str, default=None, help="RunConfig JSON file")
        parser.add_argument("--seed", type=int, default=None, help="Root seed of every random draw")
        parser.add_argument("--tol", type=float, default=None, help="Decision tolerance")
        parser.add_argument("--threads", type=int, default=None, help="Worker threads of the suites, 0 for serial")
        parser.add_argument("--log-level", type=str, default=None, help="Console log level")

        subparsers = parser.add_subparsers(dest="command", required=True)
        for command in self.commands.values():
            subparser = subparsers.add_parser(
                command.name, help=command.help, formatter_class=argparse.ArgumentDefaultsHelpFormatter
            )
            command.add_arguments(subparser)
        return parser

    @staticmethod
    def overrides(args: argparse.Namespace) -> Dict[str, Any]:
        """
        :return: The config values given explicitly as flags.
        """
        return {
            "seed": args.seed,
            "tol": args.tol,
            "threads": args.threads,
            "log_level": args.log_level,
            "depth": getattr(args, "depth", None),
        }

    @staticmethod
    def report_error(exception: Exception, stderr: TextIO):
        """Write a one-line description of the error to stderr."""
        if isinstance(exception, TetrakitError):
            stderr.write(MatrixCodec.dumps(exception.to_dict()) + "\n")
        else:
            stderr.write(MatrixCodec.dumps({"error": exception.__class__.__name__, "message": str(exception)}) + "\n")

    def main(
        self,
        argv: Optional[List[str]] = None,
        stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
    ) -> int:
        """
        Parse the arguments, resolve the config and run one command.

        :return: The exit code: 0 success, 1 negative answer, 2 error.
        """
        stdin = stdin or sys.stdin
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr
        self.load_env_variables()
        args = self.build_parser().parse_args(argv)

        try:
            config = RunConfig.resolve(config_file=args.config, overrides=self.overrides(args))
        except TetrakitError as exception:
            self.report_error(exception, stderr)
            return EXIT_ERROR

        self.log_bridge = LogBridge(level=config.log_level, log_file=config.log_file, stream=stderr)
        try:
            logger.info("tetrakit %s started", args.command)
            result = self.commands[args.command].execute(args, config, stdin)
            logger.info("tetrakit %s finished with exit code %d", args.command, result.exit_code)
        except (ValueError, ArithmeticError, np.linalg.LinAlgError) as exception:
            # TetrakitError and JSONDecodeError are ValueErrors; Decimal parsing raises ArithmeticError.
            logger.debug("tetrakit %s failed", args.command, exc_info=True)
            self.report_error(exception, stderr)
            return EXIT_ERROR
        finally:
            self.log_bridge.close()

        stdout.write(MatrixCodec.dumps(result.document) + "\n")
        return result.exit_code


def main() -> int:
    """Entry point of the tetrakit console script."""
    return TetrakitCli().main()


if __name__ == "__main__":
    sys.exit(main())
