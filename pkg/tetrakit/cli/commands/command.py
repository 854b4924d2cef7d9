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
from abc import ABC
from abc import abstractmethod
from typing import Any
from typing import TextIO

from tetrakit.cli.commands.command_result import CommandResult
from tetrakit.cli.run_config import RunConfig
from tetrakit.errors import TetrakitError
from tetrakit.linalg.matrix_codec import MatrixCodec

logger = logging.getLogger(__name__)


class Command(ABC):
    """
    Abstract Base Class of the subcommands of the command-line front end.
    """

    name: str = "command"
    help: str = ""

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser):
        """
        Declare the arguments of this subcommand.
        """
        raise NotImplementedError

    @abstractmethod
    def execute(self, args: argparse.Namespace, config: RunConfig, stdin: TextIO) -> CommandResult:
        """
        Run the subcommand.

        :param args: Parsed command-line arguments.
        :param config: The resolved run config.
        :param stdin: Where JSON input is read from when no --file is given.
        :return: Exit code and result document.
        """
        raise NotImplementedError

    @staticmethod
    def add_input_argument(parser: argparse.ArgumentParser):
        """
        Declare the --file argument of subcommands that read a JSON document.
        """
        parser.add_argument("--file", type=str, default=None, help="Read the JSON input from this file, not stdin")

    @staticmethod
    def read_input(args: argparse.Namespace, stdin: TextIO) -> Any:
        """
        :return: The parsed JSON document from --file or stdin, numbers as Decimal.
        """
        path = getattr(args, "file", None)
        if path:
            try:
                with open(path, "r", encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exception:
                raise TetrakitError(f"Cannot read input file {path}: {exception}") from exception
        else:
            text = stdin.read()
        if not text.strip():
            raise TetrakitError("No JSON input given")
        logger.debug("read %d characters of input", len(text))
        return MatrixCodec.loads(text)
