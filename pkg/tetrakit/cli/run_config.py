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
import math
import os
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import fields
from dataclasses import replace
from typing import Any
from typing import Dict
from typing import Mapping
from typing import Optional

from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.errors import TetrakitError
from tetrakit.linalg.matrix_codec import MatrixCodec
from tetrakit.linalg.tolerance import Tolerance
from tetrakit.tetra.battery_config import BatteryConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command needs besides its input: tolerances, grid sizes, battery settings,
    the seed, the dilation depth, parallelism and logging.

    Values are resolved in order: built-in defaults, then the environment (TETRAKIT_* variables,
    typically loaded from .env), then a --config JSON document, then explicit command-line flags.
    """

    atol: float = 1e-10
    rtol: float = 1e-8
    # None means the per-matrix default 1e-10 (1 + ||P||^2).
    clamp_tol: Optional[float] = None
    tol: float = 1e-9
    circle_grid: int = 256
    disc_grid: int = 64
    theta_grid: int = 512
    max_deg: int = 4
    n_polys: int = 64
    sup_samples: int = 10000
    seed: int = 0
    depth: int = 8
    threads: int = 0
    log_level: str = "info"
    log_file: Optional[str] = None

    # JSON keys of the config document.
    JSON_KEYS = {
        "atol": "atol",
        "rtol": "rtol",
        "clampTol": "clamp_tol",
        "tol": "tol",
        "circleGrid": "circle_grid",
        "discGrid": "disc_grid",
        "thetaGrid": "theta_grid",
        "maxDeg": "max_deg",
        "nPolys": "n_polys",
        "supSamples": "sup_samples",
        "seed": "seed",
        "depth": "depth",
        "threads": "threads",
        "logLevel": "log_level",
        "logFile": "log_file",
    }

    # Environment variables and the fields they set.
    ENVIRONMENT = {
        "TETRAKIT_THREADS": "threads",
        "TETRAKIT_SEED": "seed",
        "TETRAKIT_TOL": "tol",
        "TETRAKIT_LOG_LEVEL": "log_level",
        "TETRAKIT_LOG_FILE": "log_file",
    }

    POSITIVE = (
        "atol",
        "rtol",
        "tol",
        "circle_grid",
        "disc_grid",
        "theta_grid",
        "max_deg",
        "n_polys",
        "sup_samples",
        "depth",
    )
    NON_NEGATIVE = ("seed", "threads")

    def __post_init__(self):
        for name in self.POSITIVE:
            if getattr(self, name) <= 0:
                raise TetrakitError(f"Config value {name} must be positive, got {getattr(self, name)}")
        for name in self.NON_NEGATIVE:
            if getattr(self, name) < 0:
                raise TetrakitError(f"Config value {name} must not be negative, got {getattr(self, name)}")
        if self.clamp_tol is not None and self.clamp_tol <= 0:
            raise TetrakitError(f"Config value clamp_tol must be positive, got {self.clamp_tol}")

    @classmethod
    def _coerce(cls, name: str, value: Any) -> Any:
        """
        :return: value converted to the type of the field called name.
        """
        if value is None:
            return None
        if name in ("log_level", "log_file"):
            return str(value)
        if isinstance(value, bool):
            raise TetrakitError(f"Config value {name} must be a number, got {value!r}")
        try:
            number = float(value)
        except (TypeError, ValueError) as exception:
            raise TetrakitError(f"Config value {name} must be a number, got {value!r}") from exception
        if not math.isfinite(number):
            raise TetrakitError(f"Config value {name} must be finite, got {value!r}")
        if name in ("atol", "rtol", "tol", "clamp_tol"):
            return number
        if number != int(number):
            raise TetrakitError(f"Config value {name} must be an integer, got {value!r}")
        return int(number)

    def with_values(self, values: Mapping[str, Any]) -> "RunConfig":
        """
        :param values: Field names mapped to new values; None values are ignored.
        :return: A copy with those fields replaced.
        """
        known = {field.name for field in fields(self)}
        changes = {}
        for name, value in values.items():
            if name not in known:
                raise TetrakitError(f"Unknown config value '{name}'")
            if value is not None:
                changes[name] = self._coerce(name, value)
        return replace(self, **changes)

    def with_environment(self, environ: Optional[Mapping[str, str]] = None) -> "RunConfig":
        """
        :param environ: The environment, os.environ by default.
        :return: A copy with the TETRAKIT_* variables applied.
        """
        environ = os.environ if environ is None else environ
        values = {field: environ[variable] for variable, field in self.ENVIRONMENT.items() if environ.get(variable)}
        return self.with_values(values)

    def with_document(self, document: Any) -> "RunConfig":
        """
        :param document: A parsed RunConfig JSON object.
        :return: A copy with the document applied.
        """
        if not isinstance(document, dict):
            raise TetrakitError("The config file must hold a JSON object")
        unknown = set(document) - set(self.JSON_KEYS)
        if unknown:
            raise TetrakitError(f"Unknown config keys {sorted(unknown)}")
        return self.with_values({self.JSON_KEYS[key]: value for key, value in document.items()})

    @classmethod
    def resolve(
        cls,
        environ: Optional[Mapping[str, str]] = None,
        config_file: Optional[str] = None,
        overrides: Optional[Mapping[str, Any]] = None,
    ) -> "RunConfig":
        """
        :param environ: The environment, os.environ by default.
        :param config_file: Path of a RunConfig JSON document.
        :param overrides: Values of explicit command-line flags; None means the flag was not given.
        :return: The resolved config.
        """
        config = cls().with_environment(environ)
        if config_file:
            try:
                with open(config_file, "r", encoding="utf-8") as handle:
                    document = MatrixCodec.loads(handle.read())
            except OSError as exception:
                raise TetrakitError(f"Cannot read config file {config_file}: {exception}") from exception
            config = config.with_document(document)
        config = config.with_values(overrides or {})
        logger.debug("resolved run config %s", config.to_dict())
        return config

    def battery_config(self) -> BatteryConfig:
        """
        :return: The spectral set battery settings.
        """
        return BatteryConfig(max_deg=self.max_deg, n_polys=self.n_polys, sup_samples=self.sup_samples, seed=self.seed)

    def tolerance(self) -> Tolerance:
        """
        :return: The mixed absolute/relative tolerance.
        """
        return Tolerance(atol=self.atol, rtol=self.rtol)

    def tetrablock(self) -> Tetrablock:
        """
        :return: A membership evaluator with the configured grids.
        """
        return Tetrablock(circle_grid=self.circle_grid, disc_grid=self.disc_grid)

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: RunConfig JSON.
        """
        values = asdict(self)
        return {key: values[name] for key, name in self.JSON_KEYS.items()}
