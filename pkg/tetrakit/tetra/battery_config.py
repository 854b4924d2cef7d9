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

from dataclasses import asdict
from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Tuple

from tetrakit.errors import TetrakitError


@dataclass(frozen=True)
class BatteryConfig:
    """
    Settings of the spectral set battery.

    max_deg, n_polys, sup_samples and seed drive the polynomial von Neumann stage; the rest
    shape the z-grid of the rho stage and the slice checks.
    """

    max_deg: int = 4
    n_polys: int = 64
    sup_samples: int = 10000
    seed: int = 0
    vn_tol: float = 1e-6
    z_circle: int = 32
    z_radii: Tuple[float, ...] = (0.25, 0.5, 0.75)
    z_ring_angles: int = 16
    slices: int = 32

    def __post_init__(self):
        for name in ("max_deg", "n_polys", "sup_samples", "z_circle", "z_ring_angles", "slices"):
            if getattr(self, name) < 1:
                raise TetrakitError(f"Battery setting {name} must be positive, got {getattr(self, name)}")
        if self.vn_tol <= 0:
            raise TetrakitError(f"Battery setting vn_tol must be positive, got {self.vn_tol}")

    # JSON keys of the battery config document.
    JSON_KEYS = {"maxDeg": "max_deg", "nPolys": "n_polys", "supSamples": "sup_samples", "seed": "seed"}

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: Battery config JSON {maxDeg, nPolys, supSamples, seed}.
        """
        values = asdict(self)
        return {key: values[field] for key, field in self.JSON_KEYS.items()}

    @classmethod
    def from_dict(cls, document: Dict[str, Any]) -> "BatteryConfig":
        """
        :param document: Battery config JSON; missing keys keep their defaults.
        :return: The config.
        """
        unknown = set(document) - set(cls.JSON_KEYS)
        if unknown:
            raise TetrakitError(f"Unknown battery settings {sorted(unknown)}")
        return cls(**{cls.JSON_KEYS[key]: int(value) for key, value in document.items()})
