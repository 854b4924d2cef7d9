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
from enum import Enum
from typing import List

import numpy as np
from scipy.stats import unitary_group

from tetrakit.domains.point3 import Point3
from tetrakit.domains.tetrablock import Tetrablock
from tetrakit.errors import TetrakitError

logger = logging.getLogger(__name__)


class SampleMode(str, Enum):
    """
    Where sampled points are placed relative to the tetrablock.
    """

    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"
    NEAR_BOUNDARY = "near_boundary"


class TetrablockSampler:
    """
    Reproducible point samples built through pi of random 2x2 matrices.

    Indices are grouped in chunks of CHUNK; chunk k draws from the k-th child of
    SeedSequence(seed), so any split of chunks across workers reproduces the serial list.
    """

    CHUNK: int = 256
    INTERIOR_RADIUS: float = 0.99
    EXTERIOR_FACTOR: float = 1.25
    EXTERIOR_MARGIN: float = -1e-2
    MAX_RESCALES: int = 200

    @classmethod
    def sample(cls, count: int, mode: SampleMode = SampleMode.INTERIOR, seed: int = 0) -> List[Point3]:
        """
        :param count: Number of points, at least one.
        :param mode: Sampling mode.
        :param seed: Seed of the root SeedSequence.
        :return: count points.
        """
        if count < 1:
            raise TetrakitError(f"Sample count must be at least 1, got {count}")
        mode = SampleMode(mode)
        chunks = (count + cls.CHUNK - 1) // cls.CHUNK
        children = np.random.SeedSequence(seed).spawn(chunks)
        points: List[Point3] = []
        for child in children:
            points.extend(cls.sample_chunk(mode, child))
        logger.debug("sampled %d %s points from seed %d", count, mode.value, seed)
        return points[:count]

    @classmethod
    def sample_chunk(cls, mode: SampleMode, seed_sequence: np.random.SeedSequence) -> List[Point3]:
        """
        :return: CHUNK points drawn from one child seed sequence.
        """
        rng = np.random.default_rng(seed_sequence)
        if mode == SampleMode.BOUNDARY:
            matrices = unitary_group.rvs(dim=2, size=cls.CHUNK, random_state=rng)
            return cls.pi_batch(matrices)

        matrices = cls.gaussian(rng, cls.CHUNK)
        norms = np.linalg.norm(matrices, ord=2, axis=(1, 2))
        if mode == SampleMode.NEAR_BOUNDARY:
            target = 1.0 - 10.0 ** (-rng.uniform(3.0, 6.0, size=cls.CHUNK))
        else:
            target = cls.INTERIOR_RADIUS * rng.random(cls.CHUNK)
        matrices = matrices * (target / norms)[:, None, None]
        points = cls.pi_batch(matrices)
        if mode == SampleMode.EXTERIOR:
            points = [cls.push_outside(point) for point in points]
        return points

    @staticmethod
    def gaussian(rng: np.random.Generator, count: int) -> np.ndarray:
        """
        :return: count complex Gaussian 2x2 matrices.
        """
        return rng.standard_normal((count, 2, 2)) + 1j * rng.standard_normal((count, 2, 2))

    @staticmethod
    def pi_batch(matrices: np.ndarray) -> List[Point3]:
        """
        :return: pi of every 2x2 matrix of a (count, 2, 2) array.
        """
        x1 = matrices[:, 0, 0]
        x2 = matrices[:, 1, 1]
        x3 = x1 * x2 - matrices[:, 0, 1] * matrices[:, 1, 0]
        return [Point3(a, b, c) for a, b, c in zip(x1, x2, x3)]

    @classmethod
    def push_outside(cls, x: Point3) -> Point3:
        """
        Rescale (x1, x2, x3) -> (r x1, r x2, r^2 x3) until the point is clearly outside the closed tetrablock.
        """
        for _ in range(cls.MAX_RESCALES):
            if Tetrablock.margin_awy5(x)[0] < cls.EXTERIOR_MARGIN:
                return x
            x = x.scaled(cls.EXTERIOR_FACTOR)
        raise TetrakitError(f"Could not push {x.as_tuple()} outside the tetrablock")
