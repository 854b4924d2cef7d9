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
from typing import List
from typing import Tuple

import numpy as np
from scipy.stats import unitary_group

from tetrakit.domains.point3 import Point3
from tetrakit.domains.tetrablock_sampler import TetrablockSampler
from tetrakit.gamma.operator_pair import OperatorPair
from tetrakit.tetra.operator_triple import OperatorTriple

logger = logging.getLogger(__name__)


class TripleFamilies:
    """
    Reproducible generators of commuting triples and pairs for the property suites.

    Case `index` of a family draws from SeedSequence(seed, spawn_key=(index,)), the index-th child
    of SeedSequence(seed), so cases can be produced in any order or split across workers.
    """

    MAX_SIZE: int = 8
    BOUNDARY_SHARE: float = 0.2
    NONCONTRACTION_RADIUS: float = 1.3

    @staticmethod
    def rng(index: int, seed: int) -> np.random.Generator:
        """
        :return: The generator of case index under seed.
        """
        return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))

    @classmethod
    def size_of(cls, index: int) -> int:
        """
        :return: Sizes cycle through 1..MAX_SIZE.
        """
        return 1 + index % cls.MAX_SIZE

    @staticmethod
    def haar(rng: np.random.Generator, size: int) -> np.ndarray:
        """
        :return: A Haar-random unitary; a random phase for size 1.
        """
        if size == 1:
            return np.exp(2j * np.pi * rng.random()).reshape(1, 1)
        return unitary_group.rvs(dim=size, random_state=rng)

    @classmethod
    def closed_points(cls, rng: np.random.Generator, count: int) -> List[Point3]:
        """
        Points of the closed tetrablock: pi of matrices of norm below 0.99, and pi of unitaries
        for about BOUNDARY_SHARE of them.
        """
        matrices = TetrablockSampler.gaussian(rng, count)
        norms = np.linalg.norm(matrices, ord=2, axis=(1, 2))
        radii = TetrablockSampler.INTERIOR_RADIUS * rng.random(count)
        matrices = matrices * (radii / norms)[:, None, None]
        on_boundary = rng.random(count) < cls.BOUNDARY_SHARE
        if np.any(on_boundary):
            matrices[on_boundary] = unitary_group.rvs(dim=2, size=int(on_boundary.sum()), random_state=rng).reshape(
                -1, 2, 2
            )
        return TetrablockSampler.pi_batch(matrices)

    @staticmethod
    def conjugated(entries: List[Tuple[complex, complex, complex]], unitary: np.ndarray) -> OperatorTriple:
        """
        :return: U diag(entries) U* for each of the three coordinates.
        """
        columns = np.asarray(entries, dtype=complex).reshape(-1, 3)
        adjoint = unitary.conj().T
        return OperatorTriple.of(
            unitary @ np.diag(columns[:, 0]) @ adjoint,
            unitary @ np.diag(columns[:, 1]) @ adjoint,
            unitary @ np.diag(columns[:, 2]) @ adjoint,
        )

    @classmethod
    def certified_entries(cls, index: int, seed: int = 0) -> List[Tuple[complex, complex, complex]]:
        """
        :return: The diagonal of the index-th certified triple, before conjugation.
        """
        rng = cls.rng(index, seed)
        return [point.as_tuple() for point in cls.closed_points(rng, cls.size_of(index))]

    @classmethod
    def certified(cls, index: int, seed: int = 0) -> OperatorTriple:
        """
        A normal triple with joint spectrum in the closed tetrablock: a diagonal of closed tetrablock
        points conjugated by a Haar unitary.
        """
        rng = cls.rng(index, seed)
        size = cls.size_of(index)
        entries = [point.as_tuple() for point in cls.closed_points(rng, size)]
        return cls.conjugated(entries, cls.haar(rng, size))

    @classmethod
    def diagonal_certified(cls, index: int, seed: int = 0) -> OperatorTriple:
        """
        :return: The certified triple of index before conjugation.
        """
        return OperatorTriple.diagonal(cls.certified_entries(index, seed))

    @classmethod
    def noncontraction(cls, index: int, seed: int = 0) -> OperatorTriple:
        """
        Commuting triples that are not tetrablock contractions. Even indices carry a diagonal with one
        point pushed outside the closed tetrablock, conjugated by a Haar unitary; odd indices are
        (M, M^2, M^3) for a random M rescaled to spectral radius NONCONTRACTION_RADIUS.
        """
        rng = cls.rng(index, seed)
        size = cls.size_of(index)
        if index % 2 == 1:
            matrix = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
            radius = float(np.max(np.abs(np.linalg.eigvals(matrix))))
            matrix = matrix * (cls.NONCONTRACTION_RADIUS / radius)
            square = matrix @ matrix
            return OperatorTriple.of(matrix, square, square @ matrix)

        points = cls.closed_points(rng, size)
        outside = int(rng.integers(size))
        points[outside] = TetrablockSampler.push_outside(points[outside])
        return cls.conjugated([point.as_tuple() for point in points], cls.haar(rng, size))

    @staticmethod
    def disc_points(rng: np.random.Generator, count: int) -> np.ndarray:
        """
        :return: count points of the closed unit disc, uniform in area.
        """
        return np.sqrt(rng.random(count)) * np.exp(2j * np.pi * rng.random(count))

    @classmethod
    def gamma_pair(cls, index: int, seed: int = 0) -> OperatorPair:
        """
        :return: U diag(z1 + z2) U*, U diag(z1 z2) U* for points z1, z2 of the closed disc.
        """
        rng = cls.rng(index, seed)
        size = cls.size_of(index)
        first = cls.disc_points(rng, size)
        second = cls.disc_points(rng, size)
        unitary = cls.haar(rng, size)
        adjoint = unitary.conj().T
        return OperatorPair.of(
            unitary @ np.diag(first + second) @ adjoint, unitary @ np.diag(first * second) @ adjoint
        )

    @classmethod
    def shared_p_gamma_pairs(cls, index: int, seed: int = 0) -> Tuple[OperatorPair, OperatorPair]:
        """
        Two Gamma-contractions (S1, P), (S2, P) sharing P, with diagonal hence commuting fundamental operators.

        For p = z1 z2 the second sum is w + p / w with |p| <= |w| <= 1, so (w + p / w, p) is in Gamma too.
        """
        rng = cls.rng(index, seed)
        size = cls.size_of(index)
        first = cls.disc_points(rng, size)
        second = cls.disc_points(rng, size)
        p = first * second
        moduli = np.abs(p) + (1.0 - np.abs(p)) * rng.random(size)
        w = np.maximum(moduli, np.finfo(float).tiny) * np.exp(2j * np.pi * rng.random(size))
        unitary = cls.haar(rng, size)
        adjoint = unitary.conj().T
        p_matrix = unitary @ np.diag(p) @ adjoint
        return (
            OperatorPair.of(unitary @ np.diag(first + second) @ adjoint, p_matrix),
            OperatorPair.of(unitary @ np.diag(w + p / w) @ adjoint, p_matrix),
        )
