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

import json
import math
from decimal import Decimal
from decimal import InvalidOperation
from typing import Any
from typing import Dict
from typing import List

import numpy as np

from tetrakit.errors import BadShape


class MatrixCodec:
    """
    JSON codec for complex matrices and scalars.

    Matrices are {"rows": n, "cols": m, "re": [[...]], "im": [[...]]} with row-major nested
    arrays; scalars are {"re": x, "im": y}. Numbers are parsed as Decimal first so that
    decoding never depends on locale or on float parsing shortcuts.
    """

    @staticmethod
    def loads(text: str) -> Any:
        """
        Parse JSON text with exact decimal numbers.

        :param text: The JSON document.
        :return: The parsed structure, numbers as Decimal.
        """
        return json.loads(text, parse_float=Decimal, parse_int=Decimal)

    @staticmethod
    def dumps(document: Any) -> str:
        """
        Serialize a document deterministically with sorted keys.

        Floats are written with the shortest repr that parses back to the same double, so the text pins
        every value as exactly as 17 significant digits would.
        """
        return json.dumps(document, sort_keys=True)

    @staticmethod
    def _number(value: Any) -> float:
        if isinstance(value, bool):
            raise BadShape(f"Expected a number, got {value!r}")
        if isinstance(value, Decimal):
            number = float(value)
        elif isinstance(value, (int, float)):
            number = float(value)
        elif isinstance(value, str):
            try:
                number = float(Decimal(value))
            except InvalidOperation as exception:
                raise BadShape(f"Expected a number, got {value!r}") from exception
        else:
            raise BadShape(f"Expected a number, got {value!r}")
        if not math.isfinite(number):
            raise BadShape(f"Non-finite number {value!r}")
        return number

    @classmethod
    def _count(cls, value: Any, name: str) -> int:
        number = cls._number(value)
        if number < 0 or number != int(number):
            raise BadShape(f"'{name}' must be a nonnegative integer, got {value!r}")
        return int(number)

    @classmethod
    def decode_matrix(cls, document: Any) -> np.ndarray:
        """
        :param document: A parsed matrix JSON object.
        :return: The complex matrix it describes.
        """
        if not isinstance(document, dict):
            raise BadShape("Matrix JSON must be an object")
        missing = [key for key in ("rows", "cols", "re") if key not in document]
        if missing:
            raise BadShape(f"Matrix JSON is missing {missing}")

        rows = cls._count(document["rows"], "rows")
        cols = cls._count(document["cols"], "cols")
        real = cls._grid(document["re"], rows, cols, "re")
        imag = cls._grid(document.get("im", [[0] * cols for _ in range(rows)]), rows, cols, "im")
        matrix = np.zeros((rows, cols), dtype=complex)
        for i in range(rows):
            for j in range(cols):
                matrix[i, j] = complex(real[i][j], imag[i][j])
        return matrix

    @classmethod
    def _grid(cls, value: Any, rows: int, cols: int, name: str) -> List[List[float]]:
        if not isinstance(value, list) or len(value) != rows:
            raise BadShape(f"'{name}' must have {rows} rows")
        grid: List[List[float]] = []
        for row in value:
            if not isinstance(row, list) or len(row) != cols:
                raise BadShape(f"Every row of '{name}' must have {cols} entries")
            grid.append([cls._number(entry) for entry in row])
        return grid

    @staticmethod
    def encode_matrix(matrix: np.ndarray) -> Dict[str, Any]:
        """
        :param matrix: A 2-d array.
        :return: Its matrix JSON object.
        """
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.ndim != 2:
            raise BadShape(f"Expected a 2-d matrix, got {matrix.ndim} dimensions")
        return {
            "rows": int(matrix.shape[0]),
            "cols": int(matrix.shape[1]),
            "re": [[float(entry) for entry in row] for row in matrix.real],
            "im": [[float(entry) for entry in row] for row in matrix.imag],
        }

    @classmethod
    def decode_complex(cls, document: Any) -> complex:
        """
        :param document: A parsed {"re", "im"} object, or a bare number.
        :return: The complex scalar.
        """
        if isinstance(document, dict):
            if "re" not in document:
                raise BadShape("Complex JSON is missing 're'")
            return complex(cls._number(document["re"]), cls._number(document.get("im", 0)))
        return complex(cls._number(document), 0.0)

    @staticmethod
    def encode_float(value: float) -> Any:
        """
        :return: value as a float, or None when it is not finite (JSON has no infinities).
        """
        value = float(value)
        return value if math.isfinite(value) else None

    @staticmethod
    def encode_complex(value: complex) -> Dict[str, float]:
        """
        :return: The {"re", "im"} object of a complex scalar.
        """
        value = complex(value)
        return {"re": float(value.real), "im": float(value.imag)}
