# Copyright 2025 The gevrey developers
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

import functools
from typing import (
    List,
    Tuple,
)

from gevrey.utilities.amendments import amend_integer

DEFAULT_MAXIMUM_ORDER = 12


class StirlingTables:
    """Stirling numbers up to a maximum order, built once by their recurrences.

    S2(j, k) counts partitions of a j-set into k blocks and satisfies
    S2(j + 1, k + 1) = S2(j, k) + (k + 1)·S2(j, k + 1). They expand D^j in the basis
    z^k·d^k/dz^k.

    The signed numbers of the first kind s(j, k) satisfy
    s(j + 1, k) = s(j, k - 1) - j·s(j, k) and expand z^j·d^j/dz^j in the basis D^k.
    The two lower triangular matrices are inverse to each other.

    Parameters
    ----------
    maximum_order : int
        Largest j in the tables.
    """

    __slots__ = (
        "_maximum_order",
        "_second_kind",
        "_first_kind_signed",
    )

    def __init__(
        self,
        maximum_order: int,
    ):
        self._maximum_order = amend_integer(
            integer=maximum_order,
            name="Maximum order",
            type_mismatch_action="error",
            minimum_value=0,
            value_violation_action="error",
        )
        size = self._maximum_order + 1

        second_kind = [[0] * size for _ in range(size)]
        first_kind_signed = [[0] * size for _ in range(size)]
        second_kind[0][0] = 1
        first_kind_signed[0][0] = 1
        for j in range(self._maximum_order):
            for k in range(j + 2):
                previous = second_kind[j][k - 1] if k > 0 else 0
                if k <= j:
                    second_kind[j + 1][k] = previous + k * second_kind[j][k]
                else:
                    second_kind[j + 1][k] = previous

                previous = first_kind_signed[j][k - 1] if k > 0 else 0
                if k <= j:
                    first_kind_signed[j + 1][k] = previous - j * first_kind_signed[j][k]
                else:
                    first_kind_signed[j + 1][k] = previous

        self._second_kind = tuple(tuple(row) for row in second_kind)
        self._first_kind_signed = tuple(tuple(row) for row in first_kind_signed)

    @property
    def maximum_order(self) -> int:
        return self._maximum_order

    def _check(
        self,
        j: int,
        k: int,
    ) -> Tuple[int, int]:
        j = amend_integer(
            integer=j,
            name="Stirling index j",
            type_mismatch_action="error",
            minimum_value=0,
            maximum_value=self._maximum_order,
            value_violation_action="error",
            warning_stack_level=4,
        )
        k = amend_integer(
            integer=k,
            name="Stirling index k",
            type_mismatch_action="error",
            minimum_value=0,
            maximum_value=j,
            value_violation_action="error",
            warning_stack_level=4,
        )

        return j, k

    def second_kind(
        self,
        j: int,
        k: int,
    ) -> int:
        j, k = self._check(j, k)

        return self._second_kind[j][k]

    def first_kind_signed(
        self,
        j: int,
        k: int,
    ) -> int:
        j, k = self._check(j, k)

        return self._first_kind_signed[j][k]

    def second_kind_row(
        self,
        j: int,
    ) -> List[int]:
        j, _ = self._check(j, 0)

        return list(self._second_kind[j][: j + 1])

    def first_kind_signed_row(
        self,
        j: int,
    ) -> List[int]:
        j, _ = self._check(j, 0)

        return list(self._first_kind_signed[j][: j + 1])


@functools.lru_cache(maxsize=None)
def get_stirling_tables(
    maximum_order: int = DEFAULT_MAXIMUM_ORDER,
) -> StirlingTables:
    """Shared read-only tables for a maximum order."""
    return StirlingTables(maximum_order)


def _tables_for(j) -> StirlingTables:
    if isinstance(j, int) and not isinstance(j, bool) and j > DEFAULT_MAXIMUM_ORDER:
        return get_stirling_tables(j)

    return get_stirling_tables(DEFAULT_MAXIMUM_ORDER)


def stirling2(
    j: int,
    k: int,
) -> int:
    """Stirling number of the second kind S2(j, k), for 0 ≤ k ≤ j.

    Raises
    ------
    TypeError
        When an index isn't an int.

    ValueError
        When the indices are out of range.
    """
    return _tables_for(j).second_kind(j, k)


def stirling1_signed(
    j: int,
    k: int,
) -> int:
    """Signed Stirling number of the first kind s(j, k), for 0 ≤ k ≤ j.

    Raises
    ------
    TypeError
        When an index isn't an int.

    ValueError
        When the indices are out of range.
    """
    return _tables_for(j).first_kind_signed(j, k)
