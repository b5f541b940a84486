"""Exact Ackermann values with a cap on the size of every intermediate.

Variant used here: ``A(1,c) = 2c``, ``A(f,1) = 2``, ``A(f,c) = A(f-1, A(f,c-1))``,
so ``A(2,c) = 2**c`` and ``A(3,c)`` is a tower of ``c`` twos.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Overflow:
    """Where evaluation gave up: computing ``A(f, c)`` needed more than ``budget`` bits.

    ``c_bits`` is the bit length of the argument, which may itself be too
    large to print usefully.
    """

    f: int
    c_bits: int
    budget: int
    reason: str

    def __str__(self):
        return f"overflow at A({self.f}, <{self.c_bits}-bit c>): {self.reason}"


@dataclass(frozen=True)
class AckValue:
    value: int | None = None
    overflow: Overflow | None = None

    @property
    def exact(self) -> bool:
        return self.overflow is None

    def __str__(self):
        return str(self.value) if self.exact else str(self.overflow)


class _Over(Exception):
    def __init__(self, info: Overflow):
        self.info = info


def ackermann(f: int, c: int, bit_budget: int = 1 << 20) -> AckValue:
    if f < 1 or c < 1:
        raise ValueError("A(f, c) needs f >= 1 and c >= 1")
    if bit_budget < 2:
        raise ValueError("bit budget must be at least 2")
    try:
        return AckValue(_ack(f, c, bit_budget))
    except _Over as exc:
        return AckValue(overflow=exc.info)


@lru_cache(maxsize=4096)
def _ack(f: int, c: int, budget: int) -> int:
    if c == 1:
        return 2
    if f == 1:
        return _check(2 * c, 1, c, budget)
    if f == 2:
        if c + 1 > budget:
            raise _Over(Overflow(2, c.bit_length(), budget, f"2**c needs {c + 1} bits"))
        return 1 << c
    if f == 3:
        v = 2
        for _ in range(c - 1):
            if v + 1 > budget:
                raise _Over(Overflow(3, c.bit_length(), budget, "tower of twos exceeds the budget"))
            v = 1 << v
        return v
    v = 2
    for _ in range(c - 1):
        v = _ack(f - 1, v, budget)
    return v


def _check(v: int, f: int, c: int, budget: int) -> int:
    if v.bit_length() > budget:
        raise _Over(Overflow(f, c.bit_length(), budget, f"value needs {v.bit_length()} bits"))
    return v
