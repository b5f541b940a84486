"""The result type shared by all reduction passes."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable, Mapping

from tmlab.machine import Configuration, Machine
from tmlab.transforms.certificate import Certificate


@dataclass(frozen=True)
class ReducedMachine:
    """A transformed machine, its decoding certificate and the sizes its construction guarantees.

    ``encode`` turns an original starting tape and head into the reduced
    machine's starting configuration; ``claimed_bounds`` holds
    ``(states, symbols)`` upper bounds, ``None`` where the pass promises nothing.
    """

    machine: Machine
    certificate: Certificate
    claimed_bounds: tuple[float | None, float | None]
    encode: Callable[[Mapping[int, str], int], Configuration]

    def start(self, tape: Mapping[int, str] | None = None, head: int = 0) -> tuple[Configuration, Certificate]:
        """Starting configuration for an original run from ``tape``/``head``, and the certificate re-anchored to it."""
        config = self.encode(dict(tape or {}), head)
        cert = self.certificate
        if cert.kind == "symbol-blocks":
            cert = dataclasses.replace(cert, sim_origin=head * cert.block, orig_origin=head)
        else:
            cert = dataclasses.replace(cert, sim_origin=head, orig_origin=head)
        return config, cert

    def within_bounds(self) -> bool:
        ns, ms = self.claimed_bounds
        return (ns is None or self.machine.n <= ns) and (ms is None or self.machine.m <= ms)

    def bound_report(self) -> str:
        ns, ms = self.claimed_bounds
        fmt = lambda v: "-" if v is None else (f"{v:g}" if isinstance(v, float) else str(v))
        return f"states {self.machine.n} <= {fmt(ns)}, symbols {self.machine.m} <= {fmt(ms)}"
