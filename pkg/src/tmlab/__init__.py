"""Turing machine lab: simulation, word combinatorics, machine generation and size reductions."""

from tmlab.machine import (HALT, Action, Configuration, Hooks, Machine, MachineError, Outcome,
                           RunResult, run, step)
from tmlab.tmformat import FORMAT_VERSION, ParseError, parse_machine, serialize_machine

__version__ = "1.0.0"

__all__ = [
    "HALT", "Action", "Configuration", "Hooks", "Machine", "MachineError", "Outcome",
    "RunResult", "run", "step", "FORMAT_VERSION", "ParseError", "parse_machine",
    "serialize_machine", "__version__",
]
