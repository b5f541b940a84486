"""Small reference machines used in tests, examples and the CLI."""

from __future__ import annotations

from tmlab.machine import HALT, Action, Configuration, Machine


def four_step_machine() -> Machine:
    """Four transitions, halts after 4 steps leaving ``3 2`` on the tape (started at position 1)."""
    table = {
        ("q1", "0"): Action("q2", "1", "R"),
        ("q2", "0"): Action("q3", "2", "L"),
        ("q3", "1"): Action("q4", "3", "L"),
        ("q4", "0"): Action(HALT, "0", "R"),
    }
    return Machine(("q1", "q2", "q3", "q4"), ("0", "1", "2", "3"), "0", "q1", table)


def four_step_start(machine: Machine | None = None) -> Configuration:
    """Blank tape with the head on position 1."""
    return Configuration.initial(machine or four_step_machine(), head=1)


def immediate_halt_machine() -> Machine:
    return Machine(("q1",), ("0",), "0", "q1", {("q1", "0"): Action(HALT, "0", "R")})


def transfer_example_machine() -> Machine:
    """27 states named by their index; three transitions exercise a base-3 state transfer.

    ``7 --e1--> 15`` moving left, ``15 --e3--> 4`` moving right, ``4 --e2--> 8`` moving left.
    """
    states = tuple(str(i) for i in range(27))
    symbols = ("e0", "e1", "e2", "e3", "e4", "e5", "e6")
    table = {
        ("7", "e1"): Action("15", "e2", "L"),
        ("15", "e3"): Action("4", "e5", "R"),
        ("4", "e2"): Action("8", "e6", "L"),
    }
    return Machine(states, symbols, "e0", "7", table)
