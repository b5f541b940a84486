"""Seeded random machines that halt quickly from the blank tape."""

from __future__ import annotations

import random

from tmlab.machine import HALT, Action, Machine, run


def random_machine(rng: random.Random, n: int, m: int, halt_weight: float = 0.15) -> Machine:
    states = tuple(f"q{i}" for i in range(n))
    symbols = tuple(str(e) for e in range(m))
    table = {}
    for q in states:
        for e in symbols:
            nxt = HALT if rng.random() < halt_weight else rng.choice(states)
            table[(q, e)] = Action(nxt, rng.choice(symbols), rng.choice("LR"))
    return Machine(states, symbols, "0", "q0", table)


def halting_corpus(seed: int, count: int = 100, max_steps: int = 200,
                   states=(1, 2, 3, 4), symbols=(2, 3)) -> list[Machine]:
    """``count`` machines with sizes drawn from ``states`` x ``symbols`` that halt within ``max_steps``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        mach = random_machine(rng, rng.choice(states), rng.choice(symbols))
        if run(mach, max_steps).halted:
            out.append(mach)
    return out
