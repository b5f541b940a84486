"""Exhaustive Busy Beaver search over tiny classes.

Every total table over ``n`` states and ``m`` symbols is run from the blank
tape; each entry picks a next state (or HALT), a symbol and a direction, so
a class has ``(2m(n+1))**(n*m)`` machines.  The halting transition counts
as a step.  Machines are numbered by reading the table as a base-``2m(n+1)``
number (entry ``(q, e)`` at digit ``q*m + e``), and the champion is the
lowest-numbered machine with the most steps.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numba
import numpy as np

from tmlab.machine import HALT, Action, Machine, run

DEFAULT_LIMIT = 50_000_000


class ClassTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class BBResult:
    n: int
    m: int
    cutoff: int
    champion_steps: int
    champion: Machine | None
    champion_index: int
    halting: int
    exceeded: int
    undefined: int = 0

    @property
    def total(self) -> int:
        return self.halting + self.exceeded + self.undefined


def class_size(n: int, m: int) -> int:
    return (2 * m * (n + 1)) ** (n * m)


def decode_index(n: int, m: int, index: int) -> Machine:
    """The machine with the given number; state ``q{i}`` for row ``i``, symbols ``0..m-1``."""
    base = 2 * m * (n + 1)
    states = tuple(f"q{i}" for i in range(n))
    symbols = tuple(str(e) for e in range(m))
    table = {}
    for q in range(n):
        for e in range(m):
            index, d = divmod(index, base)
            nxt, rest = divmod(d, 2 * m)
            write, mv = divmod(rest, 2)
            table[(states[q], symbols[e])] = Action(HALT if nxt == n else states[nxt], symbols[write], "LR"[mv])
    return Machine(states, symbols, "0", "q0", table)


@numba.njit(cache=True)
def _scan(n, m, cutoff, lo, hi):
    base = 2 * m * (n + 1)
    cells = n * m
    digits = np.zeros(cells, dtype=np.int64)
    rem = lo
    for j in range(cells):
        digits[j] = rem % base
        rem //= base
    nxt = np.empty(cells, dtype=np.int64)
    wr = np.empty(cells, dtype=np.int64)
    mv = np.empty(cells, dtype=np.int64)
    width = 2 * cutoff + 3
    tape = np.zeros(width, dtype=np.int64)
    best_steps = -1
    best_index = -1
    halting = 0
    exceeded = 0
    for idx in range(lo, hi):
        has_halt = False
        for j in range(cells):
            d = digits[j]
            nxt[j] = d // (2 * m)
            r = d % (2 * m)
            wr[j] = r // 2
            mv[j] = 1 if r % 2 == 1 else -1
            if nxt[j] == n:
                has_halt = True
        if not has_halt:
            exceeded += 1
        else:
            pos = cutoff + 1
            lo_used = pos
            hi_used = pos
            s = 0
            steps = 0
            halted = False
            while steps < cutoff:
                c = s * m + tape[pos]
                tape[pos] = wr[c]
                pos += mv[c]
                steps += 1
                if pos < lo_used:
                    lo_used = pos
                if pos > hi_used:
                    hi_used = pos
                if nxt[c] == n:
                    halted = True
                    break
                s = nxt[c]
            for p in range(lo_used, hi_used + 1):
                tape[p] = 0
            if halted:
                halting += 1
                if steps > best_steps:
                    best_steps = steps
                    best_index = idx
            else:
                exceeded += 1
        # odometer increment
        j = 0
        while j < cells:
            digits[j] += 1
            if digits[j] < base:
                break
            digits[j] = 0
            j += 1
    return best_steps, best_index, halting, exceeded


def _scan_range(args):
    n, m, cutoff, lo, hi = args
    return tuple(int(x) for x in _scan(n, m, cutoff, lo, hi))


def bb_enumerate(n: int, m: int, cutoff: int, jobs: int = 1, limit: int = DEFAULT_LIMIT) -> BBResult:
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if cutoff < 1:
        raise ValueError("cutoff must be positive")
    total = class_size(n, m)
    if total > limit:
        raise ClassTooLarge(f"class ({n},{m}) has {total} machines, above the limit {limit}")
    parts = max(1, min(jobs, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    work = [(n, m, cutoff, bounds[i], bounds[i + 1]) for i in range(parts)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_scan_range, work))
    else:
        results = [_scan_range(w) for w in work]
    best_steps, best_index = -1, -1
    halting = exceeded = 0
    for steps, index, h, x in results:  # parts are in index order, so ties keep the lowest index
        halting += h
        exceeded += x
        if steps > best_steps:
            best_steps, best_index = steps, index
    champion = decode_index(n, m, best_index) if best_index >= 0 else None
    return BBResult(n, m, cutoff, max(best_steps, 0), champion, best_index, halting, exceeded)


def bb_tree(n: int, m: int, cutoff: int) -> BBResult:
    """Same counts by lazy enumeration: only table entries a run actually reads are branched on.

    A run that ends after fixing ``u`` entries stands for ``choices**(n*m-u)``
    machines.  Used as an independent cross-check of :func:`bb_enumerate`.
    """
    choices = 2 * m * (n + 1)
    cells = n * m
    best = 0
    halting = exceeded = 0

    def explore(table, tape, pos, s, steps):
        nonlocal best, halting, exceeded
        while True:
            if steps >= cutoff:
                exceeded += choices ** (cells - len(table))
                return
            key = s * m + tape.get(pos, 0)
            if key not in table:
                for d in range(choices):
                    t2 = dict(table)
                    t2[key] = d
                    explore(t2, dict(tape), pos, s, steps)
                return
            d = table[key]
            nxt, rest = divmod(d, 2 * m)
            write, mv = divmod(rest, 2)
            tape[pos] = write
            pos += 1 if mv else -1
            steps += 1
            if nxt == n:
                halting += choices ** (cells - len(table))
                best = max(best, steps)
                return
            s = nxt

    explore({}, {}, 0, 0, 0)
    return BBResult(n, m, cutoff, best, None, -1, halting, exceeded)


def replay(result: BBResult) -> int:
    """Re-run the champion; returns its step count."""
    if result.champion is None:
        return 0
    return run(result.champion, result.cutoff).steps
