"""Turing machines on a bi-infinite tape: representation, single steps, bounded runs.

A machine is a finite table ``(state, symbol) -> Action``.  Entries may be
missing on purpose; reading such a pair is reported as an undefined
transition instead of being treated as a halt.  ``HALT`` is a pseudo-state
entered by an ordinary, counted transition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping

HALT = "HALT"
LEFT = "L"
RIGHT = "R"
DIRECTIONS = (LEFT, RIGHT)

# sentinels in compiled next-state arrays
_HALT_CODE = -1
_UNDEF_CODE = -2


class MachineError(ValueError):
    """Raised for structurally invalid machines."""


@dataclass(frozen=True)
class Action:
    next: str
    write: str
    dir: str

    def __post_init__(self):
        if self.dir not in DIRECTIONS:
            raise MachineError(f"direction must be L or R, got {self.dir!r}")


@dataclass(frozen=True, eq=False)
class Machine:
    states: tuple[str, ...]
    symbols: tuple[str, ...]
    blank: str
    start: str
    table: Mapping[tuple[str, str], Action]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "table", dict(self.table))
        if not self.states or not self.symbols:
            raise MachineError("a machine needs at least one state and one symbol")
        if len(set(self.states)) != len(self.states):
            raise MachineError("duplicate state names")
        if len(set(self.symbols)) != len(self.symbols):
            raise MachineError("duplicate symbol names")
        if HALT in self.states:
            raise MachineError(f"{HALT} is reserved and cannot be declared as a state")
        if self.blank not in self.symbols:
            raise MachineError(f"blank {self.blank!r} is not a declared symbol")
        if self.start not in self.states:
            raise MachineError(f"start {self.start!r} is not a declared state")
        states, symbols = set(self.states), set(self.symbols)
        for (q, e), act in self.table.items():
            if q not in states or e not in symbols:
                raise MachineError(f"transition key ({q}, {e}) uses an undeclared name")
            if act.write not in symbols:
                raise MachineError(f"({q}, {e}) writes undeclared symbol {act.write!r}")
            if act.next != HALT and act.next not in states:
                raise MachineError(f"({q}, {e}) moves to undeclared state {act.next!r}")

    @property
    def n(self) -> int:
        return len(self.states)

    @property
    def m(self) -> int:
        return len(self.symbols)

    def action(self, state: str, symbol: str) -> Action | None:
        return self.table.get((state, symbol))

    def __eq__(self, other):
        if not isinstance(other, Machine):
            return NotImplemented
        return (
            self.states == other.states
            and self.symbols == other.symbols
            and self.blank == other.blank
            and self.start == other.start
            and self.table == other.table
        )

    __hash__ = None

    def __repr__(self):
        return f"Machine(n={self.n}, m={self.m}, start={self.start!r}, blank={self.blank!r})"

    @cached_property
    def compiled(self) -> "Compiled":
        return Compiled.from_machine(self)


@dataclass(frozen=True)
class Compiled:
    """Integer-coded transition table, indexed by ``state * m + symbol``."""

    m: int
    state_index: Mapping[str, int]
    symbol_index: Mapping[str, int]
    nxt: tuple[int, ...]
    wr: tuple[int, ...]
    mv: tuple[int, ...]

    @classmethod
    def from_machine(cls, machine: Machine) -> "Compiled":
        si = {q: i for i, q in enumerate(machine.states)}
        ei = {e: i for i, e in enumerate(machine.symbols)}
        size = machine.n * machine.m
        nxt = [_UNDEF_CODE] * size
        wr = [0] * size
        mv = [0] * size
        for (q, e), act in machine.table.items():
            c = si[q] * machine.m + ei[e]
            nxt[c] = _HALT_CODE if act.next == HALT else si[act.next]
            wr[c] = ei[act.write]
            mv[c] = -1 if act.dir == LEFT else 1
        return cls(machine.m, si, ei, tuple(nxt), tuple(wr), tuple(mv))


@dataclass(frozen=True)
class Configuration:
    """Tape contents (non-blank cells only), head position, state, step count."""

    tape: Mapping[int, str] = field(default_factory=dict)
    head: int = 0
    state: str = ""
    steps: int = 0

    @classmethod
    def initial(cls, machine: Machine, head: int = 0, tape: Mapping[int, str] | None = None,
                state: str | None = None) -> "Configuration":
        cells = {p: s for p, s in (tape or {}).items() if s != machine.blank}
        return cls(cells, head, machine.start if state is None else state, 0)

    def read(self, pos: int, blank: str) -> str:
        return self.tape.get(pos, blank)

    def support(self) -> tuple[int, int] | None:
        if not self.tape:
            return None
        return min(self.tape), max(self.tape)

    def window(self, lo: int, hi: int, blank: str) -> list[str]:
        return [self.tape.get(p, blank) for p in range(lo, hi + 1)]


@dataclass(frozen=True)
class Halted:
    config: Configuration


@dataclass(frozen=True)
class UndefinedTransition:
    state: str
    symbol: str
    config: Configuration


class Outcome(enum.Enum):
    HALTED = "halted"
    BUDGET_EXHAUSTED = "budget-exhausted"
    UNDEFINED = "undefined-transition"


@dataclass(frozen=True)
class RunResult:
    outcome: Outcome
    steps: int
    final: Configuration
    undefined_at: tuple[str, str] | None = None

    @property
    def halted(self) -> bool:
        return self.outcome is Outcome.HALTED


def step(machine: Machine, config: Configuration) -> Configuration | Halted | UndefinedTransition:
    """Execute one transition. Pure: ``config`` is not modified."""
    if config.state not in machine.compiled.state_index:
        raise MachineError(f"configuration state {config.state!r} is not a machine state")
    sym = config.read(config.head, machine.blank)
    act = machine.action(config.state, sym)
    if act is None:
        return UndefinedTransition(config.state, sym, config)
    tape = dict(config.tape)
    if act.write == machine.blank:
        tape.pop(config.head, None)
    else:
        tape[config.head] = act.write
    head = config.head + (-1 if act.dir == LEFT else 1)
    if act.next == HALT:
        return Halted(Configuration(tape, head, HALT, config.steps + 1))
    return Configuration(tape, head, act.next, config.steps + 1)


# ---------------------------------------------------------------------------
# bounded runs


@dataclass
class Hooks:
    """Optional observers for :func:`run`.

    ``trace`` receives ``(step, state, pos, read, write, dir)`` for every
    executed transition.  ``on_snapshot`` is called every ``snapshot_every``
    steps with a :class:`Snapshot`.  ``on_enter`` is called with a snapshot
    whenever a state listed in ``watch`` is entered from a different state
    (self-loops do not count); returning True stops
    the run (reported as budget exhaustion at that step).
    """

    trace: Callable[[int, str, int, str, str, str], None] | None = None
    snapshot_every: int = 0
    on_snapshot: Callable[["Snapshot"], None] | None = None
    watch: Iterable[str] = ()
    on_enter: Callable[["Snapshot"], bool | None] | None = None

    def active(self) -> bool:
        return bool(self.trace or (self.snapshot_every and self.on_snapshot) or self.on_enter)


class Tape:
    """Growable two-sided integer tape backing the run loops."""

    def __init__(self, blank: int, cells: Mapping[int, int] | None = None, head: int = 0):
        cells = cells or {}
        lo = min([head, *cells])
        hi = max([head, *cells])
        pad = 64
        self.offset = pad - lo
        self.cells = [blank] * (hi - lo + 1 + 2 * pad)
        self.blank = blank
        for p, v in cells.items():
            self.cells[p + self.offset] = v

    def grow(self, idx: int) -> int:
        """Make raw index ``idx`` valid; return its new raw value."""
        n = len(self.cells)
        if idx < 0:
            extra = max(n, -idx + 64)
            self.cells[:0] = [self.blank] * extra
            self.offset += extra
            return idx + extra
        extra = max(n, idx - n + 64)
        self.cells.extend([self.blank] * extra)
        return idx

    def nonblank(self) -> dict[int, int]:
        b, off = self.blank, self.offset
        return {i - off: v for i, v in enumerate(self.cells) if v != b}


@dataclass(frozen=True)
class Snapshot:
    step: int
    state: str
    pos: int
    support_lo: int | None
    support_hi: int | None
    config: Configuration


def _to_config(machine: Machine, cells: Mapping[int, int], pos: int, state: str, steps: int) -> Configuration:
    syms = machine.symbols
    return Configuration({p: syms[v] for p, v in sorted(cells.items())}, pos, state, steps)


def run(machine: Machine, limit: int, hooks: Hooks | None = None,
        config: Configuration | None = None, engine: str = "auto") -> RunResult:
    """Run from ``config`` (default: blank tape, head 0, start state) for at most ``limit`` steps.

    ``engine`` selects the loop: ``"python"``, ``"numba"`` or ``"auto"``
    (numba for hook-free runs when it is installed).  All engines give
    identical results.
    """
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    if config is None:
        config = Configuration.initial(machine)
    comp = machine.compiled
    if config.state == HALT:
        return RunResult(Outcome.HALTED, config.steps, config)
    cells = {p: comp.symbol_index[s] for p, s in config.tape.items()}
    blank = comp.symbol_index[machine.blank]
    hooks = hooks if hooks is not None and hooks.active() else None
    if engine == "auto":
        engine = "numba" if hooks is None and limit > 200_000 and _fast_available() else "python"
    if engine == "numba":
        if hooks is not None:
            raise ValueError("the numba engine does not support hooks")
        from tmlab import _fast

        status, steps, pos, s, tape = _fast.run_compiled(
            comp, blank, cells, config.head, comp.state_index[config.state], limit)
    else:
        status, steps, pos, s, tape = _run_python(
            machine, comp, blank, cells, config.head, comp.state_index[config.state], limit, hooks)
    total = config.steps + steps
    if status == "halted":
        return RunResult(Outcome.HALTED, total, _to_config(machine, tape, pos, HALT, total))
    state = machine.states[s]
    final = _to_config(machine, tape, pos, state, total)
    if status == "undefined":
        sym = final.read(pos, machine.blank)
        return RunResult(Outcome.UNDEFINED, total, final, (state, sym))
    return RunResult(Outcome.BUDGET_EXHAUSTED, total, final)


def _fast_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _run_python(machine, comp, blank, cells, head, s, limit, hooks):
    m = comp.m
    table = list(zip(comp.nxt, comp.wr, comp.mv))
    tape = Tape(blank, cells, head)
    buf, off = tape.cells, tape.offset
    i = head + off
    steps = 0
    status = "budget"
    if hooks is None:
        while steps < limit:
            ns, w, d = table[s * m + buf[i]]
            if ns == _UNDEF_CODE:
                status = "undefined"
                break
            buf[i] = w
            i += d
            steps += 1
            if ns == _HALT_CODE:
                status = "halted"
                break
            s = ns
            if i < 0 or i >= len(buf):
                i = tape.grow(i)
                buf = tape.cells
        off = tape.offset
        return status, steps, i - off, s, tape.nonblank()

    names, syms = machine.states, machine.symbols
    trace = hooks.trace
    every = hooks.snapshot_every if hooks.on_snapshot else 0
    watch = {comp.state_index[q] for q in hooks.watch} if hooks.on_enter else set()

    def snap(state_name):
        nb = tape.nonblank()
        lo, hi = (min(nb), max(nb)) if nb else (None, None)
        pos = i - tape.offset
        return Snapshot(steps, state_name, pos, lo, hi, _to_config(machine, nb, pos, state_name, steps))

    while steps < limit:
        e = buf[i]
        ns, w, d = table[s * m + e]
        if ns == _UNDEF_CODE:
            status = "undefined"
            break
        buf[i] = w
        if trace is not None:
            trace(steps + 1, names[s], i - tape.offset, syms[e], syms[w], LEFT if d < 0 else RIGHT)
        i += d
        steps += 1
        if i < 0 or i >= len(buf):
            i = tape.grow(i)
            buf = tape.cells
        if ns == _HALT_CODE:
            status = "halted"
            break
        prev, s = s, ns
        if every and steps % every == 0:
            hooks.on_snapshot(snap(names[s]))
        if s in watch and s != prev and hooks.on_enter(snap(names[s])):
            break
    return status, steps, i - tape.offset, s, tape.nonblank()
