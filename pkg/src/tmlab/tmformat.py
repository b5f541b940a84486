"""Line-based text format for machines.

::

    # comment
    symbols: Y X 1 2
    states: a b
    blank: Y
    start: a
    a Y -> b X R
    b X -> HALT X L

Names are whitespace-free tokens; ``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

from pathlib import Path

from tmlab.machine import DIRECTIONS, HALT, Action, Machine, MachineError

FORMAT_VERSION = "tm/1"
_HEADERS = ("symbols", "states", "blank", "start")


class ParseError(ValueError):
    def __init__(self, msg: str, lineno: int | None = None):
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno


def parse_machine(text: str) -> Machine:
    headers: dict[str, list[str]] = {}
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if sep and key.strip() in _HEADERS and "->" not in line:
            key = key.strip()
            if key in headers:
                raise ParseError(f"duplicate header {key!r}", lineno)
            headers[key] = rest.split()
            continue
        toks = line.split()
        if len(toks) != 6 or toks[2] != "->":
            raise ParseError(f"malformed transition {raw.strip()!r}", lineno)
        rows.append((lineno, toks))

    for key in _HEADERS:
        if key not in headers:
            raise ParseError(f"missing header {key!r}")
    for key in ("blank", "start"):
        if len(headers[key]) != 1:
            raise ParseError(f"header {key!r} takes exactly one name")
    states, symbols = headers["states"], headers["symbols"]
    state_set, symbol_set = set(states), set(symbols)

    table: dict[tuple[str, str], Action] = {}
    for lineno, (q, e, _, nq, w, d) in rows:
        if q not in state_set:
            raise ParseError(f"unknown state {q!r}", lineno)
        if e not in symbol_set or w not in symbol_set:
            raise ParseError(f"unknown symbol in {e!r} / {w!r}", lineno)
        if nq != HALT and nq not in state_set:
            raise ParseError(f"unknown state {nq!r}", lineno)
        if d not in DIRECTIONS:
            raise ParseError(f"direction must be L or R, got {d!r}", lineno)
        if (q, e) in table:
            raise ParseError(f"duplicate transition for ({q}, {e})", lineno)
        table[(q, e)] = Action(nq, w, d)
    try:
        return Machine(tuple(states), tuple(symbols), headers["blank"][0], headers["start"][0], table)
    except MachineError as exc:
        raise ParseError(str(exc)) from exc


def serialize_machine(machine: Machine, comment: str | None = None) -> str:
    out = [f"# {FORMAT_VERSION}"]
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append("symbols: " + " ".join(machine.symbols))
    out.append("states: " + " ".join(machine.states))
    out.append(f"blank: {machine.blank}")
    out.append(f"start: {machine.start}")
    sym_order = {e: i for i, e in enumerate(machine.symbols)}
    for q in machine.states:
        for e in sorted((e for (qq, e) in machine.table if qq == q), key=sym_order.__getitem__):
            a = machine.table[(q, e)]
            out.append(f"{q} {e} -> {a.next} {a.write} {a.dir}")
    return "\n".join(out) + "\n"


def load_machine(path: str | Path) -> Machine:
    return parse_machine(Path(path).read_text(encoding="utf-8"))


def save_machine(machine: Machine, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(serialize_machine(machine, comment), encoding="utf-8")


def trace_line(step: int, state: str, pos: int, read: str, write: str, dir: str) -> str:
    return f"{step}\t{state}\t{pos}\t{read}\t{write}\t{dir}"


def snapshot_line(snap, window: bool = False, blank: str | None = None) -> str:
    lo = "" if snap.support_lo is None else snap.support_lo
    hi = "" if snap.support_hi is None else snap.support_hi
    line = f"{snap.step}\t{snap.state}\t{snap.pos}\t{lo}\t{hi}"
    if window and snap.support_lo is not None:
        line += "\t" + " ".join(snap.config.window(snap.support_lo, snap.support_hi, blank))
    return line
