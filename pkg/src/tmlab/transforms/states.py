"""State reductions: simulate any machine with 3, ``2b+1`` or 2 states.

All passes move the original state between neighbouring cells through the
symbols, since the reduced machine's own states can hold almost nothing.
Reduced symbols are written ``[counter,tag,e]`` where ``e`` is the original
symbol carried by the cell.
"""

from __future__ import annotations

from tmlab.machine import HALT, Action, Configuration, Machine, MachineError
from tmlab.transforms.certificate import Certificate
from tmlab.transforms.reduced import ReducedMachine

_FLIP = {"L": "R", "R": "L"}


def _index1(machine: Machine) -> dict[str, int]:
    return {q: i + 1 for i, q in enumerate(machine.states)}


def _tuple(count, tag, e) -> str:
    return f"[{count},{tag},{e}]"


def _ordered(symbols: list[str], blank: str) -> tuple[str, ...]:
    seen = dict.fromkeys([blank] + symbols)
    return tuple(seen)


# ---------------------------------------------------------------------------
# three states: unary transfer by ping-pong


def reduce_states_3(machine: Machine) -> ReducedMachine:
    """States ``qX`` (expand), ``qL``, ``qR``; symbols ``[q,d,e]`` with ``q`` in ``0..n``, ``d`` in ``X,L,R``.

    ``qX`` on ``[q,d,e]`` (d = L/R, q >= 1) hands one unit to the neighbour
    in direction ``d``, which counts it up and sends the head back.  At
    ``q = 0`` the cell is released and the head moves on to the neighbour,
    now holding the full count, which is expanded with the original table.
    The blank ``[0,X,blank]`` read by ``qX`` can only happen at the very
    start and is expanded as the start state.
    """
    n, idx = machine.n, _index1(machine)
    E = machine.symbols
    blank = _tuple(0, "X", machine.blank)
    syms = [_tuple(q, d, e) for q in range(n + 1) for d in "XLR" for e in E]
    table: dict[tuple[str, str], Action] = {}
    for e in E:
        for q in range(1, n + 1):
            for d in "LR":
                table[("qX", _tuple(q, d, e))] = Action("q" + d, _tuple(q - 1, d, e), d)
        for q in range(n):
            table[("qL", _tuple(q, "X", e))] = Action("qX", _tuple(q + 1, "X", e), "R")
            table[("qR", _tuple(q, "X", e))] = Action("qX", _tuple(q + 1, "X", e), "L")
        for d in "LR":
            table[("qX", _tuple(0, d, e))] = Action("qX", _tuple(0, "X", e), d)
        for q in range(0, n + 1):
            src = machine.start if q == 0 else machine.states[q - 1]
            act = machine.action(src, e)
            if act is None:
                continue
            if act.next == HALT:
                table[("qX", _tuple(q, "X", e))] = Action(HALT, _tuple(0, "X", act.write), act.dir)
            else:
                nq = idx[act.next]
                table[("qX", _tuple(q, "X", e))] = Action("q" + act.dir, _tuple(nq - 1, act.dir, act.write), act.dir)
    reduced = Machine(("qX", "qL", "qR"), _ordered(syms, blank), blank, "qX", table)
    decode = {_tuple(q, d, e): e for q in range(n + 1) for d in "XLR" for e in E}
    cert = Certificate(kind="tuple-field", pass_name="states3", original_blank=machine.blank,
                       decode=decode, overhead=2 * n + 2, setup=2)

    def encode(tape, head):
        cells = {p: _tuple(0, "X", e) for p, e in tape.items()}
        return Configuration.initial(reduced, head=head, tape=cells)

    return ReducedMachine(reduced, cert, (3, 3 * (n + 1) * machine.m), encode)


# ---------------------------------------------------------------------------
# 2b+1 states: base-b digit transfer


def _code_length(n: int, b: int) -> int:
    l, cap = 1, b
    while cap < n:
        l += 1
        cap *= b
    return l


def _render(digits: tuple[int, ...]) -> str:
    return "".join(str(d) for d in digits) if digits else "-"


def _all_strings(b: int, length: int):
    if length == 0:
        yield ()
        return
    for p in _all_strings(b, length - 1):
        for d in range(b):
            yield p + (d,)


def bound_2b1(n: int, m: int, b: int) -> float:
    l = _code_length(n, b)
    return (n * (b + 1) / (b - 1) + 2 * (l - 1) + (b ** l - 1) / (b - 1)) * m


def reduce_states_2b1(machine: Machine, b: int) -> ReducedMachine:
    """States ``qX``, ``qL0..qL{b-1}``, ``qR0..qR{b-1}``; the state index travels as ``l`` base-``b`` digits.

    An expansion stores the new state's code with the move direction.  Each
    visit of ``qX`` to that cell sends one digit to the neighbour (leftmost
    digit first when moving left, rightmost first when moving right), and
    the neighbour rebuilds the code from its side.  Once the code is spent
    the cell is cleaned and the head moves onto the neighbour.
    """
    if b < 2 or b > 10:
        raise ValueError("base must be in 2..10")
    n, E = machine.n, machine.symbols
    l = _code_length(n, b)
    idx = {q: i for i, q in enumerate(machine.states)}
    code = {q: tuple(int(c) for c in _digits_of(i, b, l)) for q, i in idx.items()}
    by_code = {c: q for q, c in code.items()}
    partial = [p for j in range(l) for p in _all_strings(b, j)]
    prefixes = [p for p in partial if _valid_prefix(p, b, l, n)]

    def sym(digits, tag, e):
        return f"[{_render(digits)},{tag},{e}]"

    blank = sym((), "-", machine.blank)
    syms, decode = [], {}
    for e in E:
        for digits, tag in ([(p, "-") for p in partial] + [(c, "-") for c in code.values()]
                            + [(p, "L") for p in partial] + [(p, "R") for p in prefixes]):
            s = sym(digits, tag, e)
            if s not in decode:
                syms.append(s)
                decode[s] = e
    states = ("qX",) + tuple(f"qL{i}" for i in range(b)) + tuple(f"qR{i}" for i in range(b))
    table: dict[tuple[str, str], Action] = {}

    def expand(q, e):
        act = machine.action(q, e)
        if act is None:
            return None
        if act.next == HALT:
            return Action(HALT, sym((), "-", act.write), act.dir)
        c = code[act.next]
        if act.dir == "L":
            return Action(f"qL{c[0]}", sym(c[1:], "L", act.write), "L")
        return Action(f"qR{c[-1]}", sym(c[:-1], "R", act.write), "R")

    for e in E:
        for c, q in by_code.items():
            a = expand(q, e)
            if a is not None:
                table[("qX", sym(c, "-", e))] = a
        a = expand(machine.start, e)
        if a is not None:
            table[("qX", sym((), "-", e))] = a
        for p in partial:
            if p:
                table[("qX", sym(p, "L", e))] = Action(f"qL{p[0]}", sym(p[1:], "L", e), "L")
            else:
                table[("qX", sym(p, "L", e))] = Action("qX", sym((), "-", e), "L")
        for p in prefixes:
            if p:
                table[("qX", sym(p, "R", e))] = Action(f"qR{p[-1]}", sym(p[:-1], "R", e), "R")
            else:
                table[("qX", sym(p, "R", e))] = Action("qX", sym((), "-", e), "R")
        for p in partial:
            for i in range(b):
                left = p + (i,)
                if len(left) < l or left in by_code:
                    table[(f"qL{i}", sym(p, "-", e))] = Action("qX", sym(left, "-", e), "R")
                right = (i,) + p
                if len(right) < l or right in by_code:
                    table[(f"qR{i}", sym(p, "-", e))] = Action("qX", sym(right, "-", e), "L")

    reduced = Machine(states, _ordered(syms, blank), blank, "qX", table)
    cert = Certificate(kind="tuple-field", pass_name="states2b1", original_blank=machine.blank,
                       decode=decode, base=b, overhead=2 * l + 2, setup=2)

    def encode(tape, head):
        return Configuration.initial(reduced, head=head, tape={p: sym((), "-", e) for p, e in tape.items()})

    return ReducedMachine(reduced, cert, (2 * b + 1, bound_2b1(n, machine.m, b)), encode)


def _digits_of(value: int, b: int, l: int) -> str:
    out = []
    for _ in range(l):
        value, r = divmod(value, b)
        out.append(str(r))
    return "".join(reversed(out))


def _valid_prefix(p: tuple[int, ...], b: int, l: int, n: int) -> bool:
    value = 0
    for d in p:
        value = value * b + d
    return value * b ** (l - len(p)) < n


# ---------------------------------------------------------------------------
# two states: the cell pair ping-pong


def _two_state_table(machine: Machine, top: int, bootstrap: str | None):
    """Rows shared by both two-state variants; ``top`` is the largest counter value."""
    n, idx, E = machine.n, _index1(machine), machine.symbols
    table: dict[tuple[str, str], Action] = {}

    def expand(X, c, e):
        act = machine.action(machine.states[c - 1], e)
        if act is None:
            return None
        if act.next == HALT:
            return Action(HALT, _tuple(0, "-", act.write), _FLIP[act.dir])
        Xp = _FLIP[act.dir]
        return Action(Xp, _tuple(idx[act.next] - 1, Xp + "old", act.write), Xp)

    for X in "LR":
        Xb = _FLIP[X]
        for e in E:
            table[(X, _tuple(0, "-", e))] = Action(Xb, _tuple(1, X + "new", e), Xb)
            for c in range(1, top):
                table[(X, _tuple(c, X + "new", e))] = Action(Xb, _tuple(c + 1, X + "new", e), Xb)
            for c in range(1, top + 1):
                table[(X, _tuple(c, Xb + "old", e))] = Action(Xb, _tuple(c - 1, Xb + "old", e), Xb)
            table[(X, _tuple(0, Xb + "old", e))] = Action(X, _tuple(0, "-", e), Xb)
            for c in range(1, n + 1):
                a = expand(X, c, e)
                if a is not None:
                    table[(X, _tuple(c, Xb + "new", e))] = a
    if bootstrap is not None:
        X0, Xb0 = bootstrap, _FLIP[bootstrap]
        s = idx[machine.start]
        for e in E:
            a = expand(X0, s, e)
            if a is not None:
                table[(X0, _tuple(n + 1, X0 + "new", e))] = a
            table[(Xb0, _tuple(n + 1, Xb0 + "new", e))] = table[(Xb0, _tuple(0, "-", e))]
    return table


_TAGS = ("-", "Lnew", "Lold", "Rnew", "Rold")


def _two_state_symbols(machine: Machine, top: int):
    syms = [_tuple(c, t, e) for c in range(top + 1) for t in _TAGS for e in machine.symbols]
    decode = {s: e for c in range(top + 1) for t in _TAGS for e in machine.symbols
              for s in [_tuple(c, t, e)]}
    return syms, decode


def reduce_states_2_seeded(machine: Machine) -> ReducedMachine:
    """States ``L``/``R``, counters ``0..n``; needs one seeded cell ``[start,Rnew,e]`` under the head.

    The reduced machine runs on the mirror image of the original tape: an
    original move right is simulated by a move left and vice versa.
    """
    n = machine.n
    table = _two_state_table(machine, n, None)
    syms, decode = _two_state_symbols(machine, n)
    blank = _tuple(0, "-", machine.blank)
    reduced = Machine(("L", "R"), _ordered(syms, blank), blank, "L", table)
    cert = Certificate(kind="seeded-two-state", pass_name="states2-seeded", original_blank=machine.blank,
                       decode=decode, mirror=True, overhead=2 * n + 2, setup=2,
                       seed={0: _tuple(_index1(machine)[machine.start], "Rnew", machine.blank)})
    s = _index1(machine)[machine.start]

    def encode(tape, head):
        cells = {p: _tuple(0, "-", e) for p, e in tape.items()}
        cells[head] = _tuple(s, "Rnew", tape.get(head, machine.blank))
        return Configuration.initial(reduced, head=head, tape=cells)

    return ReducedMachine(reduced, cert, (2, 5 * machine.m * (n + 1)), encode)


def reduce_states_2_empty(machine: Machine) -> ReducedMachine:
    """States ``L``/``R`` on an all-blank tape, counters ``0..n+1``.

    The machine starts in ``X``, the direction of the original first move,
    and ping-pongs with the neighbour on the other side until the counter
    overflows to ``n+1``.  The overflowing cell is then read as holding the
    start state, and the neighbour's overflow as a plain blank.
    """
    n = machine.n
    first = machine.action(machine.start, machine.blank)
    if first is None:
        raise MachineError("the start state has no transition on the blank")
    X0 = first.dir
    table = _two_state_table(machine, n + 1, X0)
    syms, decode = _two_state_symbols(machine, n + 1)
    blank = _tuple(0, "-", machine.blank)
    reduced = Machine(("L", "R"), _ordered(syms, blank), blank, X0, table)
    cert = Certificate(kind="seeded-two-state", pass_name="states2-empty", original_blank=machine.blank,
                       decode=decode, mirror=True, overflow=n + 1, overhead=2 * n + 2, setup=2 * n + 6)

    def encode(tape, head):
        first_here = machine.action(machine.start, tape.get(head, machine.blank))
        state = first_here.dir if first_here is not None else X0
        if state != X0:
            raise MachineError("the starting cell calls for the other initial direction")
        cells = {p: _tuple(0, "-", e) for p, e in tape.items()}
        return Configuration.initial(reduced, head=head, tape=cells, state=state)

    return ReducedMachine(reduced, cert, (2, 5 * machine.m * (n + 2)), encode)
