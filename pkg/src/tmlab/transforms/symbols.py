"""Symbol reduction: every original cell becomes a block of base-``b`` digits.

Between simulated steps the head sits on the leftmost digit of the current
block in a *root* state named after the original state.  A read tree walks
right over the block collecting digits; on the last digit the original
action is known, and the block is rewritten right to left by write-back
states.  Leaving the block to the left lands on the neighbour's last digit
and needs ``l-1`` further steps left; leaving to the right needs ``l-1``
steps right.
"""

from __future__ import annotations

from tmlab.machine import HALT, Action, Configuration, Machine
from tmlab.transforms.certificate import Certificate
from tmlab.transforms.reduced import ReducedMachine


def block_length(m: int, b: int) -> int:
    """Smallest ``l >= 1`` with ``b**l >= m``."""
    l, cap = 1, b
    while cap < m:
        l += 1
        cap *= b
    return l


def _ceil_log(m: int, b: int) -> int:
    """Exact ``ceil(log_b m)`` for ``m >= 1`` (0 for m = 1)."""
    return 0 if m <= 1 else block_length(m, b)


def symbol_bounds(n: int, m: int, b: int) -> tuple[int, int]:
    """The detailed state bound and the coarse ``2(m+1) n ceil(log_b m)`` bound."""
    l = block_length(m, b)
    detailed = n * ((l - 1) + (b ** l - 1) // (b - 1) + m * 2 * (l - 1))
    return detailed, 2 * (m + 1) * n * _ceil_log(m, b)


def _digits(value: int, b: int, l: int) -> tuple[int, ...]:
    out = []
    for _ in range(l):
        value, r = divmod(value, b)
        out.append(r)
    return tuple(reversed(out))


def reduce_symbols(machine: Machine, b: int) -> ReducedMachine:
    if b < 2:
        raise ValueError("base must be at least 2")
    if b > 10:
        raise ValueError("base must be at most 10 (digits are written as 0-9)")
    l = block_length(machine.m, b)
    order = [machine.blank] + [e for e in machine.symbols if e != machine.blank]
    codes = {e: _digits(i, b, l) for i, e in enumerate(order)}
    by_code = {c: e for e, c in codes.items()}
    digit = [str(d) for d in range(b)]

    states: list[str] = []
    table: dict[tuple[str, str], Action] = {}

    def add_state(name):
        if name not in seen:
            seen.add(name)
            states.append(name)
        return name

    seen: set[str] = set()

    def read_state(q, prefix):
        return q if not prefix else f"{q}|{''.join(map(str, prefix))}"

    def exit_state(q, d, r):
        return f"{q}<{r}" if d == "L" else f"{q}>{r}"

    def write_state(write, q, d, j):
        return f"w[{write},{q},{d},{j}]"

    def after_block(q, d):
        """State entered when the head leaves the block moving ``d`` toward ``q``."""
        if q == HALT or l == 1:
            return q
        return add_state(exit_state(q, d, l - 1))

    # roots first, in the original order, so the start state keeps its name
    for q in machine.states:
        add_state(q)

    pending_exits: set[tuple[str, str]] = set()
    pending_writes: set[tuple[str, str, str]] = set()

    for q in machine.states:
        for depth in range(l):
            for prefix in _prefixes(b, depth):
                src = read_state(q, prefix)
                if depth and src not in seen:
                    continue
                for dgt in range(b):
                    full = prefix + (dgt,)
                    if depth < l - 1:
                        if not any(c[: depth + 1] == full for c in by_code):
                            continue
                        table[(src, digit[dgt])] = Action(add_state(read_state(q, full)), digit[dgt], "R")
                        continue
                    e = by_code.get(full)
                    if e is None:
                        continue
                    act = machine.action(q, e)
                    if act is None:
                        continue
                    wcode = codes[act.write]
                    if l == 1:
                        table[(src, digit[dgt])] = Action(act.next, digit[wcode[0]], act.dir)
                        continue
                    table[(src, digit[dgt])] = Action(
                        write_state(act.write, act.next, act.dir, l - 2), digit[wcode[-1]], "L")
                    pending_writes.add((act.write, act.next, act.dir))

    for write, q2, d in sorted(pending_writes):
        wcode = codes[write]
        for j in range(l - 2, -1, -1):
            name = add_state(write_state(write, q2, d, j))
            for sym in digit:
                if j > 0:
                    table[(name, sym)] = Action(write_state(write, q2, d, j - 1), digit[wcode[j]], "L")
                else:
                    nxt = after_block(q2, d)
                    if q2 != HALT:
                        pending_exits.add((q2, d))
                    table[(name, sym)] = Action(nxt, digit[wcode[0]], d)

    for q2, d in sorted(pending_exits):
        for r in range(l - 1, 0, -1):
            name = add_state(exit_state(q2, d, r))
            nxt = q2 if r == 1 else exit_state(q2, d, r - 1)
            for sym in digit:
                table[(name, sym)] = Action(nxt, sym, d)

    reduced = Machine(tuple(states), tuple(digit), "0", machine.start, table)
    detailed, coarse = symbol_bounds(machine.n, machine.m, b)
    cert = Certificate(
        kind="symbol-blocks", pass_name="symbols", original_blank=machine.blank,
        codes=codes, block=l, base=b, overhead=3 * l, setup=0,
    )

    def encode(tape, head):
        cells = {}
        for pos, e in tape.items():
            for off, dg in enumerate(codes[e]):
                if dg:
                    cells[pos * l + off] = digit[dg]
        return Configuration.initial(reduced, head=head * l, tape=cells)

    return ReducedMachine(reduced, cert, (min(detailed, coarse) if coarse else detailed, b), encode)


def _prefixes(b: int, depth: int):
    if depth == 0:
        yield ()
        return
    for p in _prefixes(b, depth - 1):
        for d in range(b):
            yield p + (d,)
