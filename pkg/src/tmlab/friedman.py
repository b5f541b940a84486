"""Turing machines that search for the first length at which every word violates (*).

The tape is laid out as ``…Y I Y II X III Y…`` (``Y`` is the blank):

* Segment I holds two unary counters ``i`` (copies made) and ``l`` (patterns
  removed) in one cell per unit of ``imax = N/2``; see :data:`SEGMENT_I`.
* Segment II holds the current word ``s`` of length ``N``, letters possibly
  primed (``-``, ``$``, ``+`` stand for 1', 2', 3'; ``h'`` for h >= 4).
* Segment III holds the working copies ``s^(1) … s^(N/2)`` separated by ``+``.

State names follow the line numbers of the underlying nine-line algorithm
(``q<line>-<counter>``), with ``q1-Ch``, ``q5-Vh`` and ``q5-Kh`` families per
letter ``h``.  Without the ``X`` marker (``delta=1``) the states that walk
across the II/III boundary get a primed twin that knows one ``Y`` has
already been passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from tmlab.machine import HALT, Action, Configuration, Hooks, Machine, run
from tmlab.words import blocks, is_subword, next_word

# symbol -> (i, l) as stored in Segment I; l is None where the cell carries no l-support
SEGMENT_I = {
    "-": (0, None), "$": (0, 0), "+": (0, 1),
    "1": (1, None), "2": (1, 0), "3": (1, 1),
}
_PRIMES = {1: "-", 2: "$", 3: "+"}


def prime(h: int) -> str:
    return _PRIMES.get(h, f"{h}'")


@dataclass(frozen=True)
class FriedmanParams:
    k: int = 3
    delta: int = 0

    def __post_init__(self):
        if self.k < 2 or self.k > 9:
            raise ValueError("k must be in 2..9")
        if self.delta not in (0, 1):
            raise ValueError("delta must be 0 or 1")


def expected_size(k: int, delta: int = 0) -> tuple[int, int]:
    """(states, symbols) of the generated machine for k >= 3."""
    return 35 + 3 * k + delta * (7 + k), 2 * k + 2 - delta


class _Table:
    def __init__(self, symbols):
        self.symbols = list(symbols)
        self.rows: dict[str, dict[str, Action]] = {}

    def row(self, state, *entries):
        """Entries ``(symbols, write, dir, next)``; ``symbols`` is a list, ``"*"``
        (everything not listed earlier in the row) or ``"*\\a,b"`` (same, minus a, b).
        ``write`` of ``"="`` keeps the symbol."""
        out: dict[str, Action] = {}
        for syms, write, d, nxt in entries:
            if isinstance(syms, str) and syms.startswith("*"):
                excluded = set(syms[2:].split(",")) if syms.startswith("*\\") else set()
                syms = [s for s in self.symbols if s not in out and s not in excluded]
            for s in syms:
                if s not in self.symbols:
                    continue
                if s in out:
                    raise AssertionError(f"{state}: symbol {s} listed twice")
                out[s] = Action(nxt, s if write == "=" else write, d)
        if state in self.rows:
            raise AssertionError(f"state {state} defined twice")
        self.rows[state] = out

    def machine(self, blank, start):
        table = {(q, e): a for q, r in self.rows.items() for e, a in r.items()}
        return Machine(tuple(self.rows), tuple(self.symbols), blank, start, table)


def generate(params: FriedmanParams | int = 3, delta: int | None = None) -> Machine:
    """Build the search machine for alphabet size ``k``.

    ``k >= 3, delta = 0`` gives ``35+3k`` states over ``2k+2`` symbols;
    ``delta = 1`` drops ``X`` and adds ``7+k`` states.  For ``k = 2`` the
    letter-role families for 3 vanish (``41`` states) but ``3`` and ``+``
    are still needed by the Segment-I counter encoding.
    """
    if not isinstance(params, FriedmanParams):
        params = FriedmanParams(params, 0 if delta is None else delta)
    k, d1 = params.k, params.delta == 1
    letters = [str(h) for h in range(1, k + 1)]
    counter_syms = ["1", "2", "3"]
    letter_syms = letters + [s for s in counter_syms if s not in letters]
    symbols = ["Y"] + ([] if d1 else ["X"]) + letter_syms + ["-", "$", "+"] + [prime(h) for h in range(4, k + 1)]
    M = "Y" if d1 else "X"   # the II/III boundary marker
    t = _Table(symbols)
    tw = (lambda name: name + "'") if d1 else (lambda name: name)

    # 1. copy s from II to III, N/2 times, separated by +
    t.row("q1-1", (["-"], "1", "R", "q1-2"), (["$", "+"], "2", "R", "q1-2"),
          (["1", "2"], "=", "R", "q1-1"), (["Y"], "=", "R", "q2-1"))
    t.row("q1-2", (["Y"], "=", "R", "q1-4"), ("*\\X", "=", "R", "q1-2"))
    if d1:
        t.row("q1-4", *[([prime(h)], str(h), "R", f"q1-C{h}") for h in range(1, k + 1)],
              (letters, "=", "R", "q1-4"), (["Y"], "=", "R", "q1-7"))
    else:
        t.row("q1-4", *[([prime(h)], str(h), "R", f"q1-C{h}") for h in range(1, k + 1)],
              (letters, "=", "R", "q1-4"), (["X"], "=", "R", "q1-7"), (["Y"], "X", "R", "q3-1"))
    for h in range(1, k + 1):
        c = f"q1-C{h}"
        if d1:
            t.row(c, (["Y"], "=", "R", tw(c)), ("*", "=", "R", c))
        t.row(tw(c), (["Y"], str(h), "L", "q1-6"), ("*", "=", "R", tw(c)))
    if d1:
        t.row("q1-6", (["Y"], "=", "L", tw("q1-6")), ("*", "=", "L", "q1-6"))
    t.row(tw("q1-6"), (["Y"], "=", "R", "q1-4"), ("*", "=", "L", tw("q1-6")))
    t.row("q1-7", (["Y"], "+", "L", "q1-9"), ("*\\$,X", "=", "R", "q1-7"))
    if d1:
        t.row("q1-9", (["Y"], "=", "L", "q1-10"), ("*\\$", "=", "L", "q1-9"))
        # twin entered from line 9 (the merged "set YY to XY" step)
        t.row(tw("q1-9"), (["Y", "-"], "Y", "L", "q1-10"))
    else:
        t.row("q1-9", (["X", "Y", "-"], "X", "L", "q1-10"), ("*\\$", "=", "L", "q1-9"))
    t.row("q1-10", *[([str(h)], prime(h), "L", "q1-10") for h in range(1, k + 1)],
          (["Y"], "=", "L", "q1-11"), ("*\\$", "=", "L", "q1-10"))
    t.row("q1-11", (["Y"], "=", "R", "q1-1"), ("*", "=", "L", "q1-11"))

    # 2. cut away the left triangle in III
    if d1:
        t.row("q2-1", (["Y"], "=", "R", tw("q2-1")), ("*", "=", "R", "q2-1"))
    t.row(tw("q2-1"), (["Y"], "=", "L", "q2-2"), ("*", "=", "R", tw("q2-1")))
    t.row("q2-2", ([M], "=", "R", "q3-1"), (["+"], "$", "R", "q2-3"), ("*\\Y", "=", "L", "q2-2"))
    t.row("q2-3", (letters, "-", "R", "q2-4"), (["Y"], "=", "L", "q2-2"), (["-"], "=", "R", "q2-3"))
    t.row("q2-4", (["-"], "-", "R", "q2-3"), (["Y"], "=", "L", "q2-2"), ("*\\+,X", "=", "R", "q2-4"))

    # 3. cut away the double right triangle in III
    t.row("q3-1", (["$"], "+", "R", "q3-5"), (["Y"], "=", "L", "q4-1"), ("*\\X", "=", "R", "q3-1"))
    t.row("q3-5", (["Y"], "=", "L", "q4-1"), (["-"], "=", "L", "q3-5"), (["+"], "=", "L", "q3-2"))
    t.row("q3-2", (letters, "-", "L", "q3-3"), ("*\\X,Y,$", "=", "L", "q3-2"))
    # Y and - entries: merged line-9 state "find rhs of I"
    t.row("q3-3", (letters, "-", "L", "q3-4"), (["Y"], "=", "R", "q9-4"), (["-"], "=", "R", "q3-3"))
    t.row("q3-4", (["-", "+"], "=", "L", "q3-2"), ([M], "=", "R", "q3-1"), ("*\\Y,$", "=", "L", "q3-4"))

    # 4. remove the first l patterns from III
    if d1:
        t.row("q4-1", (["Y"], "=", "L", tw("q4-1")), ("*", "=", "L", "q4-1"))
    t.row(tw("q4-1"), (["Y"], "=", "L", "q4-2"), ("*", "=", "L", tw("q4-1")))
    t.row("q4-2", (["$"], "+", "R", "q4-3"), (["2"], "3", "R", "q4-3"),
          (["1", "3", "-", "+"], "=", "L", "q4-2"), (["Y"], "=", "R", "q5-0"))
    if d1:
        t.row("q4-3", (["Y"], "=", "R", tw("q4-3")), ("*", "=", "R", "q4-3"))
        t.row(tw("q4-3"), (["Y"], "=", "R", "q4-4"), ("*", "=", "R", tw("q4-3")))
    else:
        t.row("q4-3", (["X"], "=", "R", "q4-4"), ("*", "=", "R", "q4-3"))
    t.row("q4-4", (["+"], "-", "L", "q4-1"), ("*\\X,Y,$", "-", "R", "q4-4"))

    # 5. check the first remaining pattern against the later ones
    if d1:
        t.row("q5-0", (["Y"], "=", "R", tw("q5-0")), ("*", "=", "R", "q5-0"))
        t.row(tw("q5-0"), (["Y"], "=", "R", "q5-1"), ("*", "=", "R", tw("q5-0")))
    else:
        t.row("q5-0", (["X"], "=", "R", "q5-1"), ("*", "=", "R", "q5-0"))
    t.row("q5-1", *[([str(h)], "-", "R", f"q5-V{h}") for h in range(1, k + 1)],
          (["-"], "=", "R", "q5-1"), (["+"], "+", "R", "q6-1"), (["Y"], "=", "L", "q6-2"))
    for h in range(1, k + 1):
        v, kk = f"q5-V{h}", f"q5-K{h}"
        t.row(v, (["-", "+"], "=", "R", kk), (["Y"], "=", "L", "q5-2"), ("*", "=", "R", v))
        t.row(kk, ([str(h)], "$", "R", v), (["+"], "=", "R", kk), (["Y"], "=", "L", "q5-2"), ("*", "-", "R", kk))
    t.row("q5-2", ([M], "=", "R", "q5-1"), ("*", "=", "L", "q5-2"))

    # 6. clear III, remembering whether a $ survived
    t.row("q6-1", (["Y"], "=", "L", "q6-2"), ("*", "=", "R", "q6-1"))
    t.row("q6-2", (["$"], "Y", "L", "q6-3"), ([M], "=", "L", "q8-0"), ("*", "Y", "L", "q6-2"))
    t.row("q6-3", ([M], "=", "L", "q7-1"), ("*", "Y", "L", "q6-3"))

    # 7. s++ on the primed word; carry out of the left end halts
    t.row("q7-1", *[([prime(h)], prime(h + 1), "L", "q7-3") for h in range(1, k)],
          ([prime(k)], "-", "L", "q7-1"), (["Y"], "=", "R", HALT))
    t.row("q7-3", (["Y"], "=", "L", "q7-4"), ("*", "=", "L", "q7-3"))
    t.row("q7-4", (["Y"], "=", "R", "q1-1"), ("*\\-", "-", "L", "q7-4"))

    # 8. i := 0, lmax++
    t.row("q8-0", (["Y"], "=", "L", "q8-1"), ("*", "=", "L", "q8-0"))
    t.row("q8-1", (["-", "$", "+"], "=", "L", "q8-1"), (["1"], "-", "L", "q8-1"),
          (["2"], "$", "L", "q8-1"), (["3"], "+", "L", "q8-1"), (["Y"], "=", "R", "q8-2"))
    t.row("q8-2", (["-"], "$", "L", "q1-11"), (["Y"], "=", "L", "q9-1"), ("*", "=", "R", "q8-2"))

    # 9. N/2++, s := 1'^N
    t.row("q9-1", (["Y"], "-", "R", "q3-3"), ("*\\X", "-", "L", "q9-1"))
    if d1:
        t.row("q9-4", (["Y"], "-", "R", tw("q9-4")), ("*", "-", "R", "q9-4"))
        t.row(tw("q9-4"), (["Y"], "-", "R", tw("q1-9")))
    else:
        t.row("q9-4", (["Y"], "-", "R", "q1-9"), ("*", "-", "R", "q9-4"))

    return t.machine("Y", "q3-1" if d1 else "q1-4")


# ---------------------------------------------------------------------------
# reading the tape back


@dataclass(frozen=True)
class SegmentView:
    i: int = 0
    imax: int = 0
    l: int = 0
    lmax: int = 0
    word: str = ""
    copies: tuple[str, ...] = ()
    wellformed: bool = False
    diagnostics: str = ""

    @property
    def N(self) -> int:
        return len(self.word)


def _unprime(sym: str) -> str | None:
    for h, p in _PRIMES.items():
        if sym == p:
            return str(h)
    if sym.endswith("'") and sym[:-1].isdigit():
        return sym[:-1]
    if sym.isdigit():
        return sym
    return None


def decode_segment_i(cells: list[str]) -> tuple[int, int, int, int]:
    """(i, imax, l, lmax) from the Segment-I symbols, left to right."""
    i = l = lmax = 0
    for s in cells:
        ci, cl = SEGMENT_I[s]
        i += ci
        if cl is not None:
            lmax += 1
            l += cl
    return i, len(cells), l, lmax


def decode_segments(machine: Machine, config: Configuration) -> SegmentView:
    """Split the tape at its markers and decode the three segments."""
    blank = machine.blank
    has_x = "X" in machine.symbols
    tape = config.tape
    if not tape:
        return SegmentView(diagnostics="empty tape")
    lo, hi = min(tape), max(tape)
    cells = [tape.get(p, blank) for p in range(lo, hi + 1)]
    runs: list[list[str]] = []
    cur: list[str] = []
    for s in cells:
        if s == blank:
            if cur:
                runs.append(cur)
            cur = []
        else:
            cur.append(s)
    if cur:
        runs.append(cur)

    if has_x:
        xs = [p for p, s in tape.items() if s == "X"]
        if len(xs) != 1:
            return SegmentView(diagnostics=f"{len(xs)} X markers")
        # runs: I, then II+X+III as one run (X is non-blank)
        if len(runs) != 2 or "X" not in runs[1]:
            return SegmentView(diagnostics=f"expected 2 non-blank runs, found {len(runs)}")
        seg1 = runs[0]
        cut = runs[1].index("X")
        seg2, seg3 = runs[1][:cut], runs[1][cut + 1:]
    else:
        if len(runs) not in (2, 3):
            return SegmentView(diagnostics=f"expected 2 or 3 non-blank runs, found {len(runs)}")
        seg1, seg2 = runs[0], runs[1]
        seg3 = runs[2] if len(runs) == 3 else []

    if any(s not in SEGMENT_I for s in seg1):
        return SegmentView(diagnostics="unexpected symbol in segment I")
    letters = [_unprime(s) for s in seg2]
    if not seg2 or any(c is None for c in letters):
        return SegmentView(diagnostics="segment II is not a word")
    i, imax, l, lmax = decode_segment_i(seg1)
    copies = tuple("".join(seg3).split("+")[:-1]) if seg3 else ()
    return SegmentView(i, imax, l, lmax, "".join(letters), copies, True)


# ---------------------------------------------------------------------------
# word-level replay of the search, and the machine's own milestones


@dataclass(frozen=True)
class Milestone:
    """State of the search at the start of a copy round (line 1 with i = 0)."""

    N: int
    word: str
    lmax: int


@dataclass
class MilestoneRun:
    milestones: list[Milestone] = field(default_factory=list)
    halted: bool = False
    halt_length: int | None = None


def reference_algorithm_milestones(k: int, budget: int) -> MilestoneRun:
    """Replay the search on words directly, recording up to ``budget`` milestones.

    A round with ``lmax`` patterns removed tests block ``lmax+1`` against the
    later blocks.  A hit advances the word (halting when the increment
    overflows the length); a miss moves to the next round, and after the
    round with every pattern removed the length grows by two.
    """
    out = MilestoneRun()
    N, s, lmax = 2, "11", 0
    while len(out.milestones) < budget:
        out.milestones.append(Milestone(N, s, lmax))
        bs = blocks(s)
        i = lmax  # 0-based index of the tested block
        hit = any(is_subword(bs[i], bs[j]) for j in range(i + 1, len(bs))) if i < len(bs) else False
        if hit:
            s = next_word(s, k)
            if len(s) > N:
                out.halted, out.halt_length = True, N
                break
            lmax = 0
        elif lmax < N // 2:
            lmax += 1
        else:
            N, s, lmax = N + 2, "1" * (N + 2), 0
    return out


def machine_milestones(machine: Machine, budget: int, limit: int = 10**9) -> tuple[MilestoneRun, list[SegmentView]]:
    """Run the generated machine, decoding the tape at each ``q1-1`` entry with ``i = 0``."""
    out = MilestoneRun()
    views: list[SegmentView] = []

    def on_enter(snap):
        v = decode_segments(machine, snap.config)
        if v.wellformed and v.i == 0:
            views.append(v)
            out.milestones.append(Milestone(v.N, v.word, v.lmax))
            return len(out.milestones) >= budget
        return False

    res = run(machine, limit, Hooks(watch=("q1-1",), on_enter=on_enter))
    if res.halted:
        out.halted = True
        out.halt_length = decode_segments(machine, res.final).N or None
    return out, views
