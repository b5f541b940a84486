"""numba-compiled run loop for long hook-free simulations."""

from __future__ import annotations

import numba
import numpy as np

_BUDGET, _HALTED, _UNDEF, _GROW = 0, 1, 2, 3
_CHUNK = 1 << 30


@numba.njit(cache=True, nogil=True)
def _kernel(nxt, wr, mv, m, tape, i, s, limit):
    n = tape.shape[0]
    steps = 0
    while steps < limit:
        c = s * m + tape[i]
        ns = nxt[c]
        if ns == -2:
            return _UNDEF, steps, i, s
        tape[i] = wr[c]
        i += mv[c]
        steps += 1
        if ns == -1:
            return _HALTED, steps, i, s
        s = ns
        if i < 0 or i >= n:
            return _GROW, steps, i, s
    return _BUDGET, steps, i, s


def run_compiled(comp, blank, cells, head, s, limit):
    nxt = np.asarray(comp.nxt, dtype=np.int32)
    wr = np.asarray(comp.wr, dtype=np.int32)
    mv = np.asarray(comp.mv, dtype=np.int32)
    lo = min([head, *cells])
    hi = max([head, *cells])
    pad = 4096
    tape = np.full(hi - lo + 1 + 2 * pad, blank, dtype=np.int32)
    offset = pad - lo
    for p, v in cells.items():
        tape[p + offset] = v
    i = head + offset
    done = 0
    status = "budget"
    while done < limit:
        chunk = min(limit - done, _CHUNK)
        code, steps, i, s = _kernel(nxt, wr, mv, comp.m, tape, i, s, chunk)
        done += steps
        if code == _HALTED:
            status = "halted"
            break
        if code == _UNDEF:
            status = "undefined"
            break
        if code == _GROW:
            n = tape.shape[0]
            if i < 0:
                tape = np.concatenate([np.full(n, blank, dtype=np.int32), tape])
                offset += n
                i += n
            else:
                tape = np.concatenate([tape, np.full(n, blank, dtype=np.int32)])
    idx = np.nonzero(tape != blank)[0]
    nonblank = {int(j) - offset: int(tape[j]) for j in idx}
    return status, done, i - offset, s, nonblank
