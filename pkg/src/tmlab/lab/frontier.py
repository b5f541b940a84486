"""Counting (states, symbols) classes left open by a set of known machine sizes.

A machine of size ``(n', m')`` settles every class ``(n, m)`` with
``n >= n'`` and ``m >= m'``.  The remaining classes with ``n, m >= 2`` are
counted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PRESETS = {
    "n3": ((2, 1840), (3, 1080), (9, 800), (44, 8), (54, 7), (155, 3), (276, 2)),
    "n4": ((2, 2450), (3, 1440), (9, 1030), (47, 10), (58, 9), (160, 4), (353, 3), (922, 2)),
}

# published band tables for the two presets: (n_lo, n_hi, m_hi, count), and their totals
PUBLISHED_BANDS = {
    "n3": ((2, 2, 1839, 1838), (3, 8, 1079, 6468), (9, 43, 799, 27930), (44, 53, 7, 60),
           (54, 154, 6, 505), (155, 275, 2, 221)),
    "n4": ((2, 2, 2449, 2448), (3, 8, 1439, 8628), (9, 43, 1029, 39064), (47, 57, 7, 66),
           (58, 159, 6, 510), (160, 352, 3, 386), (353, 921, 2, 569)),
}
PUBLISHED_TOTALS = {"n3": 37022, "n4": 51671}


class FrontierError(ValueError):
    pass


@dataclass(frozen=True)
class Band:
    n_lo: int
    n_hi: int
    m_hi: int

    @property
    def count(self) -> int:
        return (self.n_hi - self.n_lo + 1) * (self.m_hi - 1)


@dataclass(frozen=True)
class FrontierCount:
    total: int
    bands: tuple[Band, ...]

    def table(self) -> str:
        rows = ["n\tm\tnumber"]
        for b in self.bands:
            n = f"{b.n_lo}" if b.n_lo == b.n_hi else f"{b.n_lo}..{b.n_hi}"
            m = "2" if b.m_hi == 2 else f"2..{b.m_hi}"
            rows.append(f"{n}\t{m}\t{b.count}")
        rows.append(f"total\t\t{self.total}")
        return "\n".join(rows)


def parse_impls(text: str) -> tuple[tuple[int, int], ...]:
    """``"2x1840,3x1080"`` -> ``((2, 1840), (3, 1080))``."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            n, m = item.lower().split("x")
            out.append((int(n), int(m)))
        except ValueError as exc:
            raise FrontierError(f"bad size {item!r}, expected NxM") from exc
    return tuple(out)


def frontier_count(impls) -> FrontierCount:
    impls = tuple((int(n), int(m)) for n, m in impls)
    if any(n < 1 or m < 1 for n, m in impls):
        raise FrontierError("sizes must be positive")
    state_cap = [n for n, m in impls if m <= 2]
    symbol_cap = [m for n, m in impls if n <= 2]
    if not state_cap or not symbol_cap:
        raise FrontierError("the open region is infinite: need a size with <= 2 states and one with <= 2 symbols")
    n_max, m_max = min(state_cap), min(symbol_cap)

    # direct count over the bounded grid
    ns = np.arange(2, max(n_max, 2))[:, None]
    ms = np.arange(2, max(m_max, 2))[None, :]
    dominated = np.zeros((ns.shape[0], ms.shape[1]), dtype=bool)
    for a, b in impls:
        dominated |= (ns >= a) & (ms >= b)
    total = int((~dominated).sum())

    # per-n thresholds grouped into bands
    bands: list[Band] = []
    for n in range(2, n_max):
        cut = min((m for a, m in impls if a <= n), default=None)
        m_hi = (cut if cut is not None else m_max) - 1
        if m_hi < 2:
            continue
        if bands and bands[-1].m_hi == m_hi and bands[-1].n_hi == n - 1:
            bands[-1] = Band(bands[-1].n_lo, n, m_hi)
        else:
            bands.append(Band(n, n, m_hi))
    return FrontierCount(total, tuple(bands))
