"""Closed-form substate counts for the symbol reduction of the search machine.

A *profile* classifies the machine's states by how their block is swept:
re-entry walks, plain scans leaving on the far side, scans leaving on the
entry side, scans that rewrite, and states needing the full read tree.  The
``v_*`` totals count table entries by (exit side, symbol changed or not).
"""

from __future__ import annotations

from dataclasses import dataclass


class ProfileError(ValueError):
    pass


@dataclass(frozen=True)
class SubstateProfile:
    sweep0: int
    scan_gt: int
    scan_lt: int
    scan_ne: int
    sweep1: int
    v_gt_eq: int
    v_lt_eq: int
    v_lt_ne: int
    v_gt_ne: int
    b: int
    l: int
    k: int | None = None
    delta: int = 0

    def __post_init__(self):
        if self.b < 2 or self.l < 1:
            raise ProfileError("need b >= 2 and l >= 1")
        counts = (self.sweep0, self.scan_gt, self.scan_lt, self.scan_ne, self.sweep1,
                  self.v_gt_eq, self.v_lt_eq, self.v_lt_ne, self.v_gt_ne)
        if any(c < 0 for c in counts):
            raise ProfileError("counts must be nonnegative")


def search_machine_profile(k: int, b: int, l: int, delta: int = 0) -> SubstateProfile:
    """Profile of the generated search machine for alphabet size ``k``.

    The ``delta = 1`` increments are the extra states and cases of the
    X-free variant.
    """
    if delta not in (0, 1):
        raise ProfileError("delta must be 0 or 1")
    return SubstateProfile(
        sweep0=3 + delta,
        scan_gt=6 + 3 * delta,
        scan_lt=6 + k + delta * (2 + k),
        scan_ne=6 + delta,
        sweep1=17 + 2 * k + delta,
        v_gt_eq=22 + 4 * k + delta * (8 + k),
        v_lt_eq=15 + 2 * k + delta * 3,
        v_lt_ne=9 + k + delta * (1 + k),
        v_gt_ne=17 + 6 * k + delta * 2,
        b=b, l=l, k=k, delta=delta,
    )


def geometric(b: int, l: int) -> int:
    """``1 + b + ... + b**(l-1)``: nodes of a read tree over ``l`` digits."""
    return (b ** l - 1) // (b - 1)


def estimate_substates(p: SubstateProfile) -> int:
    l = p.l
    return ((l - 1) * p.sweep0
            + (2 * l - 1) * (p.scan_gt + p.scan_ne)
            + (3 * l - 2) * p.scan_lt
            + geometric(p.b, l) * p.sweep1
            + (l - 1) * (0 * p.v_gt_eq + (p.v_lt_eq + p.v_lt_ne) + 2 * p.v_gt_ne))


def linear_in_k(b: int, l: int, delta: int = 0) -> tuple[int, int]:
    """``(a, c)`` with ``estimate = a + c*k`` for the search-machine profile."""
    a = estimate_substates(search_machine_profile(0, b, l, delta))
    return a, estimate_substates(search_machine_profile(1, b, l, delta)) - a
