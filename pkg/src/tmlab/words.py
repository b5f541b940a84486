"""Friedman's block-subword property (*) and brute-force search for n(k).

Words are plain strings over the letters ``"1" .. str(k)`` (k <= 9), or any
sequence of comparable letters; block ``i`` (1-based) of a word ``s`` is
``s[i-1 : 2*i]``, i.e. letters ``s_i .. s_{2i}``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence


# words with a known misattribution, reported next to their verdict
NOTES = {
    "11222111111": "often quoted as a longest two-letter (*)-word, but block 1 (11) embeds in "
                   "block 4 (22111); 12221111111 is a length-11 word that does satisfy (*)",
}


def is_subword(a: Sequence, b: Sequence) -> bool:
    """True iff ``a`` embeds into ``b`` as a (not necessarily contiguous) subsequence."""
    it = iter(b)
    return all(ch in it for ch in a)


def blocks(word: Sequence) -> list:
    return [word[i - 1: 2 * i] for i in range(1, len(word) // 2 + 1)]


def satisfies_star(word: Sequence) -> bool | tuple[int, int]:
    """True, or the lexicographically least violating pair ``(i, j)``."""
    bs = blocks(word)
    for i in range(len(bs)):
        for j in range(i + 1, len(bs)):
            if is_subword(bs[i], bs[j]):
                return (i + 1, j + 1)
    return True


def next_word(word: str, k: int) -> str:
    """Base-k increment, rightmost letter least significant; ``k..k`` wraps to ``1..1`` one longer."""
    letters = [int(c) for c in word]
    pos = len(letters) - 1
    while pos >= 0 and letters[pos] == k:
        letters[pos] = 1
        pos -= 1
    if pos < 0:
        return "1" * (len(word) + 1)
    letters[pos] += 1
    return "".join(map(str, letters))


@dataclass(frozen=True)
class NkResult:
    k: int
    value: int
    exact: bool
    witness: str

    def __str__(self):
        return f"n({self.k}) = {self.value}" if self.exact else f"n({self.k}) >= {self.value}"


def _extends(word: str) -> bool:
    """Whether ``word`` satisfies (*) given that ``word[:-1]`` does.

    Appending a letter creates a new block only when the length becomes even.
    """
    n = len(word)
    if n % 2:
        return True
    j = n // 2
    new = word[j - 1:]
    return not any(is_subword(word[i - 1: 2 * i], new) for i in range(1, j))


def _longest(prefix: str, k: int, max_len: int) -> str:
    """Lexicographically first longest (*)-word below ``prefix`` (capped at ``max_len``)."""
    best = prefix
    stack = [prefix]
    letters = [str(c) for c in range(k, 0, -1)]
    while stack:
        w = stack.pop()
        if len(w) > len(best):
            best = w
            if len(best) == max_len:
                break
        if len(w) < max_len:
            stack.extend(w + c for c in letters if _extends(w + c))
    return best


def n_of_k(k: int, max_len: int, jobs: int = 1) -> NkResult:
    """Exact n(k) if some length <= max_len admits no (*)-word, else the lower bound max_len.

    Violation of (*) persists under extension, so only (*)-words are
    extended.  Words are explored in :func:`next_word` order; with
    ``jobs > 1`` the first letter is partitioned across processes and the
    results merged by (length, order).
    """
    if k < 1 or k > 9:
        raise ValueError("k must be in 1..9")
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    roots = [str(c) for c in range(1, k + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            found = list(ex.map(_longest, roots, [k] * k, [max_len] * k))
    else:
        found = []
        for r in roots:
            found.append(_longest(r, k, max_len))
            if len(found[-1]) == max_len:
                break
    longest = max(len(w) for w in found)
    witness = next(w for w in found if len(w) == longest)
    return NkResult(k, longest, longest < max_len, witness)
