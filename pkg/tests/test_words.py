import itertools
import random

import pytest
from hypothesis import given, strategies as st

from tmlab.words import NOTES, blocks, is_subword, n_of_k, next_word, satisfies_star


def dp_subword(a, b):
    """Longest-common-subsequence check, independent of the greedy scan."""
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1] == len(a)


def pairwise_star(word):
    n = len(word)
    bs = [word[i - 1: 2 * i] for i in range(1, n // 2 + 1)]
    return all(not dp_subword(bs[i], bs[j]) for i in range(len(bs)) for j in range(i + 1, len(bs)))


def test_examples():
    assert satisfies_star("12221111111") is True
    assert satisfies_star("1111") == (1, 2)
    assert satisfies_star("11222111111") == (1, 4)
    assert "11222111111" in NOTES
    assert blocks("123456") == ["12", "234", "3456"]


def test_short_words_trivially_satisfy():
    assert satisfies_star("") is True and satisfies_star("1") is True
    assert satisfies_star("111") is True  # only one block of length 2 fits


@pytest.mark.parametrize("word,k,nxt", [("113", 3, "121"), ("333", 3, "1111"), ("12", 2, "21"),
                                         ("1", 2, "2"), ("2", 2, "11")])
def test_next_word(word, k, nxt):
    assert next_word(word, k) == nxt


def test_next_word_enumerates_all_words():
    w, seen = "1", []
    while len(w) <= 3:
        seen.append(w)
        w = next_word(w, 2)
    expected = ["".join(p) for n in (1, 2, 3) for p in itertools.product("12", repeat=n)]
    assert seen == expected


@given(st.text("123", max_size=12), st.text("123", max_size=12))
def test_greedy_matches_dp(a, b):
    assert is_subword(a, b) == dp_subword(a, b)


@given(st.text("123", max_size=14), st.text("123", max_size=4))
def test_violation_persists_under_extension(word, tail):
    if satisfies_star(word) is not True:
        assert satisfies_star(word + tail) is not True


@given(st.text("12", max_size=14))
def test_prefix_closure(word):
    if satisfies_star(word) is True:
        for cut in range(len(word)):
            assert satisfies_star(word[:cut]) is True


def test_oracle_agreement_all_binary_words_up_to_12():
    for n in range(13):
        for p in itertools.product("12", repeat=n):
            w = "".join(p)
            assert (satisfies_star(w) is True) == pairwise_star(w)


def test_every_binary_word_of_length_12_violates():
    assert not any(satisfies_star("".join(p)) is True for p in itertools.product("12", repeat=12))


def test_n_of_1_and_2():
    r1 = n_of_k(1, 8)
    assert r1.value == 3 and r1.exact and str(r1) == "n(1) = 3"
    r2 = n_of_k(2, 14)
    assert r2.value == 11 and r2.exact and satisfies_star(r2.witness) is True


def test_n_of_3_lower_bound_only():
    r = n_of_k(3, 13)
    assert not r.exact and r.value == 13 and str(r) == "n(3) >= 13"
    assert satisfies_star(r.witness) is True


def test_parallel_matches_serial():
    assert n_of_k(2, 14, jobs=2) == n_of_k(2, 14)


@pytest.mark.parametrize("k,max_len", [(0, 5), (10, 5), (2, 0)])
def test_n_of_k_rejects_bad_arguments(k, max_len):
    with pytest.raises(ValueError):
        n_of_k(k, max_len)


def test_random_long_words_agree_with_oracle():
    rng = random.Random(7)
    for _ in range(300):
        w = "".join(rng.choice("123") for _ in range(rng.randint(0, 30)))
        assert (satisfies_star(w) is True) == pairwise_star(w)
