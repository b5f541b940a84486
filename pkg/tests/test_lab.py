import pytest
from hypothesis import given, strategies as st

from tmlab.lab.ackermann import ackermann
from tmlab.lab.busybeaver import ClassTooLarge, bb_enumerate, bb_tree, class_size, decode_index, replay
from tmlab.lab.corpus import halting_corpus
from tmlab.lab.frontier import PRESETS, FrontierError, frontier_count, parse_impls
from tmlab.lab.verify import verify_simulation
from tmlab.machine import HALT, Action, Machine, run
from tmlab.samples import four_step_machine
from tmlab.transforms import reduce_states_3, reduce_symbols


# --- Ackermann -------------------------------------------------------------

def test_ackermann_known_values():
    assert ackermann(3, 4).value == ackermann(4, 3).value == 65536
    assert ackermann(3, 3).value == 16


@pytest.mark.parametrize("f", range(1, 7))
def test_ackermann_small_arguments(f):
    assert ackermann(f, 1).value == 2
    assert ackermann(f, 2).value == 4


@pytest.mark.parametrize("c", range(1, 65))
def test_ackermann_rows_one_and_two(c):
    assert ackermann(1, c).value == 2 * c
    assert ackermann(2, c).value == 2 ** c


@given(st.integers(2, 4), st.integers(2, 4))
def test_ackermann_recurrence(f, c):
    v = ackermann(f, c, 1 << 17)
    prev = ackermann(f, c - 1, 1 << 17)
    if v.exact and prev.exact:
        assert ackermann(f - 1, prev.value, 1 << 17).value == v.value


def test_ackermann_overflow():
    v = ackermann(4, 4, 10**6)
    assert not v.exact and v.value is None
    assert v.overflow.budget == 10**6


def test_ackermann_rejects_bad_arguments():
    for args in [(0, 1), (1, 0)]:
        with pytest.raises(ValueError):
            ackermann(*args)


# --- Busy Beaver -------------------------------------------------------------

def test_bb_tiny_classes():
    r = bb_enumerate(1, 2, 1000)
    assert r.champion_steps == 1 and (r.halting, r.exceeded) == (32, 32)
    assert bb_enumerate(2, 1, 1000).champion_steps == 2
    assert bb_enumerate(3, 1, 1000).champion_steps == 3


def test_bb_two_by_two():
    r = bb_enumerate(2, 2, 1000)
    assert r.champion_steps == 6 and (r.halting, r.exceeded) == (9784, 10952)
    assert r.total == class_size(2, 2)
    assert replay(r) == 6
    assert run(decode_index(2, 2, r.champion_index), 1000).steps == 6


@pytest.mark.parametrize("n,m", [(1, 2), (1, 3), (2, 1), (2, 2), (3, 1)])
def test_bb_tree_agrees_with_brute_force(n, m):
    a, b = bb_enumerate(n, m, 200), bb_tree(n, m, 200)
    assert (a.champion_steps, a.halting, a.exceeded) == (b.champion_steps, b.halting, b.exceeded)


def test_bb_jobs_do_not_change_result():
    assert bb_enumerate(2, 2, 100, jobs=2) == bb_enumerate(2, 2, 100)


def test_bb_champion_monotone_in_cutoff():
    steps = [bb_tree(2, 2, c).champion_steps for c in (1, 3, 5, 10, 50)]
    assert steps == sorted(steps) and steps[0] == 1 and steps[-1] == 6


def test_bb_three_states_tree():
    r = bb_tree(3, 2, 50)
    assert r.champion_steps == 21 and (r.halting, r.exceeded) == (7571840, 9205376)


def test_bb_guard():
    with pytest.raises(ClassTooLarge):
        bb_enumerate(4, 2, 100)
    with pytest.raises(ValueError):
        bb_enumerate(0, 2, 100)


# --- frontier ----------------------------------------------------------------

def brute_frontier(impls):
    nmax = max(n for n, m in impls if m <= 2)
    mmax = max(m for n, m in impls if n <= 2)
    return sum(1 for n in range(2, nmax + 1) for m in range(2, mmax + 1)
               if not any(n >= a and m >= b for a, b in impls))


def test_frontier_small():
    assert frontier_count([(2, 3), (3, 2)]).total == 1
    assert frontier_count([(2, 2)]).total == 0


@pytest.mark.parametrize("preset", ["n3", "n4"])
def test_frontier_presets_consistent(preset):
    res = frontier_count(PRESETS[preset])
    assert sum(b.count for b in res.bands) == res.total == brute_frontier(PRESETS[preset])


def test_frontier_preset_totals():
    assert frontier_count(PRESETS["n3"]).total == 36922
    assert frontier_count(PRESETS["n4"]).total == 51897


@given(st.lists(st.tuples(st.integers(2, 40), st.integers(2, 40)), min_size=1, max_size=6),
       st.integers(2, 60), st.integers(2, 60))
def test_frontier_matches_brute_force(extra, cap_n, cap_m):
    impls = [(2, cap_m), (cap_n, 2)] + extra
    res = frontier_count(impls)
    assert res.total == brute_frontier(impls) == sum(b.count for b in res.bands)


@given(st.integers(0, 6), st.integers(0, 6), st.sampled_from(["n3", "n4"]))
def test_frontier_ignores_dominated_sizes(i, bump, preset):
    base = list(PRESETS[preset])
    n, m = base[i % len(base)]
    assert frontier_count(base + [(n + bump, m + 1)]).total == frontier_count(base).total


def test_frontier_unbounded_region_is_an_error():
    with pytest.raises(FrontierError):
        frontier_count([(5, 5)])
    with pytest.raises(FrontierError):
        parse_impls("2x")


def test_parse_impls():
    assert parse_impls("2x1840, 3X1080,") == ((2, 1840), (3, 1080))


# --- verification and corpus -------------------------------------------------

def test_verify_budget_exhausted():
    m = four_step_machine()
    v = verify_simulation(m, reduce_states_3(m), 1, head=1)
    assert v.kind == "budget-exhausted" and not v.equivalent


def test_verify_detects_wrong_reduction():
    m = four_step_machine()
    other = Machine(("a",), ("0", "1", "2", "3"), "0", "a", {("a", "0"): Action(HALT, "2", "R")})
    wrong = reduce_symbols(other, 2)
    v = verify_simulation(m, wrong, 100, head=1)
    assert v.kind == "diverged"


def test_corpus_is_deterministic():
    a, b = halting_corpus(1234, 10), halting_corpus(1234, 10)
    assert a == b and all(run(m, 200).halted for m in a)
    assert halting_corpus(1, 10) != a
