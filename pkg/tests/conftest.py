import hypothesis.strategies as st
import pytest
from hypothesis import settings

from tmlab.machine import HALT, Action, Machine

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def machines(draw, max_states=4, max_symbols=3, total=True, min_symbols=1):
    n = draw(st.integers(1, max_states))
    m = draw(st.integers(min_symbols, max_symbols))
    states = tuple(f"q{i}" for i in range(n))
    symbols = tuple(str(e) for e in range(m))
    table = {}
    for q in states:
        for e in symbols:
            if not total and draw(st.booleans()) and draw(st.booleans()):
                continue
            nxt = draw(st.sampled_from(states + (HALT,)))
            table[(q, e)] = Action(nxt, draw(st.sampled_from(symbols)), draw(st.sampled_from("LR")))
    return Machine(states, symbols, "0", "q0", table)


@pytest.fixture
def shout(capsys):
    """Print straight to the terminal, bypassing capture."""
    def _print(line):
        with capsys.disabled():
            print(line)
    return _print
