import sys
from math import gcd
from functools import reduce
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from semigroup_forge import make_semigroup  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def semigroups(draw, max_gen=30, max_n=5):
    gens = draw(st.lists(st.integers(2, max_gen), min_size=2, max_size=max_n))
    if reduce(gcd, gens) != 1:
        gens.append(max(gens) + 1)  # consecutive integers are coprime
    return make_semigroup(gens)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
