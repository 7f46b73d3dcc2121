import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pathcover.bigraph import build

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def bigraphs(draw, max_x=6, max_y=6, min_x=0, max_deg=None):
    nx = draw(st.integers(min_x, max_x))
    ny = draw(st.integers(0, max_y))
    cells = [(i, j) for i in range(nx) for j in range(ny)]
    picked = draw(st.lists(st.sampled_from(cells), unique=True) if cells else st.just([]))
    if max_deg is not None:
        dx, dy, kept = [0] * nx, [0] * ny, []
        for i, j in picked:
            if dx[i] < max_deg and dy[j] < max_deg:
                kept.append((i, j))
                dx[i] += 1
                dy[j] += 1
        picked = kept
    return build(nx, ny, picked)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 9):
        if n in mod.RESULTS:
            ok, detail = mod.RESULTS[n]
            terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        else:
            terminalreporter.write_line(f"criterion {n}: NOT RUN")
