import sys
from pathlib import Path

from hypothesis import settings, strategies as st

from braidwrench.braid import BraidWord

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, max_len=12, min_len=0, strands=None):
    n = strands if strands is not None else draw(st.integers(min_strands, max_strands))
    if n < 2:
        return BraidWord(n, ())
    letters = draw(st.lists(
        st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
        min_size=min_len, max_size=max_len,
    ))
    return BraidWord(n, tuple(letters))


@st.composite
def word_pairs(draw, min_strands=2, max_strands=5, max_len=10):
    n = draw(st.integers(min_strands, max_strands))
    return draw(braid_words(strands=n, max_len=max_len)), draw(braid_words(strands=n, max_len=max_len))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.CRITERIA):
        entry = mod.CRITERIA[num]
        fails = entry["failures"]
        status = "FAIL" if fails else "PASS"
        line = f"[{status}] criterion {num}: {entry['title']} ({entry['cases'] - len(fails)}/{entry['cases']} ok)"
        terminalreporter.write_line(line)
        for detail in fails[:6]:
            terminalreporter.write_line(f"         {detail}")
