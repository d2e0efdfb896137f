from fractions import Fraction

from hypothesis import strategies as st

from qme.arith import Series

small_fractions = st.builds(
    Fraction, st.integers(-50, 50), st.integers(1, 12))


@st.composite
def series(draw, order=None, const=None):
    if order is None:
        order = draw(st.integers(1, 10))
    cs = draw(st.lists(small_fractions, min_size=order + 1, max_size=order + 1))
    if const is not None:
        cs[0] = Fraction(const)
    return Series(cs, order)


def v(order):
    return Series.monomial(1, order)


# --- acceptance summary ----------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        _criteria[number] = (title, "FAIL" if call.excinfo is not None else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        terminalreporter.write_line(f"[{outcome}] criterion {number}: {title}")
