import os
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from tropgeom.arith import NEG_INF  # noqa: E402
from tropgeom.plane import PlanePoint  # noqa: E402

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8).map(
    lambda q: q.numerator if q.denominator == 1 else q)
scalars = st.one_of(st.just(NEG_INF), rationals)
small_ints = st.integers(-6, 6)
plane_points = st.builds(PlanePoint, rationals, rationals)


def vectors(d, elements=scalars):
    return st.lists(elements, min_size=d, max_size=d).map(tuple)


def half(x):
    return Fraction(x, 2)


# acceptance criteria report: id -> (passed, detail), filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key:>2}. {detail}")
