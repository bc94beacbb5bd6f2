import os

from hypothesis import HealthCheck, settings, strategies as st

from reesaci.instance import validate_instance
from reesaci.report import default_suite

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SUITE = [validate_instance(e["m"], e["a"], e["b"]) for e in default_suite()]
STRUCTURED = [s for s in SUITE if s.bsum <= s.amin]
EQUI = [s for s in SUITE if s.equi_generated]
SMALL_M4 = [validate_instance(4, a, b) for a, b in [
    ((2, 2, 2, 2), (1, 1, 0, 0)),
    ((3, 3, 3, 3), (1, 1, 1, 0)),
    ((3, 3, 3, 3), (0, 1, 1, 1)),
    ((4, 4, 4, 4), (1, 1, 1, 1)),
    ((3, 2, 4, 3), (1, 1, 2, 0)),
]]


def instances(structured=False):
    return st.sampled_from(STRUCTURED if structured else SUITE)


def monomials(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def monomial_sets(n, max_exp=3, max_size=6):
    return st.lists(monomials(n, max_exp).filter(any), min_size=1, max_size=max_size)


# criterion number -> "PASS/FAIL  n. title", filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
