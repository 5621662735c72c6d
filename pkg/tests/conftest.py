import os

import pytest
from hypothesis import HealthCheck, settings

from quatlie.spfactory import Signature, Variant, build_embedding, build_m_algebra

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# one line per acceptance criterion, echoed in the terminal summary
CRITERIA = {}


def record_criterion(number, ok, detail):
    CRITERIA[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


_EMB = {}


def embedding(k, l, variant):
    key = (k, l, Variant(variant))
    if key not in _EMB:
        E = build_embedding(Signature(k, l), key[2])
        _EMB[key] = (E, build_m_algebra(E))
    return _EMB[key]


@pytest.fixture(scope="session")
def emb():
    return embedding
