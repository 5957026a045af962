"""
tests/conftest.py

Shared fixtures: testing settings, a fresh relation store and an app
wired to in-memory streams
"""

import io
import os

import pytest

# Set testing environment before imports
os.environ["CONVERSE_CONFIG"] = "testing"


@pytest.fixture(scope="session")
def test_settings():
    """Testing configuration (text logs, WARNING level)"""
    from converse.config import get_settings

    return get_settings()


@pytest.fixture
def store_11():
    """Relation store at level 11 holding f|P = f and f|H = eps f"""
    from converse.hecke_ring import Hypothesis, new_session

    return new_session(11, [Hypothesis("P"), Hypothesis("H")])


@pytest.fixture
def app(test_settings):
    """App using the testing config instead of reading one from disk"""
    from converse import create_app

    return create_app(test_settings)


@pytest.fixture
def streams():
    """(out, err) buffers handed to ConverseApp.run"""
    return io.StringIO(), io.StringIO()


@pytest.fixture
def run_cli(app, streams):
    """Run argv through the app; returns (exit code, stdout, stderr)"""
    out, err = streams

    def _run(*argv):
        out.seek(0)
        out.truncate()
        err.seek(0)
        err.truncate()
        code = app.run(list(argv), out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    return _run


@pytest.fixture(scope="session")
def f11_series():
    """eta(z)^2 eta(11z)^2 to 400 terms"""
    from converse.analytic import eta_quotient

    return eta_quotient({1: 2, 11: 2}, 400)


@pytest.fixture(scope="session")
def delta_series():
    """Ramanujan's Delta to 300 terms"""
    from converse.analytic import eta_quotient

    return eta_quotient({1: 24}, 300)
