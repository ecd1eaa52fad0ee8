import pytest

from toricsplit.common.env import blowup_cap, get_int, is_debug, max_workers
from toricsplit.common.errors import BundleDataError, ParseError


def test_flags(monkeypatch):

    monkeypatch.delenv('TSP_DEBUG', raising=False)
    assert not is_debug()

    monkeypatch.setenv('TSP_DEBUG', 'True')
    assert is_debug()

    monkeypatch.setenv('TSP_DEBUG', '0')
    assert not is_debug()


def test_integers(monkeypatch):

    monkeypatch.delenv('TSP_MAX_WORKERS', raising=False)
    monkeypatch.delenv('TSP_BLOWUP_CAP', raising=False)
    assert max_workers() == 4
    assert blowup_cap() == 9

    monkeypatch.setenv('TSP_MAX_WORKERS', '-3')
    assert max_workers() == 1

    monkeypatch.setenv('TSP_ORACLE_MAX_RETRIES', 'x')
    with pytest.raises(ValueError, match='TSP_ORACLE_MAX_RETRIES'):
        get_int('TSP_ORACLE_MAX_RETRIES', 4)


def test_error_messages():

    error = BundleDataError(['first', 'second', 'third'])
    assert str(error) == 'first (and 2 more)'
    assert error.violations == ['first', 'second', 'third']

    assert str(ParseError('bad token', 7)) == 'line 7: bad token'
    assert ParseError('no file').line_number is None
