import pytest

from catalan_parity.utils import (
    MAX_N_ENV,
    CensusMode,
    Parity,
    SeqKind,
    check_cap,
    enumeration_cap,
)


def test_seq_kind_tags():
    assert [k.value for k in SeqKind] == ["c", "g", "f", "t", "a", "af", "at"]
    assert SeqKind("af") is SeqKind.AF
    assert SeqKind.AT.label == "a_n(t_n)"


@pytest.mark.parametrize("value, expected", [(0, Parity.EVEN), (7, Parity.ODD)])
def test_parity_of(value, expected):
    assert Parity.of(value) is expected


def test_default_caps(monkeypatch):
    monkeypatch.delenv(MAX_N_ENV, raising=False)
    assert enumeration_cap(CensusMode.TRUTH_TABLE) == 10
    assert enumeration_cap(CensusMode.PRODUCT) == 14


@pytest.mark.parametrize(
    "raw, truth_table, product",
    [("12", 12, 14), ("30", 20, 30), ("3", 10, 14), ("", 10, 14)],
)
def test_env_override(monkeypatch, raw, truth_table, product):
    monkeypatch.setenv(MAX_N_ENV, raw)
    assert enumeration_cap(CensusMode.TRUTH_TABLE) == truth_table
    assert enumeration_cap(CensusMode.PRODUCT) == product


@pytest.mark.parametrize("raw", ["lots", "-1"])
def test_env_override_rejects_garbage(monkeypatch, raw):
    monkeypatch.setenv(MAX_N_ENV, raw)
    with pytest.raises(ValueError, match=MAX_N_ENV):
        enumeration_cap(CensusMode.PRODUCT)


def test_check_cap_message(monkeypatch):
    monkeypatch.delenv(MAX_N_ENV, raising=False)
    check_cap(10, CensusMode.TRUTH_TABLE)
    with pytest.raises(ValueError, match="truth_table enumeration cap of 10"):
        check_cap(11, CensusMode.TRUTH_TABLE)
