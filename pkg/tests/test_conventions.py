import json

import pytest

from cmw import conventions
from cmw.core import IntegrityError


def test_calibration_pins_down_choices():
    led = conventions.calibrate()
    assert led["delta_e0"] == "-1"
    assert led["class_coordinates"] == "log"
    assert conventions.delta0(led) == -1


def test_packaged_ledger_matches_calibration():
    assert conventions.load(conventions.DEFAULT_LEDGER) == conventions.calibrate()


def test_freeze_writes_then_reads(tmp_path):
    p = tmp_path / "sub" / "ledger.json"
    first = conventions.freeze(p)
    body = p.read_bytes()
    assert conventions.freeze(p) == first
    assert p.read_bytes() == body


def test_freeze_rejects_tampered_ledger(tmp_path):
    p = tmp_path / "ledger.json"
    led = conventions.calibrate()
    led["delta_e0"] = "1"
    p.write_text(json.dumps(led))
    with pytest.raises(IntegrityError, match="delta_e0"):
        conventions.freeze(p)


def test_env_var_overrides_path(tmp_path, monkeypatch):
    p = tmp_path / "env.json"
    monkeypatch.setenv(conventions.ENV_VAR, str(p))
    assert conventions.ledger_path() == p
    conventions.freeze()
    assert p.exists()


def test_unwritable_path_reports_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(OSError, match="file"):
        conventions.freeze(blocker / "ledger.json")


def test_dumps_is_canonical():
    led = conventions.calibrate()
    assert conventions.dumps(led) == conventions.dumps(dict(reversed(list(led.items()))))
