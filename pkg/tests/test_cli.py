import csv
import json
import subprocess
import sys

import pytest

from kronsat import cli, kron2row


def test_kron_json_record():
    record, _, code = cli.run(["kron", "6,4,2", "6,6", "7,5", "--verify"])
    assert code == 0
    assert record["result"] == {"value": 0}
    assert record["inputs"] == {"lambda": "6,4,2", "mu": "6,6", "nu": "7,5"}
    assert record["meta"]["method"] == "rosas"
    assert "seconds" not in record["meta"]


def test_json_round_trip_and_reevaluate():
    record, _, _ = cli.run(["stretch", "10,6,2", "10,8", "11,7"])
    text = cli.dumps(record)
    assert json.loads(text) == record
    assert cli.dumps(json.loads(text)) == text
    assert cli.reevaluate(json.loads(text))


def test_auto_method_choices():
    assert cli.run(["kron", "2,2,2,2", "5,3", "4,4"])[0]["meta"]["method"] == "reduction"
    assert cli.run(["kron", "1,1,1", "2,1", "3"])[0]["meta"]["method"] == "length-bound"
    assert cli.run(["kron", "2,1,1", "2,1,1", "3,1"])[0]["meta"]["method"] == "oracle"


def test_zerokron():
    record, text, code = cli.run(["zerokron", "12,8,4", "12,12", "14,10"])
    assert (text, code, record["result"]["positive"]) == ("positive", 0, True)


def test_rkron_and_lr():
    assert cli.run(["rkron", "2", "1", "1", "--polytope"])[0]["result"]["value"] == 1
    assert cli.run(["rkron", "2", "1", "1"])[0]["result"]["value"] == 1
    assert cli.run(["lr", "3,2,1", "2,1", "2,1", "--via-rkron"])[0]["result"]["value"] == 2
    assert cli.run(["kostka", "3,2", "2,2,1"])[0]["result"]["value"] == 2


@pytest.mark.parametrize(
    "argv,code",
    [
        (["kron", "3,2", "2,2", "3,2"], 2),
        (["kron", "2,3", "5", "5"], 2),
        (["kron", "5,5,5", "10,5", "15", "--method", "oracle", "--max-n", "10"], 4),
        (["stretch", "6,4,2", "6,6", "7,5", "--degree", "0"], 2),
        (["stretch", "6,4,2", "6,6", "7,5", "--cap", "0"], 4),
        (["rkron", "2,1,1", "1", "1", "--polytope"], 2),
    ],
)
def test_exit_codes(argv, code):
    assert cli.run(argv)[2] == code


def test_verify_mismatch(monkeypatch):
    monkeypatch.setattr(kron2row, "kron_two_row", lambda t: 99)
    assert cli.run(["kron", "2,2", "2,2", "2,2", "--verify"])[2] == 3


def test_selftest_and_negative_control(monkeypatch, tmp_path):
    path = tmp_path / "self.csv"
    record, _, code = cli.run(["selftest", "--max-weight", "5", "--csv", str(path)])
    assert code == 0 and record["result"]["passed"]
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["lambda", "mu", "nu", "rosas", "reduced", "oracle", "ok"]
    assert len(rows) == record["result"]["checked"] + 1
    monkeypatch.setattr(kron2row, "kron_two_row", lambda t: 0)
    record, _, code = cli.run(["selftest", "--max-weight", "5"])
    assert code == 3 and record["result"]["mismatches"]


def test_hunt_csv(tmp_path):
    path = tmp_path / "hits.csv"
    record, _, code = cli.run(["hunt", "--max-lambda1", "12", "--max-weight", "12", "--nmax", "4", "--csv", str(path)])
    assert code == 0 and record["result"]["count"] == 2
    assert all(record["result"]["classification"].values())
    rows = list(csv.reader(path.open()))
    assert rows[1][:3] == ["6,4,2", "6,6", "7,5"]


def test_timings_opt_in():
    record, _, _ = cli.run(["kostka", "2,1", "1,1,1", "--timings"])
    assert record["meta"]["seconds"] >= 0


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "kronsat.cli", "kron", "2,2", "2,2", "2,2", "--json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["result"]["value"] == 1
    bad = subprocess.run([sys.executable, "-m", "kronsat.cli", "kron", "3", "2"], capture_output=True, text=True)
    assert bad.returncode == 2


def test_json_is_byte_identical():
    argv = ["hunt", "--max-lambda1", "8", "--mode", "ph2", "--json"]
    assert cli.dumps(cli.run(argv)[0]) == cli.dumps(cli.run(argv)[0])
    serial = cli.run(argv)[0]["result"]
    assert cli.run(argv + ["--workers", "2"])[0]["result"] == serial
