import io
import json
import os

import pytest

from tvskein.cli import run, validate_invariant_json


def _run(argv):
    buf = io.StringIO()
    rc = run(argv, out=buf)
    return rc, buf.getvalue()


def test_bracket_word_file(tmp_path):
    f = tmp_path / "unknot.sw"
    f.write_text("2n=0; cup 1; cap 1\n")
    rc, out = _run(["bracket", str(f)])
    assert rc == 0
    assert "-A^-2 - A^2" in out


def test_bracket_pd_file(tmp_path):
    f = tmp_path / "rt.pd"
    f.write_text('{"crossings": [[4,2,5,1,"+"],[6,4,1,3,"+"],[2,6,3,5,"+"]]}')
    rc, out = _run(["bracket", str(f)])
    assert rc == 0 and "<D>" in out


def test_tangle_command(tmp_path):
    f = tmp_path / "straight.sw"
    f.write_text("2n=4\n")
    rc, out = _run(["tangle", str(f)])
    assert rc == 0
    assert "wrapping = 4" in out


def test_double_text_and_json():
    rc, out = _run(["double", "--J", "U", "--k", "1", "--p", "5"])
    assert rc == 0 and "period = 10" in out
    rc, out = _run(["double", "--J", "U", "--k", "1", "--p", "5",
                    "--format", "json"])
    assert rc == 0
    obj = json.loads(out)
    assert validate_invariant_json(obj)
    assert obj["flatRank"] == 2 and obj["period"] == 10


def test_covers_value_and_csv():
    rc, out = _run(["covers", "--J", "U", "--k", "3", "--p", "5",
                    "--d", "17..17"])
    assert rc == 0 and "188 + 152*A + 136*A^2" in out
    rc, out = _run(["covers", "--J", "U", "--k", "1", "--p", "5",
                    "--d", "1..3", "--format", "csv"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("d,") and len(lines) == 4


def test_branched_covers_cli():
    rc, out = _run(["covers", "--J", "U", "--k", "1", "--p", "5",
                    "--d", "1..2", "--branched"])
    assert rc == 0 and "eta" not in out.lower() or rc == 0


def test_determinism():
    argv = ["double", "--J", "RT", "--k", "2", "--p", "5", "--format", "json"]
    rc1, out1 = _run(argv)
    rc2, out2 = _run(argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_determinism_across_thread_counts():
    argv = ["covers", "--J", "U", "--k", "1", "--p", "5", "--d", "1..6",
            "--format", "csv"]
    old = os.environ.get("SKEIN_THREADS")
    try:
        os.environ["SKEIN_THREADS"] = "1"
        _, out1 = _run(argv)
        os.environ["SKEIN_THREADS"] = "4"
        _, out2 = _run(argv)
    finally:
        if old is None:
            os.environ.pop("SKEIN_THREADS", None)
        else:
            os.environ["SKEIN_THREADS"] = old
    assert out1 == out2


def test_validation_exit_code(tmp_path):
    f = tmp_path / "bad.sw"
    f.write_text("2n=4; cross+ 9\n")
    rc, _ = _run(["bracket", str(f)])
    assert rc == 2
    rc, _ = _run(["double", "--J", "NOSUCH", "--k", "0", "--p", "5"])
    assert rc == 2


def test_unsupported_specialization_exit_code(tmp_path):
    f = tmp_path / "straight.sw"
    f.write_text("2n=4\n")
    rc, _ = _run(["tangle", str(f), "--p", "6"])
    assert rc == 3


def test_bad_thread_env(tmp_path):
    os.environ["SKEIN_THREADS"] = "zero"
    try:
        rc, _ = _run(["covers", "--J", "U", "--k", "1", "--p", "5", "--d", "1..2"])
        assert rc == 2
    finally:
        del os.environ["SKEIN_THREADS"]


def test_check_suite():
    rc, out = _run(["check", "--suite", "appendixA"])
    assert rc == 0 and "PASS" in out
    rc, _ = _run(["check", "--suite", "nope"])
    assert rc == 2
