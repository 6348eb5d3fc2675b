import json
import subprocess
import sys

import pytest

from conftest import PERM, SMALLGROUPS
from mcikit.catalog import load_group
from mcikit.cli import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, main
from mcikit.mci import mci


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_q8_text(capsys):
    code, out, _ = run(capsys, "analyze", str(PERM / "q8.txt"))
    assert code == EXIT_OK
    assert "mci      1" in out
    assert "exemption Q8" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", str(PERM / "s3.txt"), "--format", "json")
    assert code == EXIT_OK
    row = json.loads(out)
    assert row["m"] == 1 and row["piStar"] == [2, 3]
    assert row["reductionCheck"] is True
    assert row["claims"]["L36"]["status"] == "ok"


def test_analyze_abelian_and_trivial(capsys):
    code, out, _ = run(capsys, "analyze", str(PERM / "trivial.txt"))
    assert code == EXIT_OK and "abelian (undefined)" in out


def test_analyze_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("group X\nperm 3\n1 1 2\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == EXIT_INPUT and "3:" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == EXIT_INPUT


def test_scan_rows_in_file_order(capsys):
    code, out, _ = run(capsys, "scan", str(SMALLGROUPS / "order_008.txt"))
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].split("\t")[:4] == ["label", "order", "abelian", "m"]
    labels = [ln.split("\t")[0] for ln in lines[1:]]
    assert labels == [f"SmallGroup(8,{i})" for i in range(1, 6)]
    ms = {ln.split("\t")[0]: ln.split("\t")[3] for ln in lines[1:]}
    assert ms["SmallGroup(8,3)"] == "2" and ms["SmallGroup(8,4)"] == "1"


def test_scan_empty_directory(capsys, tmp_path):
    code, _, err = run(capsys, "scan", str(tmp_path))
    assert code == EXIT_INPUT and "empty" in err


def test_scan_reports_parse_errors(capsys, tmp_path):
    (tmp_path / "a.txt").write_text("group A\ntable 1\n0\n")
    (tmp_path / "b.txt").write_text("group B\ntable 2\n0 1\n")
    code, _, err = run(capsys, "scan", str(tmp_path))
    assert code == EXIT_INPUT and "b.txt" in err


def test_scan_cap(capsys, tmp_path):
    f = tmp_path / "s8.txt"
    f.write_text("group S8\nperm 8\n2 3 4 5 6 7 8 1\n2 1 3 4 5 6 7 8\n")
    code, _, err = run(capsys, "scan", str(f), "--cap", "100")
    assert code == EXIT_INPUT and "cap" in err


def test_verify_theorem_a_on_p_groups(capsys):
    files = [str(SMALLGROUPS / f"order_{n:03d}.txt") for n in (8, 16, 27)]
    code, out, _ = run(capsys, "verify", *files, "--claims", "TA")
    assert code == EXIT_OK
    assert "total violations\t0" in out
    row = next(ln for ln in out.splitlines() if ln.startswith("TA\t"))
    checked, holds = row.split("\t")[1:3]
    assert checked == holds and int(checked) > 0


def test_verify_json_summary(capsys):
    code, out, _ = run(capsys, "verify", str(PERM), "--claims", "L21,L36", "--format", "json")
    assert code == EXIT_OK
    summary = json.loads(out)
    assert summary["groups"] == 8
    assert summary["violations"] == []


def test_verify_unknown_claim(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", str(PERM), "--claims", "XYZ"])
    assert info.value.code == 2


def test_verify_flags_a_false_claim(capsys, monkeypatch):
    import mcikit.report as report

    # pretend S3 should have mci 2 to check the violation path
    monkeypatch.setattr(report, "expected_mci_one", lambda G: G.order != 6)
    code, out, _ = run(capsys, "verify", str(PERM / "s3.txt"), "--claims", "L21")
    assert code == EXIT_VIOLATION
    assert "VIOLATION\tL21\tS3" in out


def test_construct_round_trip(capsys, tmp_path):
    out_file = tmp_path / "m31.txt"
    code, _, _ = run(capsys, "construct", "modular", "3", "1", "-o", str(out_file))
    assert code == EXIT_OK
    G = load_group(out_file.read_text())
    assert G.order == 81 and mci(G).m == 3
    code, out, _ = run(capsys, "construct", "cyclic", "1")
    assert code == EXIT_OK and out == "group C1\ntable 1\n0\n"


def test_construct_errors(capsys):
    code, _, err = run(capsys, "construct", "pq", "3", "5")
    assert code == EXIT_INPUT and "error" in err
    code, _, _ = run(capsys, "construct", "modular", "3")
    assert code == EXIT_INPUT


def test_hunt_command(capsys, tmp_path):
    log, ck = tmp_path / "hits.log", tmp_path / "ck"
    code, out, _ = run(capsys, "hunt", "10000", "--log", str(log), "--checkpoint", str(ck))
    assert code == EXIT_OK
    assert "none found <= 10000" in out
    assert ck.read_text().strip() == out.split("last_q\t")[1].split()[0]
    code, out, _ = run(capsys, "hunt", "10000", "--log", str(log), "--checkpoint", str(ck))
    assert "scanned\t0" in out
    code, _, err = run(capsys, "hunt", "1", "--log", str(log))
    assert code == EXIT_INPUT


def test_jobs_do_not_change_output(capsys):
    files = [str(SMALLGROUPS / f"order_{n:03d}.txt") for n in (24, 32, 60)]
    _, one, _ = run(capsys, "scan", *files, "--jobs", "1")
    _, many, _ = run(capsys, "scan", *files, "--jobs", "4")
    assert one == many


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mcikit", "analyze", str(PERM / "d8.txt")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "mci      2" in proc.stdout
