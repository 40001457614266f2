import csv
import io
import json

import pytest

from ocrank.cli import RunConfig, UsageError, main, run


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_moments_csv(capsys):
    code, out, _ = call(capsys, "moments", "--d", "1", "--k", "1", "--nmax", "3", "--format", "csv")
    assert code == 0
    assert out == "d,k,n,value\n1,1,1,1\n1,1,2,3\n1,1,3,6\n"


def test_moments_json_uses_strings(capsys):
    code, out, _ = call(capsys, "moments", "--d", "1", "--k", "6", "--nmax", "100", "--format", "json")
    doc = json.loads(out)
    assert doc["columns"] == ["d", "k", "n", "value"]
    assert all(isinstance(v, str) for row in doc["rows"] for v in row.values())
    assert int(doc["rows"][-1]["value"]) > 2**53


def test_table_csv_schema(capsys):
    code, out, _ = call(capsys, "table", "--d", "2", "--nmax", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["d", "n", "m", "count"]
    got = {(int(r["m"]), int(r["n"])): int(r["count"]) for r in rows}
    assert got[(0, 2)] == 2 and got[(1, 2)] == 1 and got[(-1, 2)] == 1
    ordering = [(int(r["n"]), int(r["m"])) for r in rows]
    assert ordering == sorted(ordering)


def test_table_combinatorial(capsys):
    code, out, _ = call(capsys, "table", "--nmax", "1", "--convention", "combinatorial")
    assert out.splitlines()[1:] == ["1,0,0,1", "1,1,-1,1", "1,1,0,1", "1,1,1,0"]


def test_gap_json(capsys):
    code, out, _ = call(capsys, "gap", "--d", "3", "--nmax", "20", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["first_negative"] == {"n": "10", "value": "-2"}
    assert doc["columns"] == ["d", "n", "crank_moment", "rank_moment", "difference"]


def test_gap_csv_none_negative(capsys):
    code, out, _ = call(capsys, "gap", "--d", "1", "--nmax", "10")
    assert out.splitlines()[0] == "d,n,crank_moment,rank_moment,difference"
    assert all(int(line.split(",")[-1]) >= 0 for line in out.splitlines()[1:])


def test_verify_trivial(capsys):
    code, out, _ = call(capsys, "verify", "--nmax", "0")
    assert code == 0
    assert all(line.split(",")[1] == "pass" for line in out.splitlines()[1:])


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", "--nmax", "12", "--dmax", "2", "--kmax", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass"


def test_verify_failure_exit_status(monkeypatch):
    from ocrank import cli
    from ocrank.verify import VerificationReport, Witness

    bad = VerificationReport("broken", {}, "fail", [Witness(1, 1, 1, 1, 1, 0)])
    monkeypatch.setattr(cli, "run_suite", lambda *a: [bad])
    text, status = run(RunConfig("verify"))
    assert status == 1 and "broken,fail" in text


@pytest.mark.parametrize("argv", [
    ["moments", "--k", "0"],
    ["table", "--nmax", "-1"],
    ["table", "--convention", "combinatorial", "--nmax", "45"],
    ["gap", "--d", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["moments", "--format", "xml"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_convention_outside_table_rejected():
    with pytest.raises(UsageError):
        run(RunConfig("moments", convention="combinatorial"))


def test_output_file_and_determinism(tmp_path, capsys):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["table", "--d", "3", "--nmax", "15", "--out", str(p1)])
    main(["table", "--d", "3", "--nmax", "15", "--out", str(p2), "--backend", "numpy"])
    assert p1.read_bytes() == p2.read_bytes()
    assert capsys.readouterr().out == ""


def test_bench_reports_both_backends(capsys):
    code, out, _ = call(capsys, "bench", "--nmax", "120", "--table-nmax", "20")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["backend"] for r in rows} == {"python", "numba", "numpy"}
    assert all(float(r["seconds"]) >= 0 for r in rows)
