import csv
import io
import json

import pytest

from peo import cli
from peo.golden import O_N
from peo.schemas import validate


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_exact_prime(capsys):
    code, out, _ = run(capsys, "count", "exact", "--method", "prime", "-n", "12")
    doc = json.loads(out)
    assert code == 0 and doc["values"][-1] == "37003723200"
    validate("count", doc)


def test_count_exact_zero(capsys):
    code, out, _ = run(capsys, "count", "exact", "-n", "0")
    assert json.loads(out)["values"] == ["1"]


def test_count_family_csv(capsys):
    code, out, _ = run(capsys, "count", "family", "--family", "prime-subset", "-k", "3", "-n", "7",
                       "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "value"]
    assert [r[1] for r in rows[-3:]] == ["4216", "37172", "339406"]


def test_count_family_modes_agree(capsys):
    outs = []
    for extra in ([], ["--raw"], ["--mode", "picard"]):
        code, out, _ = run(capsys, "count", "family", "--family", "superset", "-k", "2", "-n", "8", *extra)
        assert code == 0
        outs.append(json.loads(out)["values"])
    assert outs[0] == outs[1] == outs[2]


def test_output_is_independent_of_threads(capsys, monkeypatch):
    _, a, _ = run(capsys, "count", "exact", "-n", "11", "--threads", "1")
    monkeypatch.setenv("PEO_THREADS", "3")
    _, b, _ = run(capsys, "count", "exact", "-n", "11")
    assert a == b


def test_verify_single_equation(capsys):
    code, out, _ = run(capsys, "verify", "--eq", "eq3", "--order", "50")
    doc = json.loads(out)
    assert code == 0 and doc["results"][0]["status"] == "holds through 50"
    validate("verify", doc)


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--order", "20", "--format", "csv")
    assert code == 0
    assert out.count("holds through 20") == 7


def test_table1_has_no_diffs(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, _, _ = run(capsys, "table1", "--n", "7", "--kmax", "3", "-o", str(path))
    doc = json.loads(path.read_text())
    assert code == 0 and doc["diffs"] == []
    validate("table1", doc)


def test_oracle_passes(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4", "--kmax", "2")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    validate("oracle", doc)


def test_bounds_single_family(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "prime-subset", "-k", "1", "-n", "40",
                       "--exact-n", "10")
    doc = json.loads(out)
    assert code == 0
    validate("bounds", doc)
    names = [s["name"] for s in doc["sequences"]]
    assert names == ["o_n", "prime_subset k=1"]
    growth = {r["polynomial"]: r["growth"] for r in doc["roots"]}
    assert abs(growth["delta1"] - 9.684) < 1e-3


@pytest.mark.parametrize("argv", [
    ["count", "family", "-n", "3"],
    ["count", "exact", "-n", "-1"],
    ["count", "exact", "--family", "subset", "-k", "1"],
    ["count", "family", "--family", "subset", "-k", "1", "--checkpoint", "x.npz"],
    ["count", "exact", "--threads", "0"],
    ["oracle", "--n", "12"],
    ["verify", "--eq", "nonsense"],
    ["bounds", "--family", "subset"],
    ["frobnicate"],
])
def test_bad_config_exit_code(capsys, argv):
    code = None
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == cli.EXIT_CONFIG


def test_bad_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("PEO_THREADS", "many")
    assert cli.main(["count", "exact", "-n", "2"]) == cli.EXIT_CONFIG


def test_resource_limit_exit_code(capsys):
    code, out, _ = run(capsys, "count", "exact", "-n", "12", "--mem-gb", "0.0001")
    doc = json.loads(out)
    assert code == cli.EXIT_RESOURCE
    assert doc["values"] == [str(v) for v in O_N[:doc["completed_through"] + 1]]


def test_golden_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr("peo.exact.count", lambda N, method, **kw: [1, 2, 11][:N + 1])
    code, out, _ = run(capsys, "count", "exact", "-n", "2")
    assert code == cli.EXIT_MISMATCH
    assert json.loads(out)["golden_mismatches"] == [2]
