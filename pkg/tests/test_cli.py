import json

import pytest

from cqfsym.cli import EXIT_FAIL, EXIT_GUARD, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_edge_json(capsys):
    code, out, _ = run(capsys, "compute", "--graph", '{"n": 2, "edges": [[1, 2]]}', "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["cqf"] == {"degree": 2, "terms": [{"index": [1, 1], "poly": [1, 1]}]}
    assert data["e_expansion"] == {"degree": 2, "terms": [{"index": [2], "poly": [1, 1]}]}
    assert data["symmetric"] and data["palindromic"]


def test_compute_human_and_witness(capsys):
    code, out, _ = run(capsys, "compute", "--graph", '{"n": 3, "edges": [[1, 3], [2, 3]]}')
    assert code == EXIT_OK
    assert "symmetric: False" in out and "(2, 1) vs (1, 2)" in out


def test_compute_from_file(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text('{"n": 3, "edges": [[1, 2], [2, 3]]}')
    code, out, _ = run(capsys, "compute", "--graph", f"@{f}", "--json")
    assert code == EXIT_OK and json.loads(out)["e_positive"]


def test_compute_family(capsys):
    code, out, _ = run(capsys, "compute", "--family", "mixed", "--spec", "fb", "--k", "3", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["symmetric"] and data["geometry"]["spec"] == "fb"


def test_family_and_catalogs(capsys):
    code, out, _ = run(capsys, "family", "--family", "mountain", "--p", "2", "--k", "2")
    assert code == EXIT_OK
    assert json.loads(out)["graph"] == {"n": 3, "edges": [[1, 2], [1, 3], [2, 3]]}
    code, out, _ = run(capsys, "family", "--catalog", "dags", "--n", "3")
    assert code == EXIT_OK and len(out.splitlines()) == 4
    code, out, _ = run(capsys, "family", "--family", "nui", "--h", "2,3,3")
    assert json.loads(out)["graph"]["edges"] == [[1, 2], [2, 3]]


def test_verify_theorem(capsys):
    code, out, _ = run(capsys, "verify", "cor-cycle", "--max-n", "5", "--json")
    assert code == EXIT_OK and json.loads(out)["passed"]


def test_verify_map(capsys):
    code, out, _ = run(
        capsys, "verify", "--map", "swap", "--family", "mixed", "--spec", "fb", "--k", "3", "--palette", "4"
    )
    assert code == EXIT_OK and "swap: pass" in out
    code, out, _ = run(capsys, "verify", "--map", "phi", "--graph", '{"n": 3, "edges": [[1, 3], [2, 3]]}', "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["injective"] and not data["surjective"]


def test_classify_cli(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "--max-n", "4", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK and "computed 30" in out
    code, out, _ = run(capsys, "classify", "--max-n", "4", "--cache-dir", str(tmp_path), "--json", "--recheck", "3")
    lines = out.splitlines()
    assert json.loads(lines[-1])["cached"] == 30
    assert len(lines) == 31


@pytest.mark.parametrize(
    "argv,code",
    [
        (["verify", "thm-nope"], EXIT_USAGE),
        (["compute"], EXIT_USAGE),
        (["compute", "--graph", "{bad"], EXIT_USAGE),
        (["compute", "--graph", '{"n": 2, "edges": [[1, 2], [2, 1]]}'], EXIT_USAGE),
        (["compute", "--family", "mountain", "--p", "1", "--k", "3"], EXIT_USAGE),
        (["compute", "--family", "nui", "--h", "3,1,3"], EXIT_USAGE),
        (["family", "--catalog", "dags", "--n", "8"], EXIT_GUARD),
        (["verify", "--map", "psi", "--family", "mountain", "--p", "2", "--k", "3", "--max-colorings", "5"], EXIT_GUARD),
        (["verify", "--map", "psi", "--graph", '{"n": 2, "edges": [[1, 2]]}'], EXIT_USAGE),
        (["bogus"], EXIT_USAGE),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_unknown_theorem_message(capsys):
    _, _, err = run(capsys, "verify", "thm-nope")
    assert err.startswith("cqf: unknown theorem id 'thm-nope'")


def test_failure_exit_code(capsys, monkeypatch):
    from cqfsym import theorems

    rep = theorems.TheoremReport("cor-cycle", {})
    rep.fail(graph=None)
    monkeypatch.setitem(theorems.THEOREMS, "cor-cycle", lambda **kw: rep)
    assert run(capsys, "verify", "cor-cycle")[0] == EXIT_FAIL
