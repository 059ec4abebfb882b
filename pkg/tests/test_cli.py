import json

import pytest

from weakcore.cli import main, parse_matrix_text, InputError
from weakcore.matrix import Matrix


def write(tmp_path, rows, name="m.json"):
    p = tmp_path / name
    p.write_text(json.dumps({"matrix": [[str(x) for x in r] for r in rows]}))
    return str(p)


@pytest.fixture
def first_example(tmp_path):
    return write(tmp_path, [[0, 8, -8], [8, -5, 8], [8, -5, 8]])


def test_compute_weak_core(first_example, capsys):
    assert main(["compute", first_example, "--kind", "weak-core"]) == 0
    assert capsys.readouterr().out.strip() == "weak-core (index 2): [[0,0,0],[0,1/6,1/6],[0,1/6,1/6]]"


def test_group_of_nilpotent_is_absent(tmp_path, capsys):
    path = write(tmp_path, [[0, 1], [0, 0]])
    assert main(["compute", path, "--kind", "group"]) == 2
    assert "no group inverse (index 2)" in capsys.readouterr().out


def test_all_on_identity(tmp_path, capsys):
    path = write(tmp_path, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert main(["compute", path, "--kind", "all", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload) == 9
    ident = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert all(e["inverse"] == ident for e in payload)


def test_json_schema_with_verify(first_example, capsys):
    assert main(["compute", first_example, "--verify", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"kind", "inverse", "index", "axioms", "identities"}
    assert doc["index"] == 2
    assert [a["name"] for a in doc["axioms"]] == ["6k", "7", "6*"]
    assert all(a["holds"] for a in doc["axioms"] + doc["identities"])
    assert doc["identities"]


def test_emitted_matrix_round_trips(first_example, capsys, tmp_path):
    main(["compute", first_example, "--json"])
    inv = json.loads(capsys.readouterr().out)["inverse"]
    back = parse_matrix_text(json.dumps({"matrix": inv}))
    assert back == Matrix([[0, 0, 0], [0, "1/6", "1/6"], [0, "1/6", "1/6"]])
    # and the weak core of the weak core, fed back through the CLI
    path = write(tmp_path, inv, "wc.json")
    main(["compute", path, "--json"])
    assert json.loads(capsys.readouterr().out)["inverse"][1] == ["0", "3/2", "3/2"]


def test_bad_rational_reports_line_and_column(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"matrix": [["1", "2"],\n ["3", "4/x"]]}')
    assert main(["compute", str(p)]) == 1
    err = capsys.readouterr().err
    # line 2 is ' ["3", "4/x"]]}': the offending x sits in column 11
    assert f"{p}:2:11:" in err


def test_bad_json_reports_position(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"matrix": [["1", "2"]\n ["3", "4"]]}')
    assert main(["compute", str(p)]) == 1
    assert f"{p}:2:2:" in capsys.readouterr().err


@pytest.mark.parametrize("text", [
    '{"matrix": [[1, 2]]}',
    '{"matrix": [["1"], ["1", "2"]]}',
    '{"rows": []}',
    '{"matrix": [["0.5"]]}',
])
def test_malformed_inputs(text):
    with pytest.raises(InputError):
        parse_matrix_text(text)


def test_missing_file_and_bad_usage(tmp_path, capsys):
    assert main(["compute", str(tmp_path / "nope.json")]) == 1
    assert main(["compute"]) == 1
    assert main(["--help"]) == 0


def test_non_square_needs_mp(tmp_path, capsys):
    path = write(tmp_path, [[1, 2, 3]])
    assert main(["compute", path, "--kind", "mp"]) == 0
    assert capsys.readouterr().out.strip() == "mp (index 0): [[1/14],[1/7],[3/14]]"
    assert main(["compute", path, "--kind", "drazin"]) == 1


def test_published_examples_deterministic(capsys):
    assert main(["paper-examples"]) == 0
    first = capsys.readouterr().out
    assert main(["paper-examples"]) == 0
    assert capsys.readouterr().out == first
    assert first.rstrip().endswith("13/13 checks pass")


def test_published_examples_json(capsys):
    assert main(["paper-examples", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_ok"] and len(doc["checks"]) == 13


def test_oracle_z6(capsys):
    assert main(["oracle", "--modulus", "6", "--kind", "weak-core"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "element,kind,inverse,k,unique"
    assert "2,weak-core,2,1,true" in lines


def test_oracle_non_proper_banner(capsys):
    assert main(["oracle", "--modulus", "4"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# Z_4 is not proper: uniqueness not asserted")


def test_oracle_z30_all(capsys):
    assert main(["oracle", "--modulus", "30", "--kind", "all", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["proper"] and doc["uniqueness_violations"] == 0
    assert len(doc["rows"]) == 30 * 11


def test_oracle_rejects_bad_modulus(capsys):
    assert main(["oracle", "--modulus", "1"]) == 1
    assert main(["oracle", "--modulus", "6", "--kmax", "0"]) == 1
