"""명령줄 인터페이스: 종료 코드와 --json 출력"""

import json

import pytest

from config import Config
from main import EXIT_ERROR, EXIT_OK, EXIT_WITNESS, main

pytestmark = pytest.mark.usefixtures("restore_config")


def _json(capsys) -> dict:
    out = capsys.readouterr().out
    report, _ = json.JSONDecoder().raw_decode(out[out.index("{"):])
    return report


@pytest.fixture
def files(tmp_path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def test_normalize_converges(files, capsys):
    path = files("cut.lud", "[a(y).(y|b<>)]|a<b().#>\n")
    assert main(["normalize", path, "--json"]) == EXIT_OK
    report = _json(capsys)
    assert report["status"] == "Converged"
    assert report["result"] == "#"
    assert report["steps"] == 2


def test_normalize_out_of_fuel(files, capsys):
    path = files("cut.lud", "[a(y).(y|b<>)]|a<b().#>\n")
    assert main(["normalize", path, "--fuel", "1", "--json"]) == EXIT_WITNESS
    assert _json(capsys)["status"] == "FuelExhausted"


def test_missing_file(capsys):
    assert main(["normalize", "no-such-file.lud"]) == EXIT_ERROR


def test_syntax_error(files):
    assert main(["normalize", files("bad.lud", "x0|a<")]) == EXIT_ERROR


def test_ortho(files, capsys):
    p, n = files("p.lud", "x0|b<a().#>"), files("n.lud", "b(y).(y|a<>)")
    assert main(["ortho", p, n, "--json"]) == EXIT_OK
    assert _json(capsys)["path"] == "x0|b<y1> a_y1() #"
    other = files("m.lud", "c().#")
    assert main(["ortho", p, other]) == EXIT_WITNESS


def test_interact_writes_dot(files, tmp_path, capsys):
    p, n = files("p.lud", "x0|b<a().#>"), files("n.lud", "b(y).(y|a<>)")
    dot = tmp_path / "path.dot"
    assert main(["interact", p, n, "--dot", str(dot), "--json"]) == EXIT_OK
    assert _json(capsys)["orthogonal"] is True
    assert dot.read_text(encoding="utf-8").startswith("digraph")


def test_minteract(files, capsys):
    D = files("d.mlud", "pos := x|a<c().#>\n")
    E = files("e.mlud", "x := a(y).(y|c<>)\n")
    assert main(["minteract", D, E, "--json"]) == EXIT_OK
    assert _json(capsys)["sequence"] == "x|a<y1> c_y1() #"


def test_paths(files, capsys):
    assert main(["paths", files("p.lud", "x0|b<a().#>"), "--json"]) == EXIT_OK
    report = _json(capsys)
    assert report["count"] == 2
    assert report["paths"] == ["x0|b<y1>", "x0|b<y1> a_y1() #"]


def test_behaviour_incarnation(capsys):
    assert main(["behaviour", "Bool", "incarnation", "--json"]) == EXIT_OK
    assert _json(capsys)["size"] == 5


def test_behaviour_polarity_error():
    assert main(["behaviour", "up(C_b)", "incarnation"]) == EXIT_ERROR


def test_behaviour_member(files, capsys):
    good = files("t.lud", "x0|p1<val(x).(x|b<>)>")
    assert main(["behaviour", "Bool", "member", "--design", good, "--json"]) == EXIT_OK
    assert _json(capsys)["member"] is True
    bad = files("c.lud", "x0|c<>")
    assert main(["behaviour", "Bool", "member", "--design", bad]) == EXIT_WITNESS
    assert main(["behaviour", "Bool", "member"]) == EXIT_ERROR


def test_data_level_flag(capsys):
    assert main(["data", "Nat", "incarnation", "--level", "2", "--json"]) == EXIT_OK
    report = _json(capsys)
    assert report["size"] == 7
    assert report["level"] == 2
    assert Config.LEVEL == 2


def test_data_steadiness(capsys):
    assert main(["data", "mu X. (b (*) X)", "steady", "--level", "2", "--json"]) == EXIT_OK
    assert _json(capsys)["steadiness"] == "not-steady"


def test_bad_level():
    assert main(["data", "Nat", "incarnation", "--level", "-1"]) == EXIT_ERROR


def test_encode(capsys):
    assert main(["encode", "nat", "1", "--json"]) == EXIT_OK
    assert _json(capsys)["kind"] == "nat"
    assert main(["encode", "bool", "maybe"]) == EXIT_ERROR
    assert main(["encode", "nat", "-2"]) == EXIT_ERROR


def test_func_pure(capsys):
    assert main(["func", "Bool -o Bool", "--json"]) == EXIT_OK
    assert _json(capsys)["criterion"] == "Pure"


def test_func_witness(capsys):
    assert main(["func", "(Bool -o Bool) -o Bool", "--witness", "--json"]) == EXIT_WITNESS
    report = _json(capsys)
    assert report["length"] == 13
    assert report["validated"] is True


def test_unknown_command():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_minteract_restrict(files, capsys):
    E = files("e.mlud", "x := a(y).(y|c<>)\n")
    D = files("d.mlud", "pos := x|a<c().#>\n")
    assert main(["minteract", E, D, "--restrict", "x", "--json"]) == EXIT_OK
    report = _json(capsys)
    assert report["sequence"] == "a_x(y1) y1|c<>"
    assert report["restricted"] == report["sequence"]
    assert main(["minteract", E, D, "--restrict", "z"]) == EXIT_ERROR


def test_data_basis(capsys):
    assert main(["data", "Nat", "basis", "--json"]) == EXIT_OK
    assert _json(capsys)["basis"]
    assert main(["data", "mu X. (b (*) X)", "basis"]) == EXIT_ERROR


def test_config_reload_reads_environment(monkeypatch):
    monkeypatch.setenv("LUDICS_LEVEL", "5")
    monkeypatch.setenv("LUDICS_LOG_LEVEL", "verbose")
    Config.reload()
    assert Config.LEVEL == 5
    assert Config.validate() == ["LUDICS_LOG_LEVEL 값이 올바르지 않습니다: VERBOSE"]
    monkeypatch.delenv("LUDICS_LOG_LEVEL")
    Config.reload()
    assert Config.validate() == []
