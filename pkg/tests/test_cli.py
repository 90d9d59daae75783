import io
import shutil
import subprocess

import pytest

from nilsemi.canon import canonical_key
from nilsemi.cli import main
from nilsemi.families import cc1_X, coclass1_list
from nilsemi.presentations import realize
from nilsemi.tables import format_table, parse_table


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_list_counts():
    code, text = run("list", "--order", "8", "--coclass", "1")
    assert code == 0 and len(text.splitlines()) == 12
    code, text = run("list", "--order", "7", "--coclass", "2", "--gen-size", "2")
    assert code == 0 and len(text.splitlines()) == 34
    code, text = run("list", "--order", "6", "--coclass", "2", "--gen-size", "3")
    assert code == 0 and len(text.splitlines()) == 99


def test_list_out_of_range(capsys):
    code, text = run("list", "--order", "3", "--coclass", "2")
    assert code == 2 and text == ""
    assert "outside the classified range" in capsys.readouterr().err


def test_list_realize_round_trip():
    code, text = run("list", "--order", "9", "--coclass", "1")
    keys = []
    for line in text.splitlines():
        code, table = run("realize", *line.split("\t")[1].split())
        assert code == 0
        keys.append(canonical_key(parse_table(table)))
    assert keys == [canonical_key(realize(p)) for p in coclass1_list(9)]


def test_deterministic_output():
    assert run("list", "--order", "7", "--coclass", "2") == run("list", "--order", "7", "--coclass", "2")


def test_inspect(tmp_path):
    path = tmp_path / "x8.txt"
    path.write_text(format_table(realize(cc1_X(8))))
    code, text = run("inspect", str(path))
    assert code == 0
    assert "self-dual: true" in text and "commutative: true" in text
    assert "class: 6" in text and "coclass: 1" in text

    path.write_text("4\n" + "3 3 3 3\n" * 4)
    code, text = run("inspect", str(path))
    assert "class: 1" in text and "coclass: 2" in text and "generators: 3" in text
    key_line = [l for l in text.splitlines() if l.startswith("key iso:")][0]
    assert key_line.split(": ")[1] == canonical_key(parse_table(path.read_text())).hex()

    path.write_text("2\n0 0\n1 1\n")
    code, text = run("inspect", str(path))
    assert code == 0 and "nilpotent: no" in text


def test_inspect_errors(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2\n1 0\n0 0\n")
    code, _ = run("inspect", str(path))
    assert code == 2
    assert "not associative at (0,0,1)" in capsys.readouterr().err
    path.write_text("3\n0 0\n")
    assert run("inspect", str(path))[0] == 2
    assert run("inspect", str(tmp_path / "missing.txt"))[0] == 2


def test_count_csv():
    code, text = run("count", "--coclass", "2", "--gen-size", "3", "--order", "6-7",
                     "--mode", "iso")
    lines = text.splitlines()
    assert lines[0] == "type,mode,order,count,source"
    assert "coclass2-gen3,iso,6,157,families" in lines
    assert "coclass2-gen3,iso,7,233,formula" in lines
    assert "coclass2-gen3,iso,7,233,table1" in lines


def test_count_bruteforce_source():
    code, text = run("count", "--coclass", "1", "--order", "5", "--source", "bruteforce")
    assert text.splitlines()[1] == "coclass1,anti-iso,5,7,bruteforce"


def test_bruteforce_command():
    assert run("bruteforce", "--order", "5", "--coclass", "2", "--mode", "iso") == (0, "118\n")
    code, text = run("bruteforce", "--order", "4", "--coclass", "2", "--gen-size", "3", "--tables")
    assert parse_table(text).n == 4
    assert run("bruteforce", "--order", "8")[0] == 2


def test_usage_errors():
    assert run("verify", "--max-order", "4")[0] == 2
    assert run("verify", "--max-order", "14")[0] == 2
    assert run("count", "--coclass", "1", "--order", "x")[0] == 2
    assert run("frobnicate")[0] == 2


def test_verify_small():
    code, text = run("verify", "--max-order", "5")
    assert code == 0
    assert text.splitlines()[-1].startswith("OK")
    assert all(l.startswith("PASS") for l in text.splitlines()[:-1])


@pytest.mark.skipif(shutil.which("nilsemi") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["nilsemi", "list", "--order", "5", "--coclass", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and len(res.stdout.splitlines()) == 7
