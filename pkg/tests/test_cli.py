import os
import subprocess
import sys
from pathlib import Path

import pytest

from dihedral_bredon.cli import main, parse_q

GOLDEN = Path(__file__).parent / "golden"
CASES = [("Z", 3, "0..2"), ("Z", 4, "0..2"), ("F2", 3, "0..3"), ("F2", 4, "0..3")] + \
        [(r, n, "0..1") for r in ("Z[C2]", "Z[C2xC2]", "Z[C4]") for n in (3, 4)]


def golden_name(ring, n):
    return ring.replace("[", "_").replace("]", "").lower() + f"_n{n}"


def run(*args, hashseed="0"):
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    return subprocess.run([sys.executable, "-m", "dihedral_bredon", *args],
                          capture_output=True, env=env, check=False)


@pytest.mark.parametrize("ring, n, q", CASES)
@pytest.mark.parametrize("fmt, ext", [("text", "txt"), ("records", "tsv")])
def test_golden_output(ring, n, q, fmt, ext):
    expected = (GOLDEN / f"{golden_name(ring, n)}.{ext}").read_bytes()
    for seed in ("0", "1234"):
        proc = run("e2page", "--ring", ring, "--n", str(n), "--q", q, "--format", fmt, hashseed=seed)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout == expected


def test_parse_q():
    assert parse_q("3") == (3, 3)
    assert parse_q("-2..1") == (-2, 1)
    with pytest.raises(Exception):
        parse_q("3..1")


def test_compute_single_q(capsys):
    assert main(["compute", "--ring", "Z[C2]", "--n", "5", "--q", "1"]) == 0
    out = capsys.readouterr().out
    assert "(+)_{w} Z (+) (Z/2)^2" in out


def test_negative_q_range(capsys):
    assert main(["compute", "--ring", "Z", "--n", "3", "--q", "-2..-1", "--format", "records"]) == 0
    cells = [line.split("\t") for line in capsys.readouterr().out.splitlines() if not line.startswith("#")]
    assert len(cells) == 8 and all(c[2] == "0" for c in cells)


@pytest.mark.parametrize("argv, code", [
    (["compute", "--ring", "Q", "--n", "3", "--q", "0"], 3),
    (["compute", "--ring", "Z", "--n", "1", "--q", "0"], 3),
    (["compute", "--ring", "Z", "--n", "3"], 3),
    (["compute", "--ring", "Z", "--n", "3", "--q", "x"], 3),
    (["compute", "--ring", "Z[C2]", "--n", "3", "--q", "3"], 4),
    (["compute", "--ring", "Z[C2]", "--n", "3", "--q", "-1..0"], 4),
    (["oracle", "--ring", "Z", "--n", "3", "--q", "0..1", "--k", "4"], 0),
    (["oracle", "--ring", "F2", "--n", "3", "--q", "4", "--k", "3"], 1),
    (["profiles", "show"], 3),
    (["bogus"], 3),
])
def test_exit_codes(argv, code, capsys):
    try:
        assert main(argv) == code
    except SystemExit as exc:
        assert exc.code == code


def test_bounded_exit_code(tmp_path, capsys):
    profile = tmp_path / "quad.profile"
    profile.write_text("[meta]\nname = quad\nregular = true\nq_range = 0..0\n[K]\n0 = Z/4\n")
    catalog = tmp_path / "cat.txt"
    catalog.write_text("[classes]\nab = (2,2), mult = 1, label = Z, kind = center\n"
                       "ab = (2,0), mult = 1, label = x\n"
                       "ab = (0,0), mult = w, label = zero\n")
    assert main(["compute", "--ring", str(profile), "--n", "4", "--q", "0", "--catalog", str(catalog)]) == 2
    assert "between(" in capsys.readouterr().out


def test_oracle_output(capsys):
    assert main(["oracle", "--ring", "Z[C2]", "--n", "4", "--q", "1", "--k", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("oracle: Z[C2], n = 4, q = 1, k = 1..3\n")
    assert out.count("stable pattern matches closed form") == 4
    assert "g2^0 monomorphism on every truncation: yes" in out


def test_oracle_records(capsys):
    assert main(["oracle", "--ring", "Z", "--n", "3", "--q", "0", "--k", "2", "--format", "records"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "3\t0\t1\t0\t0\tmatch"
    assert lines[-1] == "g20\t0\t2\tmono=yes"


def test_profiles_list_and_show(capsys, tmp_path, monkeypatch):
    assert main(["profiles", "list"]) == 0
    names = capsys.readouterr().out.split()
    assert {"Z", "F2", "Z[C4]"} <= set(names)
    assert main(["profiles", "show", "Z[C2]"]) == 0
    table = capsys.readouterr().out
    assert table.startswith("Z[C2]  (regular: no, q = -1..1)") and "?" in table
    assert main(["profiles", "show", "Z", "--document"]) == 0
    doc = capsys.readouterr().out
    (tmp_path / "myz.profile").write_text(doc)
    monkeypatch.setenv("DIHEDRAL_BREDON_PROFILE_PATH", str(tmp_path))
    assert main(["profiles", "list"]) == 0
    assert "myz.profile" in capsys.readouterr().out
    assert main(["compute", "--ring", "myz", "--n", "3", "--q", "0"]) == 0


def test_profiles_validate(tmp_path, capsys):
    good = tmp_path / "good.profile"
    good.write_text("[meta]\nname = g\nregular = true\nq_range = 0..1\n[K]\n0 = Z\n1 = Z/2\n")
    assert main(["profiles", "validate", str(good)]) == 0
    assert capsys.readouterr().out == "ok: g (q = 0..1)\n"
    bad = tmp_path / "bad.profile"
    bad.write_text("[meta]\nname = g\nregular = true\nq_range = 0..1\n[K]\n0 = Z/1\n")
    assert main(["profiles", "validate", str(bad)]) == 3
    assert "line 6" in capsys.readouterr().err
