import subprocess
import sys

import pytest

from conftest import DATA
from lrc.cli import main, parse_spec_text
from lrc.codec import format_word, parse_word
from lrc.linalg import parse_exponent_grid


def write_spec(tmp_path, name, **kv):
    path = tmp_path / name
    path.write_text("".join(f"{k} = {v}\n" for k, v in kv.items()))
    return str(path)


@pytest.fixture
def gc_spec(tmp_path):
    return write_spec(tmp_path, "gc.spec", m=3, n=6, ell=2, g=3, field="gf2^3", variant="gc")


def test_bound_figure_one(capsys):
    assert main(["bound", "--m", "6", "--n", "5", "--ell", "2", "--g", "8"]) == 0
    out = capsys.readouterr().out
    assert "d <= 15" in out
    assert "[30, 10]" in out
    assert "ell + g < n: no" in out


def test_bound_two_globals(capsys):
    main(["bound", "--m", "6", "--n", "5", "--ell", "2", "--g", "2"])
    out = capsys.readouterr().out
    assert "d <= 5" in out and "ell + g < n: yes" in out


def test_bound_no_globals(capsys):
    main(["bound", "--m", "2", "--n", "5", "--ell", "3", "--g", "0"])
    assert "d <= 4" in capsys.readouterr().out


def test_bound_invalid(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bound", "--m", "2", "--n", "5", "--ell", "5", "--g", "0"])
    assert info.value.code == 2


def test_spec_parsing():
    spec = parse_spec_text("# code\nm = 3\nn: 6\nell 2\ng=3\nfield = gf2^3\nvariant = gc\n")
    assert spec == {"m": "3", "n": "6", "ell": "2", "g": "3", "field": "gf2^3", "variant": "gc"}


def test_build_gc_matches_printed(gc_spec, tmp_path, capsys):
    out = tmp_path / "h.txt"
    assert main(["build", "--spec", gc_spec, "--out", str(out)]) == 0
    info = capsys.readouterr().out
    assert "shape: 9x18" in info
    assert "poly=0xb" in info
    assert out.read_text() == (DATA / "gc_3_6_2_3_gf8.txt").read_text()


def test_build_diag_ext_from_flags(tmp_path, capsys):
    out = tmp_path / "h.txt"
    args = ["build", "--m", "2", "--n", "8", "--ell", "1", "--g", "4", "--field", "gf2^4",
            "--variant", "diag-ext", "--out", str(out)]
    assert main(args) == 0
    built = parse_exponent_grid(out.read_text())
    printed = parse_exponent_grid((DATA / "diagext_2_8_1_4_gf16.txt").read_text())
    diffs = [(i, j) for i in range(6) for j in range(16) if built[i][j] != printed[i][j]]
    assert diffs == [(5, 11)]
    assert built[5][11] == 14


def test_build_rejects_small_field(tmp_path, capsys):
    spec = write_spec(tmp_path, "bad.spec", m=2, n=8, ell=2, g=2, field="gf2^3", variant="gc")
    with pytest.raises(SystemExit) as info:
        main(["build", "--spec", spec])
    assert info.value.code == 2
    assert "requires q > n" in capsys.readouterr().err


def test_build_force(tmp_path, capsys):
    spec = write_spec(tmp_path, "bad.spec", m=2, n=8, ell=2, g=2, field="gf2^3", variant="gc")
    assert main(["build", "--spec", spec, "--force"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("6 16 8\n")
    assert "optimality claim: none" in captured.err


def _encode(spec, tmp_path, data):
    data_file = tmp_path / "data.txt"
    data_file.write_text(format_word(data))
    word_file = tmp_path / "word.txt"
    assert main(["encode", "--spec", spec, "--data", str(data_file), "--out", str(word_file)]) == 0
    return word_file


def test_encode_decode_round_trip(gc_spec, tmp_path):
    data = [1, 2, 3, 4, 5, 6, 7, 0, 1]
    word_file = _encode(gc_spec, tmp_path, data)
    word = parse_word(word_file.read_text())
    assert len(word) == 18
    damaged = list(word)
    for c in (0, 5, 7, 12, 17):
        damaged[c] = 0
    recv = tmp_path / "recv.txt"
    recv.write_text(format_word(damaged))
    out = tmp_path / "fixed.txt"
    assert main(["decode", "--spec", gc_spec, "--received", str(recv),
                 "--erasures", "0,5,7,12,17", "--out", str(out)]) == 0
    assert parse_word(out.read_text()) == word
    out2 = tmp_path / "fixed2.txt"
    assert main(["decode", "--spec", gc_spec, "--received", str(recv),
                 "--erasures-rc", "0:0,0:5,1:1,2:0,2:5", "--out", str(out2)]) == 0
    assert out2.read_text() == out.read_text()


def test_decode_without_erasures_is_identity(gc_spec, tmp_path, capsys):
    word_file = _encode(gc_spec, tmp_path, [3] * 9)
    assert main(["decode", "--spec", gc_spec, "--received", str(word_file)]) == 0
    assert capsys.readouterr().out == word_file.read_text()


def test_decode_unrecoverable(gc_spec, tmp_path, capsys):
    from lrc.verify import min_distance_witness
    from conftest import golden_code

    _, support = min_distance_witness(golden_code("gc_3_6_2_3").H)
    word_file = _encode(gc_spec, tmp_path, [0] * 9)
    code = main(["decode", "--spec", gc_spec, "--received", str(word_file),
                 "--erasures", ",".join(map(str, support))])
    assert code == 1
    err = capsys.readouterr().err
    assert "unrecoverable" in err
    assert "dependent columns:" in err


def test_encode_bad_length(gc_spec, tmp_path, capsys):
    bad = tmp_path / "d.txt"
    bad.write_text("1 2 3")
    assert main(["encode", "--spec", gc_spec, "--data", str(bad)]) == 2


@pytest.mark.parametrize("kv,expected", [
    (dict(m=3, n=5, ell=2, g=2, field="gf2^4", variant="diag"), 5),
    (dict(m=2, n=8, ell=2, g=2, field="gf2^3", variant="gc-ext"), 5),
    (dict(m=2, n=8, ell=1, g=4, field="gf2^4", variant="diag-ext"), 6),
])
def test_verify_examples(tmp_path, capsys, kv, expected):
    spec = write_spec(tmp_path, "c.spec", **kv)
    assert main(["verify", "--spec", spec]) == 0
    out = capsys.readouterr().out
    assert f"distance: {expected}" in out
    assert "optimal: yes" in out


def test_verify_distance_flag(tmp_path, capsys):
    spec = write_spec(tmp_path, "c.spec", m=3, n=5, ell=2, g=2, field="gf2^4", variant="diag")
    assert main(["verify", "--spec", spec, "--distance", "5"]) == 0
    assert main(["verify", "--spec", spec, "--distance", "6"]) == 1
    out = capsys.readouterr().out
    assert "distance >= 6: no" in out


def test_verify_pmds_sd(tmp_path, capsys):
    spec = write_spec(tmp_path, "c.spec", m=2, n=4, ell=1, g=1, field="gf2^4", variant="diag")
    assert main(["verify", "--spec", spec, "--pmds", "--sd", "--jobs", "2"]) == 0
    out = capsys.readouterr().out
    assert "PMDS:" in out and "SD:" in out


def test_verify_budget_env(tmp_path, capsys, monkeypatch):
    spec = write_spec(tmp_path, "c.spec", m=3, n=5, ell=2, g=2, field="gf2^4", variant="diag")
    monkeypatch.setenv("LRC_WORK_BUDGET", "10")
    assert main(["verify", "--spec", spec]) == 2
    assert "work budget" in capsys.readouterr().err


def test_output_is_reproducible(gc_spec, capsys):
    main(["verify", "--spec", gc_spec])
    first = capsys.readouterr().out
    main(["verify", "--spec", gc_spec])
    assert capsys.readouterr().out == first


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "lrc", "bound", "--m", "6", "--n", "5",
                          "--ell", "2", "--g", "8"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "d <= 15" in res.stdout
