import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from rootcurves.cli import (
    decode_curve,
    decode_root,
    decode_word,
    encode_curve,
    encode_root,
    encode_word,
    main,
    run_verify,
    spline_path,
)
from rootcurves.root_system import enumerate_positive_real
from rootcurves.word_builder import S, build_F


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "--n", "3", "--max-m", "0")
    assert code == 0
    assert len(json.loads(out)) == 6


def test_roots_schur_filter(capsys):
    _, out, _ = run(capsys, "roots", "--n", "3", "--max-m", "0", "--class", "schur")
    got = {tuple(r["root"]) for r in json.loads(out)}
    assert got == {(1, 0, 0), (1, 1, 0), (0, 0, 1), (0, 1, 1)}


def test_roots_bad_n(capsys):
    code, _, err = run(capsys, "roots", "--n", "2")
    assert code == 2 and "n must be" in err


def test_bad_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["roots", "--bogus"])
    assert exc.value.code == 2


def test_curve_2211(capsys):
    code, out, _ = run(capsys, "curve", "--root", "2,2,1,1")
    rec = json.loads(out)
    assert code == 0
    assert list(rec) == ["root", "class", "word", "crossings", "decomposition", "annulus", "string"]
    assert rec["word"] == {"base": 1, "letters": [1, 2, 3, 4]}
    assert list(rec["class"]) == ["tag", "m", "a", "b"]


def test_curve_simple(capsys):
    _, out, _ = run(capsys, "curve", "--root", "0,1,0")
    assert json.loads(out)["word"] == {"base": 2, "letters": []}


def test_curve_imaginary(capsys):
    code, _, err = run(capsys, "curve", "--root", "1,1,1")
    assert code == 2 and "imaginary" in err


def test_curve_garbage(capsys):
    code, _, _ = run(capsys, "curve", "--root", "1,x,1")
    assert code == 2


def test_intersect_all(capsys):
    _, out, _ = run(capsys, "intersect", "--a", "1,2,1", "--b", "3,4,3", "--model", "all")
    rec = json.loads(out)
    assert (rec["formula"], rec["plane"], rec["annulus"]) == (2, 2, 2)


def test_intersect_self_pair(capsys):
    _, out, _ = run(capsys, "intersect", "--a", "1,2,1", "--b", "1,2,1")
    rec = json.loads(out)
    assert rec["formula"] == 2 and rec["self"]["a"] == 1


def test_intersect_uncovered(capsys):
    _, out, _ = run(capsys, "intersect", "--a", "0,1,1,0", "--b", "1,1,2,1")
    rec = json.loads(out)
    assert rec["formula"] == "unsupported"
    assert isinstance(rec["plane"], int) and isinstance(rec["annulus"], int)
    assert rec["plane_method"] == "search"


def test_intersect_single_model(capsys):
    _, out, _ = run(capsys, "intersect", "--a", "1,2,1", "--b", "3,4,3", "--model", "annulus")
    rec = json.loads(out)
    assert "plane" not in rec and rec["annulus"] == 2


@pytest.mark.parametrize(
    "a, b, category, dim",
    [
        ("1,0,0", "1,0,0", "module", 0),
        ("2,2,1", "2,2,1", "module", 0),
        ("1,2,1", "3,4,3", "cluster", 2),
    ],
)
def test_ext(capsys, a, b, category, dim):
    _, out, _ = run(capsys, "ext", "--a", a, "--b", b, "--category", category)
    assert json.loads(out)["dim"] == dim


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3..4", "--max-m", "2", "--max-lambda", "2", "--controls", "3")
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["failed"] == 0
    assert rep["summary"]["unsupported"] == 6
    keys = [(r["n"], r["a"], r["b"]) for r in rep["rows"]]
    assert keys == sorted(keys)


def test_verify_empty_range(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5..3")
    assert code == 0 and json.loads(out)["rows"] == []


def test_verify_fault_injection(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--max-m", "1", "--inject-fault")
    assert code == 1 and json.loads(out)["summary"]["failed"] == 1


def test_verify_is_deterministic():
    a = run_verify(range(3, 5), 1, 1, controls=2).as_dict()
    b = run_verify(range(3, 5), 1, 1, controls=2).as_dict()
    assert a == b


def test_render_plane(tmp_path, capsys):
    out = tmp_path / "f.svg"
    code, _, _ = run(capsys, "render", "--root", "1,2,2,1", "--out", str(out))
    text = out.read_text()
    assert code == 0
    assert text.count('class="ray"') == 4
    assert text.count('class="curve"') == 1
    assert text.count('class="mark"') == 5
    assert text.count('class="crossing"') == 1


def test_render_annulus_pair(tmp_path, capsys):
    out = tmp_path / "g.svg"
    run(capsys, "render", "--root", "1,2,1", "--b", "3,4,3", "--surface", "annulus", "--out", str(out))
    text = out.read_text()
    assert text.count('class="curve"') == 2
    assert text.count('class="crossing"') == 2


def test_render_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run(capsys, "render", "--root", "2,1,1,2", "--surface", "annulus", "--out", str(a))
    run(capsys, "render", "--root", "2,1,1,2", "--surface", "annulus", "--out", str(b))
    assert a.read_text() == b.read_text()


def test_render_bad_path(tmp_path, capsys):
    code, _, err = run(capsys, "render", "--root", "1,2,1", "--out", str(tmp_path / "missing" / "x.svg"))
    assert code != 0 and "cannot write" in err


def test_spline_passes_through_points():
    d = spline_path([(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)])
    assert d.startswith("M 0 0") and d.endswith("2 0")


roots = st.integers(3, 6).flatmap(lambda n: st.sampled_from(enumerate_positive_real(n, 3)))


@given(roots)
def test_json_round_trip(item):
    v, _ = item
    c = build_F(v)
    assert decode_root(json.loads(json.dumps(encode_root(v)))) == v
    assert decode_word(json.loads(json.dumps(encode_word(S(c)))), c.n) == S(c)
    assert decode_curve(json.loads(json.dumps(encode_curve(c)))) == c


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "rootcurves", "roots", "--n", "4"],
                         capture_output=True, text=True, check=True)
    assert len(json.loads(out.stdout)) == 12
