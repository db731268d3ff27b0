import io

import pytest

from loopforge.cli import run
from loopforge.fileio import (
    ParseError,
    emit_loop,
    emit_pair,
    emit_schreier_data,
    parse_loop,
    parse_pair,
    parse_schreier_data,
)
from loopforge import DataPair
from loopforge.core import LoopTable


def test_loop_round_trip(loop5):
    text = emit_loop(loop5)
    assert parse_loop(text).table == loop5.table
    assert emit_loop(parse_loop(text)) == text


def test_loop_parse_ignores_comments(z4):
    text = "# cyclic of order four\n" + emit_loop(z4)
    assert parse_loop(text).table == z4.table


def test_loop_parse_errors():
    with pytest.raises(ParseError):
        parse_loop("2\n0 1\n")
    with pytest.raises(ParseError):
        parse_loop("2\n0 1\n1 x\n")


def test_data_round_trip(data_s3f):
    text = emit_schreier_data(data_s3f)
    back = parse_schreier_data(text)
    assert back.K.table == data_s3f.K.table
    assert back.G.table == data_s3f.G.table
    assert back.theta == data_s3f.theta
    assert back.f == data_s3f.f
    assert emit_schreier_data(back) == text


def test_pair_round_trip(z2):
    pair = DataPair(z2, (0, 1), (0, 2))
    text = emit_pair(pair)
    assert parse_pair(text, z2) == pair


# ---------------------------------------------------------------------------
# CLI

def _cli(tmp_path, *argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def z4_file(tmp_path, z4):
    p = tmp_path / "z4.loop"
    p.write_text(emit_loop(z4))
    return str(p)


@pytest.fixture
def loop5_file(tmp_path, loop5):
    p = tmp_path / "l5.loop"
    p.write_text(emit_loop(loop5))
    return str(p)


def test_cli_validate(tmp_path, z4_file):
    code, text = _cli(tmp_path, "validate", z4_file)
    assert code == 0
    assert text == "valid loop, order 4, associative\n"


def test_cli_validate_bad_file(tmp_path):
    bad = tmp_path / "bad.loop"
    bad.write_text("2\n0 1\n1 1\n")
    code, _ = _cli(tmp_path, "validate", str(bad))
    assert code == 1


def test_cli_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2


def test_cli_props(tmp_path, loop5_file):
    code, text = _cli(tmp_path, "props", loop5_file)
    assert code == 0
    assert "associative: no" in text


def test_cli_nuclei(tmp_path, loop5_file):
    code, text = _cli(tmp_path, "nuclei", loop5_file)
    assert code == 0
    assert "full nucleus: 0\n" in text


def test_cli_normal(tmp_path, z4_file):
    code, text = _cli(tmp_path, "normal", z4_file, "--subgroup", "0,2")
    assert code == 0
    assert "normal: yes" in text
    assert "factor loop order: 2" in text


def test_cli_decompose_z4(tmp_path, z4_file):
    code, text = _cli(tmp_path, "decompose", z4_file,
                      "--subgroup", "0,2", "--transversal", "0,1")
    assert code == 0
    assert "f:" in text
    # the factor row for (a, a) holds local index 1, i.e. element 2
    lines = text.splitlines()
    f_at = lines.index("f:")
    assert lines[f_at + 1] == "0 0"
    assert lines[f_at + 2] == "0 1"


def test_cli_decompose_non_nuclear(tmp_path, loop5_file):
    code, _ = _cli(tmp_path, "decompose", loop5_file, "--subgroup", "0,1")
    assert code == 1


def test_cli_extend_round_trip(tmp_path, z4_file, data_z4, z4):
    d = tmp_path / "d.sch"
    d.write_text(emit_schreier_data(data_z4))
    code, text = _cli(tmp_path, "extend", str(d))
    assert code == 0
    L = parse_loop(text)
    from loopforge import find_isomorphism
    assert find_isomorphism(L, z4) is not None


def test_cli_equiv_none(tmp_path, data_z4, z2):
    from loopforge import trivial_data
    d1 = tmp_path / "d1.sch"
    d2 = tmp_path / "d2.sch"
    d1.write_text(emit_schreier_data(data_z4))
    d2.write_text(emit_schreier_data(trivial_data(z2, z2)))
    for extra in ((), ("--wide",)):
        code, text = _cli(tmp_path, "equiv", str(d1), str(d2), *extra)
        assert code == 0
        assert text == "NONE\n"


def test_cli_equiv_witness(tmp_path, data_s3f):
    from loopforge.decomposition import apply_shift
    d1 = tmp_path / "d1.sch"
    d2 = tmp_path / "d2.sch"
    d1.write_text(emit_schreier_data(data_s3f))
    d2.write_text(emit_schreier_data(apply_shift(data_s3f, (0, 3))))
    code, text = _cli(tmp_path, "equiv", str(d1), str(d2))
    assert code == 0
    assert text == "n: 0 3\n"


def test_cli_shift_data(tmp_path, data_s3f):
    from loopforge.decomposition import apply_shift
    d = tmp_path / "d.sch"
    d.write_text(emit_schreier_data(data_s3f))
    code, text = _cli(tmp_path, "shift", str(d), "--shift", "0,3")
    assert code == 0
    assert text == emit_schreier_data(apply_shift(data_s3f, (0, 3)))


def test_cli_gallery_commutator(tmp_path):
    code, text = _cli(tmp_path, "gallery", "commutator",
                      "--k", "s3", "--g", "s3", "--list-homs")
    assert code == 0
    assert text.startswith("homomorphisms:")


def test_cli_enumerate_count(tmp_path):
    code, text = _cli(tmp_path, "enumerate", "--order", "5", "--count")
    assert code == 0
    assert text == "count: 6\n"
    code, text = _cli(tmp_path, "enumerate", "--order", "5", "--count",
                      "--filter", "associative")
    assert code == 0
    assert text == "count: 1\n"


def test_cli_reports_stable_across_thread_env(tmp_path, monkeypatch):
    outputs = []
    for threads in ("1", "8"):
        monkeypatch.setenv("LOOPFORGE_THREADS", threads)
        _, text = _cli(tmp_path, "enumerate", "--order", "4")
        outputs.append(text)
    assert outputs[0] == outputs[1]
