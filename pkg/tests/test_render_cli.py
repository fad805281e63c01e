import json
import os

import pytest

from spiderweb import corpus
from spiderweb.cli import main
from spiderweb.diskoid import dual_diskoid, parse_diskoid
from spiderweb.render import render_diskoid, render_web

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def corpus_path(name):
    return "corpus:" + name


# ---------------------------------------------------------------- render


def test_single_y_svg_has_three_arrows():
    svg = render_web(corpus.load_web("single-y"), "svg")
    assert svg.count("marker-end") == 3
    assert svg.startswith("<svg")


def test_render_deterministic():
    w = corpus.load_web("a2-example")
    assert render_web(w, "svg") == render_web(w, "svg")
    assert render_web(w, "tikz") == render_web(w, "tikz")


def test_w_mu_dual_tikz_golden():
    out = render_diskoid(dual_diskoid(corpus.load_web("w-mu")), "tikz")
    with open(os.path.join(GOLDEN, "w-mu-dual.tikz")) as f:
        assert out == f.read()


def test_a1_dual_renders():
    svg = render_diskoid(dual_diskoid(corpus.load_web("a1-example")), "svg")
    assert "<svg" in svg


# ---------------------------------------------------------------- CLI


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", corpus_path("single-y"))
    assert code == 0 and "ok" in out


def test_validate_missing_file(capsys):
    code, _out, err = run(capsys, "validate", "/nonexistent.web")
    assert code == 1 and "error" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["reduce"])
    assert e.value.code == 2


def test_reduce_square(capsys):
    code, out, _ = run(capsys, "reduce", corpus_path("square"), "--q=-1")
    assert code == 0
    assert "2 terms; value-check ok" in out


def test_eval_theta(capsys):
    code, out, _ = run(capsys, "eval", corpus_path("theta"))
    assert code == 0 and "-q^3-2q-2q^-1-q^-3" in out


def test_basis_single_entry(capsys):
    code, out, _ = run(capsys, "basis", "--boundary", "w1,w1,w1")
    assert code == 0
    assert out.count("path") == 1 or "1 " in out


def test_euler_theta(capsys):
    code, out, _ = run(capsys, "euler", "--web", corpus_path("theta"),
                       "--primes", "2,3,5")
    assert code == 0
    assert "chi = 6; skein(q=-1) = 6; MATCH" in out


def test_count_digon(capsys):
    code, out, _ = run(capsys, "count", "--boundary", "w1,w2", "--q", "2")
    assert code == 0 and "7" in out


def test_partition_json(capsys):
    code, out, _ = run(capsys, "partition", "--boundary", "w1,w1,w1",
                       "--q", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 21
    assert data["buckets_match_paths"] is True


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--boundary", "w1,w2,w1,w2,w1,w2")
    assert code == 0 and "6" in out


def test_dual_roundtrip(capsys, tmp_path):
    out_file = tmp_path / "y.dsk"
    code, out, _ = run(capsys, "dual", corpus_path("single-y"),
                       "--out", str(out_file))
    assert code == 0
    D = parse_diskoid(out_file.read_text())
    assert D.n_triangles() == 1


def test_cat0(capsys):
    code, out, _ = run(capsys, "cat0", corpus_path("w-mu"))
    assert code == 0 and "CAT(0)" in out


def test_order(capsys):
    code, out, _ = run(capsys, "order", corpus_path("w-nu"),
                       corpus_path("w-mu"))
    assert code == 0 and "<=" in out


def test_rotate(capsys):
    code, out, _ = run(capsys, "rotate", corpus_path("a2-example"), "--i", "1")
    assert code == 0


def test_render_cli_svg(capsys):
    code, out, _ = run(capsys, "render", corpus_path("single-y"),
                       "--format", "svg")
    assert code == 0 and "<svg" in out


def test_oracle_closed(capsys):
    code, out, _ = run(capsys, "oracle", corpus_path("theta"))
    assert code == 0 and "6" in out


def test_selftest_all(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "0 failed" in out


def test_per_command_selftest(capsys):
    code, out, _ = run(capsys, "reduce", "--selftest")
    assert code == 0 and "0 failed" in out


def test_deterministic_output(capsys):
    a = run(capsys, "hexagon", "--seed", "4", "--samples", "2")
    b = run(capsys, "hexagon", "--seed", "4", "--samples", "2")
    assert a == b
    assert a[0] == 0 and "2 closure solutions" in a[1]
