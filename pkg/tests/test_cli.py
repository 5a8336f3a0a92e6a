import random
from fractions import Fraction as F

import pytest

from irpath import generate as gen
from irpath.checkers import is_dpath, is_ir_path
from irpath.cli import main
from irpath.pathdoc import ParseError, dump_path, parse_box, parse_path, parse_point
from irpath.topology import BasisBox

LINEAR = """\
# a straight d-path
dim 2
kind pl
0 0 0
1 1 2
"""

DECREASING = "dim 1\nkind pl\n0 1\n1 0\n"

BAD_STEP = "dim 1\nkind step\n[0,1/2] 0\n(1/2,1] 1\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(text, name="p.path"):
        target = tmp_path / name
        target.write_text(text, encoding="utf-8")
        return str(target)
    return _write


class TestPathDocument:
    def test_parse_pl(self):
        path = parse_path(LINEAR)
        assert path.endpoints() == ((0, 0), (1, 2))

    def test_parse_step(self):
        path = parse_path("dim 1\nkind step\n[0,1) 0\n{1} 1\n")
        assert path.eval(1) == (1,) and path.eval(F(1, 2)) == (0,)

    @pytest.mark.parametrize("text, line", [
        ("dim 1\nkind pl\n0 0.5\n1 1\n", 3),
        ("dim 2\nkind pl\n0 0\n1 1 1\n", 3),
        ("dim 1\nkind step\n[0,1/0) 0\n", 3),
        ("dim x\nkind pl\n", 1),
        ("dim 1\nkind curve\n0 0\n", 2),
    ])
    def test_diagnostics(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_path(text)
        assert info.value.line == line

    def test_invalid_partition(self):
        with pytest.raises(ParseError):
            parse_path("dim 1\nkind step\n[0,1/2] 0\n[1/2,1] 1\n")

    def test_round_trip(self):
        rng = random.Random(47)
        for _ in range(100):
            n = rng.randint(1, 3)
            for path in (gen.random_pl(rng, n, rng.randint(2, 6)),
                         gen.random_step_path(rng, n, 8, rng.randint(0, 6))):
                assert parse_path(dump_path(path)) == path

    def test_literals(self):
        assert parse_point("(0,-1/2)") == (0, F(-1, 2))
        assert parse_point("3") == (3,)
        assert parse_box("(1/2,inf)") == BasisBox((F(1, 2), None))
        with pytest.raises(ParseError):
            parse_point("(1,,2)")


class TestCheck:
    def test_builtin_example(self, capsys):
        code, out, _ = run(capsys, "check", "builtin:example", "--mode", "both")
        assert code == 1
        assert "ir: true" in out and "d: false" in out

    def test_linear(self, capsys, write):
        code, out, _ = run(capsys, "check", write(LINEAR))
        assert code == 0
        assert out == "d: true\nir: true\n"

    def test_decreasing_ir_witness(self, capsys, write):
        code, out, _ = run(capsys, "--format", "records", "check", write(DECREASING), "--mode", "ir")
        assert code == 1
        assert out == "verdict=ir value=false box=(1/2) preimage=(1/2,1]\n"

    def test_parse_error_exit(self, capsys, write):
        code, _, err = run(capsys, "check", write("dim 1\nkind pl\n0 1.5\n1 0\n"))
        assert code == 2 and "line 3" in err

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "check", "/nonexistent/file.path")
        assert code == 2


class TestPreimage:
    def test_box_excluding_start(self, capsys):
        code, out, _ = run(capsys, "preimage", "builtin:example", "--box=(0,0)")
        assert code == 0 and out == "∅ (open)\n"

    def test_box_holding_start(self, capsys):
        code, out, _ = run(capsys, "preimage", "builtin:example", "--box=(1/2,1/2)")
        assert code == 0 and out == "[0,1) (open)\n"

    def test_decreasing(self, capsys):
        code, out, _ = run(capsys, "preimage", "builtin:decreasing", "--box=(1/2)")
        assert code == 1 and out == "(1/2,1] (NOT open)\n"

    def test_dimension_mismatch(self, capsys):
        code, _, _ = run(capsys, "preimage", "builtin:decreasing", "--box=(1,1)")
        assert code == 2


class TestReach:
    def test_reachable(self, capsys):
        code, out, _ = run(capsys, "reach", "(0,0)", "(1,2)")
        assert code == 0 and out == "gamma_d: true, gamma_ir: true\n"

    def test_unreachable(self, capsys):
        code, out, _ = run(capsys, "reach", "(0)", "(-1)")
        assert code == 1 and out == "gamma_d: false, gamma_ir: false\n"

    def test_malformed(self, capsys):
        code, _, _ = run(capsys, "reach", "(0,a)", "(1,1)")
        assert code == 2

    def test_witness_files_round_trip(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--format", "records", "reach", "(0,0)", "(1,1)", "--out", str(tmp_path))
        assert code == 0
        d_doc = (tmp_path / "witness_d.path").read_text()
        ir_doc = (tmp_path / "witness_ir.path").read_text()
        assert is_dpath(parse_path(d_doc)).verdict
        ir = parse_path(ir_doc)
        assert is_ir_path(ir).verdict and ir.endpoints() == ((0, 0), (1, 1))

    def test_witness_stdout(self, capsys):
        code, out, _ = run(capsys, "reach", "(0)", "(1)", "--witness")
        assert "# witness d\ndim 1\nkind pl\n0 0\n1 1\n" in out
        assert "# witness ir\ndim 1\nkind step\n[0,1) 0\n{1} 1\n" in out

    def test_selftest(self, capsys):
        code, out, _ = run(capsys, "selftest", "reach", "--count", "500")
        assert code == 0 and "disagreements=0" in out


class TestGoldens:
    def test_all_pass(self, capsys):
        code, out, _ = run(capsys, "goldens")
        assert code == 0
        assert "FAIL" not in out
        assert "PASS example-standard-preimage: preimage={1} standard_open=false" in out

    def test_tampered_fails(self, capsys):
        code, out, _ = run(capsys, "goldens", "--tamper")
        assert code == 1 and "FAIL example-ir-path" in out

    def test_records_deterministic(self, capsys):
        first = run(capsys, "goldens", "--format", "records")
        second = run(capsys, "goldens", "--format", "records")
        assert first == second


class TestOracle:
    def test_example(self, capsys):
        code, out, _ = run(capsys, "oracle", "builtin:example", "--k", "4")
        assert code == 0 and out == "analytic: true, oracle: true, AGREE\n"

    def test_interior_jump(self, capsys, write):
        code, out, _ = run(capsys, "oracle", write(BAD_STEP), "--k", "4")
        assert code == 0 and out == "analytic: false, oracle: false, AGREE\n"

    def test_misaligned(self, capsys, write):
        code, _, err = run(capsys, "oracle", write(BAD_STEP), "--k", "3")
        assert code == 2 and "1/3" in err
