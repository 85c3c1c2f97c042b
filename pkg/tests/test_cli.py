import subprocess
import sys

from supersympoly.cli import main
from supersympoly.selfcheck import CheckResult


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_member(self, capsys):
        code, out, _ = run(
            capsys, "check", "--m", "1", "--n", "1", "--p", "3", "--poly", "x1 - y1"
        )
        assert code == 0
        assert "overall: true" in out
        assert "strict: true" in out

    def test_non_member(self, capsys):
        code, out, _ = run(
            capsys, "check", "--m", "1", "--n", "1", "--p", "3", "--poly", "x1"
        )
        assert code == 1
        assert "overall: false" in out

    def test_parse_error(self, capsys):
        code, _, err = run(
            capsys, "check", "--m", "1", "--n", "1", "--p", "3", "--poly", "x1 +"
        )
        assert code == 2
        assert "parse error" in err

    def test_out_of_range_variable(self, capsys):
        code, _, _ = run(
            capsys, "check", "--m", "1", "--n", "1", "--p", "3", "--poly", "x2"
        )
        assert code == 2

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "poly.txt"
        path.write_text("y1^2 - x1*y1\n")
        code, out, _ = run(
            capsys, "check", "--m", "1", "--n", "1", "--p", "3", "--file", str(path)
        )
        assert code == 0
        assert "p_balanced: false" in out


class TestDecompose:
    def test_verified_certificate(self, capsys):
        code, out, _ = run(
            capsys,
            "decompose", "--m", "1", "--n", "1", "--p", "3",
            "--poly", "y1^2 - x1*y1", "--verify",
        )
        assert code == 0
        assert out.strip() == "C[2]"

    def test_constant(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--m", "1", "--n", "1", "--p", "3", "--poly", "2"
        )
        assert code == 0
        assert out.strip() == "2"

    def test_rejection(self, capsys):
        code, _, err = run(
            capsys, "decompose", "--m", "1", "--n", "1", "--p", "3", "--poly", "x1"
        )
        assert code == 1
        assert "rejected" in err


class TestVk:
    def test_golden_level_one(self, capsys):
        code, out, _ = run(
            capsys, "vk", "--m", "1", "--n", "1", "--p", "3", "--k", "1"
        )
        assert code == 0
        assert out.strip() == "2*x1*y1 + y1^2"

    def test_show_psi_level_one(self, capsys):
        code, out, _ = run(
            capsys, "vk", "--m", "1", "--n", "1", "--p", "3", "--k", "1", "--show-psi"
        )
        assert code == 0
        assert out.splitlines() == ["2*x1*y1 + y1^2", "0", "0"]

    def test_show_psi_level_two(self, capsys):
        code, out, _ = run(
            capsys, "vk", "--m", "2", "--n", "1", "--p", "3", "--k", "1", "--show-psi"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[1] == "T^3"
        assert lines[2] == "0"

    def test_flag_validation(self, capsys):
        code, _, _ = run(capsys, "vk", "--m", "1", "--n", "1", "--p", "3", "--k", "3")
        assert code == 2


class TestDims:
    def test_small_grid(self, capsys):
        code, out, _ = run(
            capsys, "dims", "--m", "1", "--n", "1", "--p", "3", "--dmax", "6"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "m,n,p,d,dim_As,dim_generated,match"
        assert len(lines) == 9  # header + 7 rows + summary
        assert all(line.endswith("true") for line in lines[1:-1])
        assert lines[-1] == "all 7 degrees match"

    def test_degree_zero_only(self, capsys):
        code, out, _ = run(
            capsys, "dims", "--m", "1", "--n", "1", "--p", "3", "--dmax", "0"
        )
        assert code == 0
        assert "1,1,3,0,1,1,true" in out

    def test_empty_x_block(self, capsys):
        code, out, _ = run(
            capsys, "dims", "--m", "0", "--n", "2", "--p", "3", "--dmax", "4"
        )
        assert code == 0
        # partition counts into at most 2 parts: 1, 1, 2, 2, 3
        rows = [line.split(",") for line in out.strip().splitlines()[1:-1]]
        assert [int(r[4]) for r in rows] == [1, 1, 2, 2, 3]


class TestSelftest:
    def test_expected_failure_keeps_exit_zero(self, capsys, monkeypatch):
        results = [
            CheckResult("good", True, True, "fine", 0.1),
            CheckResult("documented", False, False, "known", 0.1),
        ]
        monkeypatch.setattr("supersympoly.selfcheck.run_all", lambda: results)
        code, out, _ = run(capsys, "selftest")
        assert code == 0
        assert "FAIL (expected" in out

    def test_unexpected_failure_exits_nonzero(self, capsys, monkeypatch):
        results = [CheckResult("broken", False, True, "boom", 0.1)]
        monkeypatch.setattr("supersympoly.selfcheck.run_all", lambda: results)
        code, out, _ = run(capsys, "selftest")
        assert code == 1
        assert "1 unexpected failure(s)" in out

    def test_end_to_end(self, capsys):
        code, out, _ = run(capsys, "selftest")
        assert code == 0
        assert "selftest complete" in out
        assert out.count("PASS") >= 8


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supersympoly", "vk", "--m", "1", "--n", "1",
         "--p", "3", "--k", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2*x1*y1 + y1^2"
