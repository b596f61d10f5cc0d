import json
import math

import pytest

from hookbound.celltyping import cell_typing
from hookbound.certificates import revalidate
from hookbound.cli import EXIT_FAIL, EXIT_HYPOTHESIS, EXIT_PASS, EXIT_USAGE, main
from hookbound.partitions import Partition, parse_rational

STAIR = "20,19,18,17,16,15,14,13,12,11"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDegreeCommand:
    def test_known_degree(self, capsys):
        code, out, _ = run(capsys, "degree", "2,1")
        assert code == EXIT_PASS
        lines = out.splitlines()
        assert lines[0] == "2"
        assert float(lines[1]) == pytest.approx(math.log(2))

    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "degree", "5")
        assert code == EXIT_PASS
        assert out.splitlines()[0] == "1"

    def test_parse_failure(self, capsys):
        code, out, err = run(capsys, "degree", "2,x")
        assert code == EXIT_USAGE
        assert out == "" and err


class TestCertifyCommand:
    def test_alpha_must_exceed_one(self, capsys):
        code, _, err = run(
            capsys, "certify", "strip", "9,6,4,2,2,1", "--k", "4", "--l", "3", "--alpha", "1"
        )
        assert code == EXIT_HYPOTHESIS
        assert "alpha" in err

    def test_rectangle_pass_json(self, capsys):
        code, out, _ = run(capsys, "certify", "rectangle", "--a", "2", "--b", "2")
        assert code == EXIT_PASS
        data = json.loads(out)
        assert data["bound_name"] == "rectangle"
        assert data["verdict"] == "PASS"
        assert revalidate(data)

    def test_theorem_staircase(self, capsys):
        lam = ",".join(str(v) for v in range(40, 20, -1))
        code, out, _ = run(
            capsys, "certify", "theorem", lam, "--alpha", "11/10", "--beta", "21/20"
        )
        assert code == EXIT_PASS
        data = json.loads(out)
        assert data["class"] in ("M1", "M2", "M3")
        assert revalidate(data)

    def test_fail_exit_code(self, capsys):
        code, out, _ = run(
            capsys, "certify", "strip", "2,2", "--k", "2", "--l", "0", "--alpha", "2"
        )
        assert code == EXIT_FAIL
        assert json.loads(out)["verdict"] == "FAIL"

    def test_unknown_bound(self, capsys):
        code, _, err = run(capsys, "certify", "mystery", "2,1", "--alpha", "2")
        assert code == EXIT_USAGE

    def test_missing_flags(self, capsys):
        code, _, err = run(capsys, "certify", "strip", "2,1")
        assert code == EXIT_USAGE
        assert "requires" in err

    def test_float_alpha_rejected(self, capsys):
        code, _, err = run(capsys, "certify", "strict", STAIR, "--alpha", "1.1")
        assert code == EXIT_USAGE

    def test_strict_includes_cells(self, capsys):
        code, out, _ = run(capsys, "certify", "strict", STAIR, "--alpha", "11/10")
        assert code == EXIT_PASS
        data = json.loads(out)
        assert len(data["cells"]) == 155


class TestTypingCommand:
    def test_gate_exit(self, capsys):
        code, _, err = run(capsys, "typing", "2,1", "--alpha", "3/2")
        assert code == EXIT_HYPOTHESIS
        assert "delta" in err

    def test_grid_consistent_with_json(self, capsys):
        code, grid_out, _ = run(capsys, "typing", STAIR, "--alpha", "11/10")
        assert code == EXIT_PASS
        code, json_out, _ = run(capsys, "typing", STAIR, "--alpha", "11/10", "--format", "json")
        assert code == EXIT_PASS
        data = json.loads(json_out)
        lines = grid_out.splitlines()
        for row, col, cell_type, _, _, _ in data["cells"]:
            assert lines[row - 1][col - 1] == str(cell_type)

    def test_json_roundtrip_recomputes_invariants(self, capsys):
        code, out, _ = run(capsys, "typing", STAIR, "--alpha", "11/10", "--format", "json")
        data = json.loads(out)
        lam = Partition.parse(data["partition"])
        alpha = parse_rational(data["alpha"])
        hooks = lam.hook_grid()
        numbers = set()
        for row, col, cell_type, color, number, hook in data["cells"]:
            assert hooks[(row, col)] == hook
            assert number not in numbers
            numbers.add(number)
            if cell_type in (1, 2, 3) and number >= alpha:
                assert alpha * hook <= number
        assert numbers == set(range(1, lam.n + 1))
        fresh = cell_typing(lam, alpha)
        assert fresh.to_json_dict() == data


class TestSweepCommand:
    def test_deterministic_byte_identical(self, capsys):
        argv = [
            "sweep", "sample", "--alpha", "2", "--beta", "3/2",
            "--n-from", "30", "--n-to", "33", "--samples", "2", "--seed", "11",
        ]
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert code1 == code2 == EXIT_PASS
        assert out1 == out2

    def test_enumerate_over_cap(self, capsys):
        code, _, err = run(
            capsys, "sweep", "enumerate", "--alpha", "2", "--beta", "3/2",
            "--n-from", "10", "--n-to", "60",
        )
        assert code == EXIT_USAGE
        assert "sample" in err

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "report.csv"
        code, out, _ = run(
            capsys, "sweep", "balanced", "--alpha", "2", "--beta", "3/2",
            "--n-from", "40", "--n-to", "42", "--out", str(path),
        )
        assert code == EXIT_PASS
        assert out == ""
        assert path.read_text().startswith("n,partition")


class TestOracleCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(capsys, "oracle", "--max-n", "7")
        assert code == EXIT_PASS
        assert out.count("PASS") == 4
        assert "FAIL" not in out

    def test_guard(self, capsys):
        code, _, err = run(capsys, "oracle", "--max-n", "100")
        assert code == EXIT_USAGE

    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "oracle", "--max-n", "1")
        assert code == EXIT_PASS


class TestUsage:
    def test_no_command(self, capsys):
        assert run(capsys, )[0] == EXIT_USAGE

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == EXIT_USAGE
