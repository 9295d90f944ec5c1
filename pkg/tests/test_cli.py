import json
import subprocess
import sys

import pytest

from qcap import cli
from qcap.partitions import count_dj
from qcap.series import format_term
from qcap.verify import REGISTRY, Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestExpand:
    def test_c4_finite(self, capsys):
        code, out, _ = run(capsys, "expand", "--series", "C4-finite", "--alpha", "1", "--beta", "1",
                           "--q-order", "7")
        assert code == 0
        assert out.splitlines() == ["1", "t q", "t^-1 q^2", "q^3", "t q^4", "q^6"]

    def test_c4_finite_without_parts_one_and_two(self, capsys):
        _, out, _ = run(capsys, "expand", "--series", "C4-finite", "--alpha", "0", "--beta", "0",
                        "--q-order", "7")
        assert out.splitlines() == ["1", "q^3", "t q^4"]

    def test_theta2(self, capsys):
        _, out, _ = run(capsys, "expand", "--series", "Theta2", "--q-order", "2")
        assert out.splitlines() == ["1", "-t q"]

    def test_c2_refined_order_one(self, capsys):
        _, out, _ = run(capsys, "expand", "--series", "C2-refined", "--q-order", "1")
        assert out.splitlines() == ["1"]

    def test_counts_match_distinct_part_oracle(self, capsys):
        _, out, _ = run(capsys, "expand", "--series", "C2", "--q-order", "12")
        expected = [format_term(count_dj(1, n), 0, n) for n in range(12) if count_dj(1, n)]
        assert out.splitlines() == expected

    @pytest.mark.parametrize("name", ["C1", "C3-refined", "C10-finite", "C-2-finite", "Cab-refined",
                                      "theorem-rhs", "theta-tq4", "theta-tq", "theta-t2q2",
                                      "Theta1", "gamma3", "F3", "delta5", "H5"])
    def test_known_names(self, capsys, name):
        code, out, _ = run(capsys, "expand", "--series", name, "--q-order", "12")
        assert code == 0 and out.strip()

    def test_gamma_matches_f(self, capsys):
        _, a, _ = run(capsys, "expand", "--series", "gamma4", "--q-order", "15")
        _, b, _ = run(capsys, "expand", "--series", "F4", "--q-order", "15")
        assert a == b

    def test_json(self, capsys):
        code, out, _ = run(capsys, "expand", "--series", "C4-finite", "--q-order", "7", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["schema_version"] == 1
        assert data["coefficients"][2] == [[-1, "1"]]
        assert data["coefficients"][5] == []
        assert len(data["coefficients"]) == 7

    @pytest.mark.parametrize("name", ["nonsense", "C-1-finite", "gamma"])
    def test_unknown_series(self, capsys, name):
        code, _, err = run(capsys, "expand", "--series", name)
        assert code == 2 and "error" in err

    def test_bad_order(self, capsys):
        code, _, _ = run(capsys, "expand", "--series", "C1", "--q-order", "0")
        assert code == 2

    def test_env_default_order(self, capsys, monkeypatch):
        monkeypatch.setenv("QCAP_DEFAULT_ORDER", "2")
        _, out, _ = run(capsys, "expand", "--series", "Theta2")
        assert out.splitlines() == ["1", "-t q"]

    def test_env_default_order_invalid(self, capsys, monkeypatch):
        monkeypatch.setenv("QCAP_DEFAULT_ORDER", "many")
        code, _, _ = run(capsys, "expand", "--series", "Theta2")
        assert code == 2


class TestVerify:
    def test_theorem_main(self, capsys):
        code, out, _ = run(capsys, "verify", "--identity", "theorem-main", "--q-order", "30")
        assert code == 0 and out.startswith("PASS  theorem-main")

    def test_unknown_identity(self, capsys):
        code, _, err = run(capsys, "verify", "--identity", "nonsense")
        assert code == 2
        assert "theorem-mainab" in err and "reindexing" in err

    def test_json_report(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--identity", "refined-c2", "--q-order", "20",
                           "--format", "json", "--output", str(path))
        assert code == 0 and out == ""
        report = Report.from_dict(json.loads(path.read_text()))
        assert [c.name for c in report.checks] == ["refined-c2"]
        assert report.checks[0].params["order"] == 20

    def test_alpha_beta_filter(self, capsys):
        code, out, _ = run(capsys, "verify", "--identity", "theorem-mainab", "--q-order", "20",
                           "--alpha", "0", "--beta", "0", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["checks"][0]["params"]["configs"] == [[0, 0]]

    def test_failure_exit_code(self, capsys, monkeypatch):
        def broken(ctx, order):
            from qcap.series import QSeries
            ctx.compare("one vs two", QSeries.one(order), QSeries.constant(2, order))
        check = REGISTRY["reindexing"]
        monkeypatch.setitem(REGISTRY, "reindexing", check.__class__(
            check.name, check.label, check.description, check.identities, check.defaults, broken))
        code, out, _ = run(capsys, "verify", "--identity", "reindexing", "--workers", "1")
        assert code == 1
        assert "FAIL  reindexing  q^0 t^0: lhs 1, rhs 2" in out

    def test_z_degree_too_small(self, capsys):
        code, _, _ = run(capsys, "verify", "--identity", "fqdiff-residual", "--z-degree", "2")
        assert code == 2

    def test_bad_flag_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--alpha", "3"])
        assert exc.value.code == 2


class TestList:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "list")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == len(REGISTRY)
        assert any(line.startswith("theorem-mainab") and "all four" in line for line in lines)

    def test_json_stable(self, capsys):
        _, a, _ = run(capsys, "list", "--format", "json")
        _, b, _ = run(capsys, "list", "--format", "json")
        assert a == b
        data = json.loads(a)
        assert set(data[0]) == {"name", "description", "label"}
        assert [d["name"] for d in data] == sorted(REGISTRY)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qcap", "expand", "--series", "Theta2", "--q-order", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.split() == ["1", "-t", "q"]
