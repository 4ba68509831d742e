import json

import pytest

from qflab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCli:
    def test_theta_json(self, capsys):
        code, out, _ = run_cli(capsys, "theta", "--form", "1,2,3,10",
                               "--prec", "3", "--out", "json")
        assert code == 0
        data = json.loads(out)
        assert data == {"D": 1, "prec": 3, "coeffs": [1, 2, 2, 6]}

    def test_theta_csv(self, capsys):
        code, out, _ = run_cli(capsys, "theta", "--form", "1,1,1,1",
                               "--prec", "2", "--out", "csv")
        assert code == 0
        assert out.splitlines() == ["n,r", "0,1", "1,8", "2,24"]

    def test_sreg_pass_and_fail_exit_codes(self, capsys):
        code, out, _ = run_cli(capsys, "sreg", "--form", "1,1,1,1",
                               "--bound", "50")
        assert code == 0 and "pass" in out
        code, out, _ = run_cli(capsys, "sreg", "--form", "1,2,3,3",
                               "--bound", "50", "--out", "json")
        assert code == 1
        data = json.loads(out)
        assert data["counterexample"]["n"] == 10

    def test_usage_errors(self, capsys):
        code, _, err = run_cli(capsys, "sreg", "--form", "1,2,x")
        assert code == 2 and "error" in err
        with pytest.raises(SystemExit) as exc:
            main(["sreg"])  # missing --form
        assert exc.value.code == 2

    def test_lambda(self, capsys):
        code, out, _ = run_cli(capsys, "lambda", "--form", "1,3,3,9",
                               "--n", "3")
        assert code == 0
        assert out.strip() == "3,1,1,3"

    def test_gamma(self, capsys):
        code, out, _ = run_cli(capsys, "gamma", "--form", "1,2,3", "-p", "3")
        assert code == 0
        assert len(out.strip().splitlines()) == 2

    def test_eta_json(self, capsys):
        code, out, _ = run_cli(capsys, "eta", "--quotient", "2:2,15:3,1:-1",
                               "--level", "120", "--prec", "20",
                               "--out", "json")
        assert code == 0
        data = json.loads(out)
        assert data["weight"] == "2"
        assert data["isCuspForm"] is True
        assert data["series"]["coeffs"][2] == 1

    def test_sturm(self, capsys):
        code, out, _ = run_cli(capsys, "sturm", "--level", "120",
                               "--weight", "2")
        assert code == 0 and out.strip() == "48"

    def test_verify_lemma54(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "lemma54", "--prec", "60",
                               "--out", "json")
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "pass"

    def test_verify_table1_quick(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "verify", "table1", "--bound", "50",
                               "--cache-dir", str(tmp_path), "--out", "json")
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "pass"
        assert len(data["checks"]) == 37  # 36 forms + group count line

    def test_search_text(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--cmax", "3",
                               "--bound", "50")
        assert code == 0
        assert "9 survivors" in out

    def test_search_csv(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--cmax", "2",
                               "--bound", "50", "--out", "csv")
        assert code == 0
        header, *rows = out.strip().splitlines()
        assert header.startswith("form,dF,ms,verdict")
        assert all(",pass," in row for row in rows)
