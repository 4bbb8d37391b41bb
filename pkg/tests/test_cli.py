import json
import subprocess
import sys

import pytest

from sorklie.cli import EXIT_AUDIT_FAIL, EXIT_ERROR, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSork:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "sork", "E8")
        assert code == EXIT_OK
        assert out.strip() == "sork(E8) = 8"

    def test_json_with_certificate(self, capsys):
        code, out, _ = run(capsys, "sork", "G2", "--json", "--certificate")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["system_type"] == "G2"
        assert doc["n"] == 2
        assert len(doc["roots"]) == 2

    def test_invalid_type(self, capsys):
        code, _, err = run(capsys, "sork", "E9")
        assert code == EXIT_ERROR
        assert "error:" in err

    def test_unparseable_type(self, capsys):
        code, _, err = run(capsys, "sork", "X1")
        assert code == EXIT_ERROR
        assert "error:" in err


class TestNu:
    def test_simple(self, capsys):
        code, out, _ = run(capsys, "nu", "so(7,1)")
        assert (code, out.strip()) == (EXIT_OK, "nu = 3")

    def test_product(self, capsys):
        code, out, _ = run(capsys, "nu", "su(2)^3 x sl(2,R)^2")
        assert (code, out.strip()) == (EXIT_OK, "nu = 5")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "nu", "so(3,5) x su(2)", "--json")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["nu"] == 4 and doc["exact"] is True
        assert [f["descriptor"] for f in doc["factors"]] == ["so(5,3)", "su(2)"]
        assert doc["factors"][0]["case"] == "SopqException"

    def test_json_certificates_verify(self, capsys):
        code, out, _ = run(capsys, "nu", "complex(F4)", "--json", "--certificate")
        doc = json.loads(out)
        cert = doc["factors"][0]["certificate"]
        assert code == EXIT_OK
        assert cert["n"] == 4 and len(cert["roots"]) == 4

    def test_upper_bound_path(self, capsys):
        code, out, _ = run(capsys, "nu", "ext(solvable, sl(3,R), general)")
        assert code == EXIT_OK
        assert out.strip() == "nu <= 1 (upper bound)"

    def test_syntax_error(self, capsys):
        code, _, err = run(capsys, "nu", "so(3,5")
        assert code == EXIT_ERROR
        assert "offset" in err

    def test_rule_not_applicable(self, capsys):
        code, _, err = run(capsys, "nu", "Z/2 * Z/2")
        assert code == EXIT_ERROR
        assert "infinite dihedral" in err


class TestCertify:
    def test_valid_roundtrip(self, tmp_path, capsys):
        code, out, _ = run(capsys, "sork", "E6", "--json", "--certificate")
        doc = json.loads(out)
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "certify", str(path))
        assert code == EXIT_OK
        assert "valid certificate: 4" in out

    def test_invalid_certificate(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(
            {"system_type": "A2", "n": 1, "roots": [[2, 0, 0]]}))
        code, out, _ = run(capsys, "certify", str(path))
        assert code == EXIT_AUDIT_FAIL
        assert "NotARoot" in out

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "garbage.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "certify", str(path))
        assert code == EXIT_ERROR

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "certify", "/nonexistent/cert.json")
        assert code == EXIT_ERROR


class TestVerifyTables:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "--rank-cap", "8")
        assert code == EXIT_OK
        assert out.count("all rows pass") == 3

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "--rank-cap", "8", "--json")
        assert code == EXIT_OK
        docs = [json.loads(line) for line in out.strip().splitlines()]
        assert [d["audit"] for d in docs] == ["table1", "table2", "table3"]
        assert all(d["ok"] for d in docs)


class TestVerifyKronecker:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify-kronecker", "--samples", "20",
                           "--max-size", "3")
        assert code == EXIT_OK
        assert "FAIL" not in out


class TestDumpRoots:
    def test_g2(self, capsys):
        code, out, _ = run(capsys, "dump-roots", "G2")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["type"] == "G2"
        assert len(doc["doubled_coords"]) == 12


class TestUsage:
    def test_no_args(self, capsys):
        assert run(capsys, )[0] == EXIT_USAGE

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == EXIT_USAGE

    def test_bad_flag(self, capsys):
        assert run(capsys, "sork", "E8", "--bogus")[0] == EXIT_USAGE


class TestConsoleScript:
    def test_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "sorklie.cli", "sork", "F4"],
            capture_output=True, text=True)
        assert proc.returncode == EXIT_OK
        assert proc.stdout.strip() == "sork(F4) = 4"

    def test_certify_stdin(self, capsys):
        code, out, _ = run(capsys, "sork", "B3", "--json", "--certificate")
        doc = json.loads(out)
        proc = subprocess.run(
            [sys.executable, "-m", "sorklie.cli", "certify", "-"],
            input=json.dumps(doc), capture_output=True, text=True)
        assert proc.returncode == EXIT_OK
