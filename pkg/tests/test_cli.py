import json

import pytest

from binpart import normal_form, parse_poly
from binpart.cli import main, parse_problem_file
from binpart.rings import Ring

from conftest import ideal


def write(tmp_path, text, name="problem.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


CYCLOTOMIC = "ring: x\nideal: x^2+x+1\n"
NEGATIVE = "ring: x, y, z, w\nideal: (x-y)*(z-w)\n"
LINE = "ring: x, y\nideal: x-2*y\n"


class TestProblemFile:
    def test_parse(self):
        pf = parse_problem_file("ring: x, y, z\nideal: (x-z)^2, 3*x - y - 2*z\noption seed = 1\n")
        assert pf.ring_names == ("x", "y", "z")
        assert pf.generators == ("(x-z)^2", "3*x - y - 2*z")
        assert pf.options == {"seed": "1"}

    def test_zero_generators_allowed(self):
        pf = parse_problem_file("ring: x\nideal:\n")
        assert pf.generators == ()

    def test_bad_directive(self):
        from binpart.cli import InputError
        with pytest.raises(InputError):
            parse_problem_file("rng: x\n")


class TestCommands:
    def test_decide_positive(self, tmp_path, capsys):
        code = main(["decide", write(tmp_path, CYCLOTOMIC), "--no-timing"])
        out = capsys.readouterr().out
        assert code == 0
        assert "contains binomial: True" in out
        assert "witness: x^3 - 1" in out

    def test_decide_negative_soft_warning(self, tmp_path, capsys):
        code = main(["decide", write(tmp_path, NEGATIVE), "--no-timing"])
        out = capsys.readouterr().out
        assert code == 2
        assert "contains binomial: False" in out
        assert "heuristic-complete" in out

    def test_tropspan(self, tmp_path, capsys):
        code = main(["tropspan", write(tmp_path, LINE), "--no-timing"])
        out = capsys.readouterr().out
        assert code == 0
        assert "  1 1" in out

    def test_monomial(self, tmp_path, capsys):
        f = write(tmp_path, "ring: x, y\nideal: x-y, x^2, x*y, y^2\n")
        code = main(["monomial", f, "--no-timing"])
        assert code == 0
        assert "contains monomial: True" in capsys.readouterr().out

    def test_oracle_requires_degree(self, tmp_path, capsys):
        code = main(["oracle", write(tmp_path, CYCLOTOMIC), "--no-timing"])
        assert code == 1
        assert "--degree" in capsys.readouterr().err

    def test_oracle(self, tmp_path, capsys):
        code = main(["oracle", write(tmp_path, CYCLOTOMIC), "--degree", "3",
                     "--no-timing", "--json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert {"u": [3], "v": [0], "lambda": "1"} in report["binomials"]

    def test_bin_json_roundtrip(self, tmp_path, capsys):
        code = main(["bin", write(tmp_path, CYCLOTOMIC), "--json", "--no-timing"])
        assert code == 2  # heuristic completeness is a soft warning
        report = json.loads(capsys.readouterr().out)
        assert report["status"] == "LATTICE"
        assert report["lattice_basis"] == [[3]]
        assert report["lambdas"] == ["1"]
        # generators re-parse and re-certify
        ring = Ring(tuple(report["ring"]))
        I = ideal(report["ring"], *report["generators"])
        for g in report["generators_found"]:
            assert normal_form(parse_poly(g, ring), I).is_zero()

    def test_unknown_variable_is_input_error(self, tmp_path, capsys):
        code = main(["decide", write(tmp_path, "ring: x\nideal: x+q\n")])
        assert code == 1
        assert "unknown variable" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["decide", "/nonexistent/file.txt"]) == 1

    def test_deterministic_reports(self, tmp_path, capsys):
        f = write(tmp_path, "ring: x, y, z\nideal: (x-z)^2, 3*x - y - 2*z\n")
        outs = []
        for _ in range(2):
            main(["bin", f, "--json", "--no-timing", "--seed", "7"])
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1]

    def test_file_options_respected(self, tmp_path, capsys):
        f = write(tmp_path, "ring: x\nideal: x^2+x+1\noption seed = 3\noption degree = 3\n")
        code = main(["oracle", f, "--json", "--no-timing"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["degree"] == 3 and report["seed"] == 3
