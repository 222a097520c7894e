import json
import subprocess
import sys

import pytest

from ordcomp import catalog as C
from ordcomp.cli import main, parse_space
from ordcomp.ordinal import ALEPH0, CardClass, parse


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


class TestArithmetic:
    def test_eval(self, capsys):
        assert run(capsys, "eval", "1+w") == (0, "w", "")

    def test_cmp(self, capsys):
        assert run(capsys, "cmp", "w+1", "1+w")[1] == ">"
        assert run(capsys, "cmp", "k*k", "w^(k*2)")[1] == "="

    def test_json(self, capsys):
        code, out, _ = run(capsys, "nsum", "w+1", "w^2", "--json")
        assert code == 0 and json.loads(out) == {"value": "w^2 + w + 1"}

    def test_shifted(self, capsys):
        code, out, _ = run(capsys, "shifted", "w^3+w", "w^2+1", "--json")
        vals = [parse(v) for v in json.loads(out)["values"]]
        assert parse("w^3+w+1") in vals and parse("w^3+w^2+1") in vals and parse("w^3+1") not in vals

    def test_check_exit_codes(self, capsys):
        assert run(capsys, "shifted", "w^3+w", "w^2+1", "--check", "w^3+w^2+1")[:2] == (0, "yes")
        assert run(capsys, "shifted", "w^3+w", "w^2+1", "--check", "w^3+1")[:2] == (1, "no")

    def test_sums(self, capsys):
        assert run(capsys, "minmixed", "w+1", "w+2")[1] == "w + 3"
        assert run(capsys, "starsum", "k+1", "k+1")[1] == parse("k*2+1").__str__()
        assert run(capsys, "sigma", "w^3+w^2*2+1")[1] == "3 2 2 0"


class TestSpaces:
    @pytest.mark.parametrize("text,want", [
        ("iit:k", C.Iit()),
        ("iit:w", C.Iit(ALEPH0)),
        ("discrete:5", C.Discrete(CardClass.finite(5))),
        ("ord", C.Ord()),
        ("kk", C.KappaKappa()),
        ("sbeta:k*2", C.x_beta(parse("k*2"))),
        ("sbeta:2:3:unions", C.SBeta(2, 3, "unions")),
        ("union(iit:k, iit:k)", C.iit_copies(2)),
        ("plus(iit:k, 2)", C.WithFiniteDiscrete(C.Iit(), 2)),
        ("frechet(ord, union(ord, ord))", C.FrechetDisjointUnion((C.Ord(), C.DisjointUnion((C.Ord(), C.Ord()))))),
    ])
    def test_parse_space(self, text, want):
        assert parse_space(text) == want
        assert parse_space(json.dumps(want.to_json())) == want

    def test_lindelof(self, capsys):
        assert run(capsys, "lindelof", "union(ord, ord)")[1] == str(parse("k*2+w"))
        code, out, _ = run(capsys, "lindelof", "frechet(ord, ord)", "--json")
        assert code == 0 and json.loads(out)["lindelof"] is None

    def test_compact(self, capsys):
        code, out, _ = run(capsys, "compact", "iit:k", "[k+1]", "--json")
        assert code == 0 and json.loads(out)["verdict"] == "yes"
        assert run(capsys, "compact", "kk", "[k*2]")[1].startswith("no")


class TestImplies:
    def test_implied(self, capsys):
        code, out, _ = run(capsys, "implies", "[w+1]", "[w]", "--class", "t1", "--json")
        d = json.loads(out)
        assert code == 0 and d["verdict"] == "implied" and d["rules"]

    def test_not_implied(self, capsys):
        d = json.loads(run(capsys, "implies", "[k+k]", "[k*k]", "--json")[1])
        assert d["verdict"] == "not_implied" and C.from_json(d["witness"]) == C.x_beta(parse("k*k"))


class TestErrors:
    @pytest.mark.parametrize("argv", [
        ["eval", "w+)"], ["implies", "[3,2]", "[1]"], ["compact", "foo", "[1]"],
        ["implies", "[1]", "[2]", "--class", "nope"], ["bogus"], [],
    ])
    def test_usage(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and err

    def test_domain_error(self, capsys):
        # well-formed text, but S_beta(alpha) needs beta <= alpha
        code, _, err = run(capsys, "lindelof", "sbeta:k*2:k")
        assert code == 1 and err


def test_console_entry():
    r = subprocess.run([sys.executable, "-m", "ordcomp.cli", "eval", "w+w"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "w*2"


def test_oracle_small(tmp_path, capsys):
    out = tmp_path / "o.jsonl"
    code, text, _ = run(capsys, "oracle", "--max-points", "2", "--max-family", "3", "--bound", "3", "--out", str(out))
    assert code == 0 and "simple_violations=0" in text
    assert out.read_text().count("\n") > 0
