import json

import pytest

from planeint import Element, RingKind, elliptic, format_element, hyperbolic, parabolic
from planeint.cli import AmbiguousRingError, ElementParseError, main, parse_element

H, K, C = hyperbolic, parabolic, elliptic


class TestParseElement:
    def test_grammar_cases(self):
        assert parse_element("3-1j") == H(3, -1)
        assert parse_element("7", RingKind.HYPERBOLIC) == H(7, 0)
        assert parse_element("2+k") == K(2, 1)
        assert parse_element("-2+0k") == K(-2, 0)
        assert parse_element("k") == K(0, 1)
        assert parse_element("-j") == H(0, -1)
        assert parse_element("5i") == C(0, 5)
        assert parse_element("0k") == K(0, 0)
        assert parse_element(" 3 - 1 j ") == H(3, -1)

    def test_bare_integer_needs_hint(self):
        with pytest.raises(AmbiguousRingError):
            parse_element("7")

    def test_hint_conflict(self):
        with pytest.raises(ElementParseError):
            parse_element("3-1j", RingKind.PARABOLIC)

    def test_parse_error_carries_position(self):
        with pytest.raises(ElementParseError) as info:
            parse_element("3-1q")
        assert info.value.position == 3

    def test_format_parse_roundtrip(self):
        for kind in RingKind:
            for x in range(-4, 5):
                for y in range(-4, 5):
                    z = Element(kind, x, y)
                    assert parse_element(format_element(z)) == z

    def test_format_normalizes(self):
        assert format_element(parse_element("3 - 1j")) == "3-1j"
        assert format_element(parse_element("+2+1k")) == "2+1k"
        assert format_element(parse_element("7", RingKind.PARABOLIC)) == "7+0k"


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


class TestCommands:
    def test_classify_human(self, capsys):
        rc, out, _ = run(capsys, "classify", "1+1j")
        assert rc == 0
        assert "prime          yes" in out
        assert "irreducible    no" in out
        assert "zero divisor   yes" in out

    def test_classify_json_integers_are_strings(self, capsys):
        rc, out, _ = run(capsys, "--json", "classify", "2", "--ring", "j")
        assert rc == 0
        data = json.loads(out)
        assert data["eta"] == "4" and data["eta_plus"] == "4"
        assert data["is_irreducible"] is True and data["is_prime"] is False
        assert data["element"] == {"ring": "j", "x": "2", "y": "0", "text": "2+0j"}

    def test_classify_k(self, capsys):
        rc, out, _ = run(capsys, "--json", "classify", "k")
        data = json.loads(out)
        assert data["is_prime"] and data["is_irreducible"]

    def test_factor(self, capsys):
        rc, out, _ = run(capsys, "--json", "factor", "8", "--ring", "j")
        assert rc == 0
        data = json.loads(out)
        assert [f["text"] for f in data["factors"]] == ["2+0j", "2+0j", "2+0j"]

    def test_factor_zero_divisor_is_domain_error(self, capsys):
        rc, _, err = run(capsys, "factor", "3+3j")
        assert rc == 1 and "no irreducible factorization" in err

    def test_divmod_reports_check(self, capsys):
        rc, out, _ = run(capsys, "divmod", "5+3i", "1+1i")
        assert rc == 0
        assert "quotient   4-1i" in out
        assert "eta_plus(remainder) = 0 < 2" in out

    def test_divmod_by_zero_divisor(self, capsys):
        rc, _, err = run(capsys, "divmod", "5+3j", "2+2j")
        assert rc == 1

    def test_norm(self, capsys):
        rc, out, _ = run(capsys, "--json", "norm", "3+1j")
        data = json.loads(out)
        assert data == {
            "element": {"ring": "j", "x": "3", "y": "1", "text": "3+1j"},
            "eta": "8",
            "eta_plus": "8",
            "trace": "6",
        }

    def test_dts_rows(self, capsys):
        rc, out, _ = run(capsys, "dts", "8")
        lines = out.strip().splitlines()
        assert lines[0] == "n,two_adic,representable,r,s"
        assert "8,3,true,3,1" in lines
        assert "6,1,false,," in lines
        assert "1,0,true,1,0" in lines

    def test_ideal(self, capsys):
        rc, out, _ = run(capsys, "--json", "ideal", "2", "1+1j", "--ring", "j", "--contains", "5+3j")
        data = json.loads(out)
        assert data["alpha"]["text"] == "2+0j"
        assert data["dplus_gen"] == "1" and data["dminus_gen"] == "1"
        assert data["contains"]["member"] is True

    def test_oracle_prime(self, capsys):
        rc, out, _ = run(capsys, "--json", "oracle", "prime", "2", "--ring", "j", "--box", "3")
        data = json.loads(out)
        assert data["verdict"] == "refuted"
        assert [w["text"] for w in data["witness"]] == ["1+1j", "1-1j"]

    def test_oracle_irreducible(self, capsys):
        rc, out, _ = run(capsys, "oracle", "irreducible", "3+1j")
        assert rc == 0 and "yes" in out

    def test_oracle_divisors(self, capsys):
        rc, out, _ = run(capsys, "oracle", "divisors", "2", "--ring", "j")
        assert rc == 0 and out.strip() == "1+0j, 2+0j"

    def test_classify_poly(self, capsys):
        rc, out, _ = run(capsys, "--json", "classify-poly", "1", "0", "1")
        data = json.loads(out)
        assert data["kind"] == "i" and data["disc"] == "-4"
        rc, out, _ = run(capsys, "classify-poly", "1/2", "0", "-3/4")
        assert rc == 0 and "hyperbolic" in out

    def test_exp_pow(self, capsys):
        rc, out, _ = run(capsys, "--json", "exp", "0", "3", "--ring", "k")
        data = json.loads(out)
        assert data["x"] == 1.0 and data["y"] == 3.0
        rc, out, _ = run(capsys, "--json", "pow", "5", "3", "2", "--ring", "j")
        data = json.loads(out)
        assert abs(data["x"] - 34.0) < 1e-9 and abs(data["y"] - 30.0) < 1e-9

    def test_pow_out_of_sector(self, capsys):
        rc, _, err = run(capsys, "pow", "1", "1", "2", "--ring", "j")
        assert rc == 1

    def test_table_k(self, capsys):
        rc, out, _ = run(capsys, "table", "--ring", "k", "--bound", "5")
        assert rc == 0
        lines = out.splitlines()
        assert lines[0].startswith("#")
        # exactly one prime class: k itself
        prime_rows = [l for l in lines if l.split(",")[7:8] == ["true"]]
        assert prime_rows == ["1k,0,1,0,0,false,true,true,true,false"]

    def test_table_h_known_rows(self, capsys):
        rc, out, _ = run(capsys, "--json", "table", "--ring", "j", "--bound", "5")
        data = json.loads(out)
        by_text = {row["element"]["text"]: row for row in data["rows"]}
        assert by_text["2+1j"]["is_prime"] is True and by_text["2+1j"]["eta"] == "3"
        assert by_text["3+1j"]["is_prime"] is False and by_text["3+1j"]["is_irreducible"] is True

    def test_table_bound_too_large(self, capsys):
        rc, _, err = run(capsys, "table", "--ring", "j", "--bound", "5000")
        assert rc == 1 and "bound too large" in err

    def test_parse_error_exit_code(self, capsys):
        rc, _, err = run(capsys, "classify", "wat")
        assert rc == 2
        rc, _, err = run(capsys, "classify", "7")
        assert rc == 2 and "bare integer" in err
