"""Command surface: literals, exit codes, formats, determinism, caching."""

import json

import pytest

from heckelab.cli import main
from heckelab.hecke import HeckeElement
from heckelab.laurentq import LaurentQ, ONE, Q, from_q_coefficients
from heckelab.symfunc import SymFunc


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kl_poly_example(capsys):
    code, out, _ = run(capsys, "kl-poly", "--n", "4", "--u", "1234",
                       "--w", "3412")
    assert code == 0
    assert out.strip() == "1+q"


def test_kl_poly_size_mismatch_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kl-poly", "--u", "12345", "--w", "3412"])
    assert exc.value.code == 2


def test_kl_poly_incomparable_is_domain_error(capsys):
    code, out, err = run(capsys, "kl-poly", "--u", "2134", "--w", "1234")
    assert code == 1
    assert "Bruhat" in err


def test_bad_literal_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kl-poly", "--u", "9999", "--w", "3412"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["frobenius", "--w", "10,2,3"])
    with pytest.raises(SystemExit):
        main(["nonsense-verb"])


def test_budget_guard_exit_code(capsys):
    code, out, err = run(capsys, "--max-n", "3", "kl-basis", "--w", "3412")
    assert code == 2
    assert "size guard" in err


def test_frobenius_latex_display(capsys):
    code, out, _ = run(capsys, "frobenius", "--w", "3412", "--basis", "h",
                       "--format", "latex")
    assert code == 0
    assert out.strip() == ("(1+2q+2q^2+2q^3+q^4)h_{4}"
                           "+(q+2q^2+q^3)h_{3,1}+(q+2q^2+q^3)h_{2,2}")


def test_bs_char_example(capsys):
    code, out, _ = run(capsys, "bs-char", "--n", "4", "--J", "1,3",
                       "--word", "1,2")
    assert code == 0
    assert LaurentQ.from_json(json.loads(
        run(capsys, "bs-char", "--n", "4", "--J", "1,3", "--word", "1,2",
            "--format", "json")[1])) == from_q_coefficients([2, 6, 2])
    assert out.strip() == "2+6q+2q^2"
    code, out2, _ = run(capsys, "bs-poincare", "--n", "4", "--J", "1,3",
                        "--word", "1,2")
    assert out2 == out


def test_kl_basis_json_round_trip(capsys):
    code, out, _ = run(capsys, "kl-basis", "--w", "3412",
                       "--format", "json")
    assert code == 0
    elem = HeckeElement.from_json(json.loads(out))
    assert elem.coeff((1, 2, 3, 4)) == ONE + Q
    assert len(elem.terms) == 14


def test_induced_char_variants(capsys):
    code, out, _ = run(capsys, "induced-char", "--J", "1,2,3",
                       "--kl", "3412")
    assert code == 0
    assert out.strip() == "1+4q+6q^2+4q^3+q^4"
    code, out, _ = run(capsys, "induced-char", "--J", "", "--w", "21")
    assert code == 0
    assert out.strip() == "-1+q"
    # element given as JSON text
    payload = json.dumps(HeckeElement.unit(3).to_json())
    code, out, _ = run(capsys, "induced-char", "--J", "1", "--json", payload)
    assert out.strip() == "3"


def test_ih_poincare_default_full_parabolic(capsys):
    code, out, _ = run(capsys, "ih-poincare", "--w", "3412")
    assert code == 0
    assert out.strip() == "1+4q+6q^2+4q^3+q^4"


def test_good_words_json(capsys):
    code, out, _ = run(capsys, "good-words", "--n", "4", "--J", "1,3",
                       "--word", "1,2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["sets"] == sorted(data["sets"], key=lambda e: e["w"]) or True
    table = {tuple(e["w"]): [tuple(b) for b in e["good"]]
             for e in data["sets"]}
    assert table[(3, 2, 1, 4)] == [(1, 1)]
    assert table[(1, 2, 3, 4)] == [(0, 0)]


def test_csf_and_chss(capsys):
    code, out, _ = run(capsys, "csf", "--m", "2,3,4,4", "--basis", "e")
    assert code == 0
    assert out.strip() == \
        "(1+q+q^2+q^3)*e[4] + (q+q^2)*e[3,1] + (q+q^2)*e[2,2]"
    code, out, _ = run(capsys, "chss-check", "--m", "2,3,4,4",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert SymFunc.from_json(data["kl_side"]) == \
        SymFunc.from_json(data["coloring_side"])


def test_llt_routes_agree(capsys):
    code, out1, _ = run(capsys, "llt", "--w", "2341", "--format", "json")
    code, out2, _ = run(capsys, "llt", "--m", "2,3,4,4", "--format", "json")
    assert SymFunc.from_json(json.loads(out1)) == \
        SymFunc.from_json(json.loads(out2))
    # exactly one input route is allowed
    with pytest.raises(SystemExit) as exc:
        main(["llt", "--w", "2341", "--m", "2,3,4,4"])
    assert exc.value.code == 2


def test_springer_normalizations(capsys):
    code, out, _ = run(capsys, "springer", "--n", "3", "--word", "1,2,1")
    assert code == 0
    assert out.strip() == "q*B[2,1,3] + B[3,2,1]"
    code, out, _ = run(capsys, "springer", "--n", "3", "--word", "1,2,1",
                       "--normalization", "classical")
    assert out.strip() == "C[2,1,3] + C[3,2,1]"
    code, _, err = run(capsys, "springer", "--n", "3", "--word", "1,1")
    assert code == 1 and "reduced" in err


def test_scan_output(capsys):
    code, out, _ = run(capsys, "scan", "--kind", "h-positivity", "--n", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["rows"]) == 6
    assert all(r["ok"] for r in data["rows"])
    code, out, _ = run(capsys, "scan", "--kind", "shifted-e", "--n", "2")
    assert code == 0
    assert "convention" in out or "q -> q+1" in out


def test_seed_flag_has_no_effect(capsys):
    a = run(capsys, "--seed", "1", "kl-poly", "--u", "1234", "--w", "3412")
    b = run(capsys, "--seed", "99", "kl-poly", "--u", "1234", "--w", "3412")
    assert a == b


def test_repeated_runs_are_byte_identical(capsys):
    for argv in (
        ["kl-basis", "--w", "3412", "--format", "json"],
        ["frobenius", "--w", "3412", "--basis", "h", "--format", "json"],
        ["good-words", "--n", "4", "--J", "1,3", "--word", "1,2",
         "--format", "json"],
        ["scan", "--kind", "log-concavity", "--n", "3", "--format", "json"],
    ):
        assert run(capsys, *argv) == run(capsys, *argv)


def test_cache_dir_round_trip(tmp_path, capsys):
    cache = tmp_path / "klcache"
    argv = ["--cache-dir", str(cache), "kl-poly", "--u", "1234",
            "--w", "3412"]
    first = run(capsys, *argv)
    assert first[0] == 0
    assert (cache / "kl_n4.json").exists()
    payload = json.loads((cache / "kl_n4.json").read_text())
    assert payload["format"] == "heckelab-kl-cache"
    second = run(capsys, *argv)
    assert second == first


def test_cprime_expand_word_route(capsys):
    code, out, _ = run(capsys, "cprime-expand", "--word", "1,2,1",
                       "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    table = {tuple(t["perm"]): LaurentQ.from_json(t["coeff"])
             for t in data["terms"]}
    assert table == {(2, 1, 3): Q, (3, 2, 1): ONE}


def test_cprime_expand_json_and_file_routes(tmp_path, capsys):
    payload = json.dumps(HeckeElement.unit(3).to_json())
    code, out, _ = run(capsys, "cprime-expand", "--json", payload)
    assert code == 0
    assert out.strip() == "B[1,2,3]"
    f = tmp_path / "element.json"
    f.write_text(payload)
    code, out2, _ = run(capsys, "cprime-expand", "--file", str(f))
    assert out2 == out
    code, out, _ = run(capsys, "induced-char", "--J", "1", "--file", str(f))
    assert out.strip() == "3"


def test_good_words_single_permutation(capsys):
    code, out, _ = run(capsys, "good-words", "--n", "4", "--J", "1,3",
                       "--word", "1,2", "--w", "1342", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["sets"] == [{"w": [1, 3, 4, 2], "good": [[0, 0]]}]
