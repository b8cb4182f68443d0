import json

import pytest

from gibonacci.cli import build_parser, jsonable, parse_seed, run
from gibonacci.gcdsum import classify
from gibonacci.sequences import Seed


def invoke(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_term(capsys):
    code, out = invoke(capsys, "term", "--seed", "1,4", "--n", "7")
    assert code == 0 and out.strip() == "60"


def test_sum(capsys):
    code, out = invoke(capsys, "sum", "--seed", "1,4", "--n", "1", "--k", "5")
    assert code == 0 and out.strip() == "55"


def test_gcd_sum_default_seed_is_fibonacci(capsys):
    code, out = invoke(capsys, "gcd-sum", "--k", "20")
    assert code == 0 and "55" in out


def test_gcd_sum_all_methods(capsys):
    code, out = invoke(capsys, "gcd-sum", "--seed", "1,4", "--k", "5", "--method", "all")
    assert code == 0
    assert out.count("11") == 3


def test_pisano(capsys):
    code, out = invoke(capsys, "pisano", "--m", "10")
    assert code == 0 and out.strip() == "60"


def test_classify_json(capsys):
    code, out = invoke(capsys, "classify", "--seed", "2,1", "--k", "12",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["case_row"] == "row_048"
    assert payload["predicted"] == "40"


def test_classify_inapplicable(capsys):
    code, out = invoke(capsys, "classify", "--seed", "1,4", "--k", "5",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["predicted"] == "table-inapplicable"
    assert payload["actual"] == "11"


def test_parity_scan(capsys):
    code, out = invoke(capsys, "parity-scan", "--seed", "1,4", "--m-max", "100")
    assert code == 0 and "(11,5)" in out


def test_max_modulus(capsys):
    code, out = invoke(capsys, "max-modulus", "--k", "60")
    assert code == 0 and "832040" in out


def test_lucas_odd(capsys):
    code, out = invoke(capsys, "lucas-odd", "--seed", "3,7", "--j", "9")
    assert code == 0 and out.strip() == "76"


def test_primes_check(capsys):
    code, out = invoke(capsys, "primes-check", "--seed", "1,4", "--k", "5")
    assert code == 0 and "offending=[]" in out


def test_squares(capsys):
    code, out = invoke(capsys, "squares", "--k", "10")
    assert code == 0 and "empirical=55" in out


def test_identities_single(capsys):
    code, out = invoke(capsys, "identities", "--id", "cassini", "--hi", "50")
    assert code == 0 and "cassini: ok" in out


def test_domain_error_exit_code():
    with pytest.raises(ValueError):
        run(["gcd-sum", "--k", "0"])


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 1


def test_seed_parsing():
    assert parse_seed("-3,7") == Seed(-3, 7)
    with pytest.raises(ValueError):
        parse_seed("3")
    with pytest.raises(ValueError):
        parse_seed("a,b")


def test_json_integers_are_strings(capsys):
    code, out = invoke(capsys, "gcd-sum", "--k", "240", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    value = payload["results"][0]["value"]
    assert isinstance(value, str)
    assert int(value) > 2**64  # needs the string representation


def test_jsonable_roundtrip():
    c = classify(Seed(2, 1), 12)
    data = jsonable(c)
    assert json.loads(json.dumps(data)) == data


def test_deterministic_output(capsys):
    _, first = invoke(capsys, "classify", "--seed", "0,1", "--k", "24", "--format", "json")
    _, second = invoke(capsys, "classify", "--seed", "0,1", "--k", "24", "--format", "json")
    assert first == second


def test_parser_lists_all_subcommands():
    parser = build_parser()
    text = parser.format_help()
    for name in ("term", "sum", "gcd-sum", "pisano", "classify", "parity-scan",
                 "max-modulus", "lucas-odd", "primes-check", "squares",
                 "identities", "verify"):
        assert name in text
