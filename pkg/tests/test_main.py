import io
import json
from pathlib import Path
import pytest
from main import run_command

GOLDEN = Path(__file__).parent / "golden"


def run(argv: list[str]) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv, golden", [
    (["quantize", "--map", "duflo", "--expr", "norm2"], "quantize_duflo_norm2.json"),
    (["expmap", "--map", "npp", "--order", "10", "--basis", "epsilon"], "expmap_npp_epsilon_10.json"),
    (["skein", "--map", "npp", "--order", "10"], "skein_npp_10.json"),
])
def test_golden_output(argv, golden):
    code, out, _ = run(argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()
    assert run(argv)[1] == out


def test_bernoulli_command():
    assert run(["bernoulli", "2"]) == (0, "1/6\n", "")
    assert run(["bernoulli", "1"])[1] == "-1/2\n"
    assert run(["bernoulli", "1", "--second-kind"])[1] == "1/2\n"
    assert run(["bernoulli", "-1"])[0] == 2


def test_quantize_text_output():
    code, out, _ = run(["quantize", "--map", "duflo", "--expr", "norm2", "--format", "text"])
    assert code == 0
    assert out == "-1/2 Ê1^2 - 1/2 Ê2^2 - 1/2 Ê3^2 + 1/8\n= Δ + 1/8\n"
    code, out, _ = run(["quantize", "--map", "sym", "--expr", "E1*E2", "--format", "text"])
    assert out == "Ê1 Ê2 - 1/2 Ê3\n"


def test_quantize_spin_half():
    code, out, _ = run(["quantize", "--map", "sym", "--expr", "norm2^2", "--rep", "half"])
    doc = json.loads(out)
    assert code == 0 and doc["rep"] == "half"
    diagonal = {"re": "5/64", "im": "0/1"}
    zero = {"re": "0/1", "im": "0/1"}
    assert doc["matrix"] == [[diagonal, zero], [zero, diagonal]]


def test_quantize_non_central_has_no_center():
    code, out, _ = run(["quantize", "--map", "duflo", "--expr", "E1"])
    doc = json.loads(out)
    assert code == 0
    assert doc["center"] is None
    assert doc["input"] == [{"exp": [1, 0, 0], "coeff": {"re": "1/1", "im": "0/1"}}]
    assert doc["terms"] == [{"pbw": [1, 0, 0], "coeff": {"re": "1/1", "im": "0/1"}}]


def test_skein_failing_map():
    code, out, _ = run(["skein", "--map", "duflo", "--order", "6"])
    doc = json.loads(out)
    assert code == 0
    assert doc["passes_kauffman"] is False and doc["A"] is None
    assert doc["product_check"][2] == {"re": "-3/1", "im": "0/1"}


def test_expmap_text_output():
    code, out, _ = run(["expmap", "--map", "npp", "--order", "3", "--format", "text"])
    assert code == 0
    assert out == "[1 - 1/2 u^2 + O(u^3)] 1⊗1\n+ [4 i u + O(u^3)] Σ τ_i⊗τ_i\n"


def test_errors():
    code, out, err = run(["quantize", "--map", "sym", "--expr", "E1 +"])
    assert code == 2 and out == ""
    assert err.startswith("error:") and "position 4" in err
    code, _, err = run(["quantize", "--map", "npp", "--expr", "E1*E2"])
    assert code == 2 and err.startswith("error:")
    assert run(["skein", "--map", "npp", "--order", "3"])[0] == 2
    assert run(["quantize", "--map", "weyl", "--expr", "E1"])[0] == 2
    assert run(["--help"])[0] == 0


def test_verify_suite(tmp_path):
    cache = tmp_path / "results.json"
    assert run(["verify", "--suite", "duflo", "--cache", str(cache)])[0] == 0
    cached = json.loads(cache.read_text())
    assert len(cached) == 6
    assert all(entry["results"]["passed"] for entry in cached)
    assert run(["verify", "--suite", "duflo", "--cache", str(cache)])[0] == 0
    assert len(json.loads(cache.read_text())) == 6


def test_argument_errors_use_the_given_streams():
    code, out, err = run(["quantize", "--map", "weyl", "--expr", "E1"])
    assert code == 2 and out == ""
    assert "invalid choice: 'weyl'" in err
    assert err.startswith("usage:")
    code, out, err = run(["--help"])
    assert code == 0 and err == ""
    assert "quantize" in out and "verify" in out


def test_verify_parallel(tmp_path):
    cache = tmp_path / "results.json"
    assert run(["verify", "--suite", "expmap", "--parallel", "--cache", str(cache)])[0] == 0
    cached = json.loads(cache.read_text())
    assert sorted(entry["params"]["check"] for entry in cached) == [
        "check_basis_consistency", "check_closed_forms", "check_cross_series", "check_kauffman", "check_parity"]
    assert all(len(entry["params"]["maps"]) == 5 for entry in cached)
