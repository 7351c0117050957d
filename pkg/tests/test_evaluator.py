import os
from config import version
from errors import NotRadial
from evaluator import CheckResult, Evaluator
from quantizer import MAP_KINDS
from suites import suites, Suite, DufloSuite, ExpmapSuite, SymmetrizationSuite


def test_evaluate_catches_engine_errors():
    evaluator = Evaluator(version, "demo", "check_raises")

    def check():
        raise NotRadial("outside the radial span")

    result = evaluator.evaluate(check)
    assert not result.passed
    assert result.detail == "NotRadial: outside the radial span"
    assert result.name == "check_raises"
    assert evaluator.evaluate(lambda: (True, "fine")).passed


def test_cache_round_trip(tmp_path):
    cache = str(tmp_path / "nested" / "results.json")
    evaluator = Evaluator(version, "demo", "check_ok")
    assert evaluator.get_cached_result(cache) is None
    evaluator.cache_result(cache, CheckResult(name="check_ok", passed=True, detail="fine", seconds=0.5))
    assert evaluator.get_cached_result(cache) == CheckResult(name="check_ok", passed=True, detail="fine", seconds=0.5)
    assert Evaluator("older", "demo", "check_ok").get_cached_result(cache) is None
    assert evaluator.get_cached_result(None) is None


def test_evaluate_records_unexpected_exceptions():
    def check():
        raise TypeError("'list' object is not callable")

    result = Evaluator(version, "demo", "check_broken").evaluate(check)
    assert not result.passed
    assert result.detail == "TypeError: 'list' object is not callable"


def test_maps_enter_the_cache_key(tmp_path):
    cache = str(tmp_path / "results.json")
    maps = [quantizer.params for quantizer in ExpmapSuite().quantizer_list]
    evaluator = Evaluator(version, "expmap", "check_kauffman", maps)
    assert evaluator.params["maps"][-1] == {"map": "npp", "algebra": "su2"}
    evaluator.cache_result(cache, CheckResult(name="check_kauffman", passed=True))
    assert evaluator.get_cached_result(cache) is not None
    assert Evaluator(version, "expmap", "check_kauffman", maps[:1]).get_cached_result(cache) is None
    assert "maps" not in Evaluator(version, "duflo", "check_structure_constants").params


def test_suite_registry():
    assert list(suites) == ["symmetrization", "duflo", "expmap"]
    assert SymmetrizationSuite().checks == [
        "check_bernoulli_convention", "check_bruteforce_equivalence", "check_ngi_via_gi", "check_spinhalf_invariants"]
    assert DufloSuite().checks == [
        "check_diffop_closed_form", "check_even_power_spinhalf", "check_invariant_isomorphism",
        "check_laplacian_eigenvalues", "check_odd_power_spinhalf", "check_structure_constants"]
    assert ExpmapSuite().checks == [
        "check_basis_consistency", "check_closed_forms", "check_cross_series", "check_kauffman", "check_parity"]
    assert [quantizer.kind for quantizer in ExpmapSuite().quantizer_list] == list(MAP_KINDS)
    assert DufloSuite().quantizer_list == []


class RaisingSuite(Suite):
    name = "flaky"

    # a plain attribute that shares the check_ prefix
    check_threshold = 3

    def check_b_raises(self) -> tuple[bool, str]:
        raise ValueError("bad input")

    def check_c_passes(self) -> tuple[bool, str]:
        return True, "fine"


class FlakySuite(RaisingSuite):
    def check_a_exits(self) -> tuple[bool, str]:
        os._exit(1)


def test_failing_checks_are_reported_serially():
    suite = RaisingSuite(cache_path=None)
    assert suite.checks == ["check_b_raises", "check_c_passes"]
    assert not suite.run()


def test_dead_worker_does_not_hang_the_run(capsys):
    suite = FlakySuite(parallel=True, cache_path=None)
    assert suite.parallel
    assert not suite.run()
    err = capsys.readouterr().err
    assert "[FAIL] flaky.check_a_exits" in err
    assert "worker exited without reporting a result" in err
    assert "[FAIL] flaky.check_b_raises" in err
    assert "ValueError: bad input" in err
    assert "[PASS] flaky.check_c_passes" in err


def test_duflo_suite_passes_in_parallel():
    assert DufloSuite(parallel=True, cache_path=None).run()



def test_expmap_suite_passes():
    assert ExpmapSuite(cache_path=None).run()


def test_symmetrization_suite_passes():
    assert SymmetrizationSuite(cache_path=None).run()
