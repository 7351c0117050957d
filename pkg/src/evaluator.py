import os
import json
import time
from typing import Callable, Optional, Any
from functools import cached_property
from dataclasses import dataclass, asdict


@dataclass
class CheckResult:
    name: str = ""
    passed: bool = False
    detail: str = ""
    seconds: float = 0.0


class Evaluator:
    def __init__(self, version: str, suite_name: str, check_name: str, maps: Optional[list[dict[str, Any]]] = None):
        self.version = version
        self.suite_name = suite_name
        self.check_name = check_name
        self.maps = maps or []

    @cached_property
    def params(self) -> dict[str, Any]:
        res: dict[str, Any] = {}
        res["version"] = self.version
        res["suite"] = self.suite_name
        res["check"] = self.check_name
        if self.maps:
            res["maps"] = self.maps
        return res

    # A check returns (passed, detail)
    def evaluate(self, check: Callable[[], tuple[bool, str]]) -> CheckResult:
        start = time.perf_counter()
        try:
            passed, detail = check()
        except Exception as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        return CheckResult(name=self.check_name, passed=passed, detail=detail, seconds=time.perf_counter() - start)

    def get_cached_result(self, cache_file: Optional[str]) -> Optional[CheckResult]:
        if cache_file is None or not os.path.exists(cache_file):
            return None
        with open(cache_file, "r") as f:
            cached_results = json.load(f)
            for entry in cached_results:
                if entry["params"] == self.params:
                    return CheckResult(**entry["results"])
        return None

    def cache_result(self, cache_file: Optional[str], result: CheckResult):
        if cache_file is None:
            return
        if os.path.exists(cache_file):
            with open(cache_file, "r") as f:
                cached_results = json.load(f)
        else:
            os.makedirs(os.path.dirname(cache_file) or ".", exist_ok=True)
            cached_results = []
        cached_results.append({
            "params": self.params,
            "results": asdict(result),
        })
        with open(cache_file, "w") as f:
            json.dump(cached_results, f, indent=4, separators=(", ", ": "))
