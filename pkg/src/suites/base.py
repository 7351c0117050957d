import abc
import sys
from tqdm import tqdm
from functools import cached_property
from quantizer import Quantizer
from evaluator import Evaluator, CheckResult
from config import version, cache_file, num_workers
from multiprocessing import queues, Queue, Lock, Process


class Suite(abc.ABC):
    name = "suite"

    def __init__(self, parallel: bool = False, verbose: bool = False, cache_path: str | None = cache_file):
        self.verbose = verbose
        self.cache_path = cache_path
        self.parallel = parallel and len(self.checks) > 1 and num_workers > 1

    # Names of the check_* methods to run, in report order
    @cached_property
    def checks(self) -> list[str]:
        return sorted(name for name in dir(type(self))
                      if name.startswith("check_") and callable(getattr(type(self), name)))

    # Quantizers the checks iterate over; their params become part of the cache key
    @cached_property
    def quantizer_list(self) -> list[Quantizer]:
        return []

    def process_result(self, results: list[CheckResult]) -> bool:
        for result in results:
            status = "PASS" if result.passed else "FAIL"
            print(f"[{status}] {self.name}.{result.name} ({result.seconds:.2f}s)", file=sys.stderr)
            if self.verbose or not result.passed:
                print(f"  {result.detail}", file=sys.stderr)
        return all(result.passed for result in results)

    def _run_single_check(self, worker_id: int, task_queue: Queue, result_queue: Queue, file_lock: Lock):
        idx, check_name = task_queue.get(timeout=1)
        if self.verbose:
            print(f"Running {self.name}.{check_name} on worker #{worker_id+1}...", file=sys.stderr)
        maps = [quantizer.params for quantizer in self.quantizer_list]
        evaluator = Evaluator(version, self.name, check_name, maps)
        with file_lock:
            result = evaluator.get_cached_result(self.cache_path)
        if result is None:
            result = evaluator.evaluate(getattr(self, check_name))
            if result.passed:
                with file_lock:
                    evaluator.cache_result(self.cache_path, result)
        result_queue.put((idx, result))

    def _worker(self, worker_id: int, task_queue: Queue, result_queue: Queue, file_lock: Lock):
        while True:
            try:
                self._run_single_check(worker_id, task_queue, result_queue, file_lock)
            except queues.Empty:
                break

    def _collect(self, result_queue: Queue, process_list: list[Process]) -> dict[int, CheckResult]:
        collected: dict[int, CheckResult] = {}
        with tqdm(total=len(self.checks), desc=self.name, disable=not self.verbose) as progress:
            while len(collected) < len(self.checks):
                # sampled before the get: a worker that already exited has flushed its results
                alive = any(process.is_alive() for process in process_list)
                try:
                    idx, result = result_queue.get(timeout=1)
                except queues.Empty:
                    if not alive:
                        break
                    continue
                collected[idx] = result
                progress.update(1)
        return collected

    def run(self) -> bool:
        file_lock = Lock()
        task_queue, result_queue = Queue(), Queue()
        for idx, check_name in enumerate(self.checks):
            task_queue.put((idx, check_name))

        process_list: list[Process] = []
        if self.parallel:
            for worker_id in range(min(num_workers, len(self.checks))):
                process = Process(target=self._worker, args=(worker_id, task_queue, result_queue, file_lock))
                process_list.append(process)
                process.start()
        else:
            self._worker(0, task_queue, result_queue, file_lock)
        collected = self._collect(result_queue, process_list)
        for process in process_list:
            process.join()
        results = [collected.get(idx, CheckResult(name=check_name, detail="worker exited without reporting a result"))
                   for idx, check_name in enumerate(self.checks)]
        return self.process_result(results)
