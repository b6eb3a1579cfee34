"""Parallel evaluation of independent sweep points."""

import multiprocessing as mp
import queue
import time
import traceback
from typing import Any, Callable, Optional, Sequence

from jchsim.log import get_logger

from .types import SweepConfig, SweepMetrics

log = get_logger(__name__)


class SweepEngine:
    """
    Evaluate a function over sweep points, in worker processes when asked.

    Results always come back in input order, whatever order the workers
    finish in. The function and its points must be picklable.
    """

    def __init__(self, config: Optional[SweepConfig] = None):
        """
        Initialize sweep engine.

        Args:
            config: Worker count and timeout; one in-process worker by default
        """
        self.config = config or SweepConfig()
        self.last_metrics: Optional[SweepMetrics] = None

    def map(self, func: Callable[[Any], Any], items: Sequence[Any]) -> list[Any]:
        """
        Apply func to every item.

        Args:
            func: Top-level function of one argument
            items: Sweep points

        Returns:
            Results in the order of items

        Raises:
            RuntimeError: If a worker fails
            TimeoutError: If the timeout is exceeded
        """
        items = list(items)
        workers = min(self.config.jobs, len(items))
        start_time = time.perf_counter()
        log.debug("engine.dispatch", jobs=workers, items=len(items))

        if workers <= 1:
            results = [func(item) for item in items]
        else:
            results = self._map_multi_process(func, items, workers)

        self.last_metrics = SweepMetrics(
            items=len(items),
            elapsed_seconds=time.perf_counter() - start_time,
            workers_used=max(workers, 1),
        )
        return results

    def _map_multi_process(
        self, func: Callable[[Any], Any], items: list[Any], workers: int
    ) -> list[Any]:
        """Round-robin the points over worker processes and gather by index."""
        result_queue: mp.Queue = mp.Queue()
        processes = []
        for worker_id in range(workers):
            indices = list(range(worker_id, len(items), workers))
            p = mp.Process(
                target=_worker_process,
                args=(func, [(i, items[i]) for i in indices], result_queue),
            )
            p.start()
            processes.append(p)

        results: dict[int, Any] = {}
        try:
            while len(results) < len(items):
                try:
                    message = result_queue.get(timeout=self.config.timeout_seconds)
                except queue.Empty:
                    raise TimeoutError(
                        f"sweep timed out after {len(results)} of {len(items)} points"
                    ) from None
                if message["status"] == "error":
                    raise RuntimeError(
                        f"sweep point {message['index']} failed:\n{message['error']}"
                    )
                results[message["index"]] = message["result"]
        finally:
            for p in processes:
                p.join(timeout=1.0)
                if p.is_alive():
                    p.terminate()

        return [results[i] for i in range(len(items))]


def _worker_process(
    func: Callable[[Any], Any],
    indexed_items: list[tuple[int, Any]],
    result_queue: mp.Queue,
) -> None:
    """
    Worker process for parallel sweeps.

    Each worker evaluates its share of points and reports each one; the
    first failure is reported and ends the worker.
    """
    for index, item in indexed_items:
        try:
            result = func(item)
        except Exception:
            result_queue.put({"status": "error", "index": index, "error": traceback.format_exc()})
            return
        result_queue.put({"status": "ok", "index": index, "result": result})
