"""Micro-batching worker: concurrent requests share model forward passes."""
from __future__ import annotations

import queue
import threading
from concurrent.futures import Future
from typing import Callable

_STOP = object()


class BatchWorker:
    """Runs a batch function on a single worker thread.

    Callers submit one item each and receive a Future. The worker drains
    whatever is queued (up to max_batch_size) into one call, so batching is
    invisible to clients and never delays a lone request.
    """

    def __init__(self, fn: Callable[[list[str]], list[str]], max_batch_size: int):
        if max_batch_size < 1:
            raise ValueError("max_batch_size must be at least 1")
        self.fn = fn
        self.max_batch_size = max_batch_size
        self._queue: queue.Queue = queue.Queue()
        self._thread = threading.Thread(target=self._run, daemon=True)
        self._thread.start()

    def submit(self, item: str) -> "Future[str]":
        future: Future = Future()
        self._queue.put((item, future))
        return future

    def stop(self) -> None:
        self._queue.put(_STOP)
        self._thread.join(timeout=10)

    def _run(self) -> None:
        while True:
            first = self._queue.get()
            if first is _STOP:
                return
            batch = [first]
            while len(batch) < self.max_batch_size:
                try:
                    item = self._queue.get_nowait()
                except queue.Empty:
                    break
                if item is _STOP:
                    self._flush(batch)
                    return
                batch.append(item)
            self._flush(batch)

    def _flush(self, batch: list[tuple[str, Future]]) -> None:
        items = [item for item, _ in batch]
        try:
            results = self.fn(items)
            if len(results) != len(items):
                raise RuntimeError(
                    f"batch function returned {len(results)} results for "
                    f"{len(items)} items"
                )
        except Exception as exc:
            for _, future in batch:
                if not future.cancelled():
                    future.set_exception(exc)
            return
        for (_, future), result in zip(batch, results):
            # the caller may have cancelled after a client-side timeout
            if not future.cancelled():
                future.set_result(result)
