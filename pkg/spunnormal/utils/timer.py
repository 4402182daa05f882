#!/usr/bin/env python
# -*- encoding: utf-8 -*-
import time
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional, Tuple


class Timer:
    """Wall-clock timer of one pipeline stage; every measured interval is appended to its history."""

    def __init__(self):
        self._start_time: Optional[float] = None
        self._history: List[float] = []

    @property
    def history(self) -> Tuple[float, ...]:
        return tuple(self._history)

    def start(self):
        self._start_time = time.perf_counter()

    def stop(self) -> float:
        """Ends the running interval and records it.

        :return: The interval in seconds
        :rtype: float
        """
        assert self._start_time is not None, 'timer stopped before it was started'
        elapsed = time.perf_counter() - self._start_time
        self._history.append(elapsed)
        self._start_time = None
        return elapsed

    def get_history_sum(self) -> float:
        return sum(self._history)

    def reset(self):
        self._start_time = None
        self._history = []


class MultiTimer:
    """One :class:`Timer` per stage name, created on first use. A timer built with ``on=False``
    measures nothing, so commands can keep their ``with timer.stage(...)`` blocks unconditionally.

    :param on: Whether the stages are timed, defaults to True
    :type on: bool, optional
    """

    def __init__(self, on: bool = True):
        self._on = on
        self._timers: Dict[str, Timer] = dict()

    def start(self, name: str):
        if self._on:
            self._timers.setdefault(name, Timer()).start()

    def stop(self, name: str) -> Optional[float]:
        return self._timers[name].stop() if self._on else None

    @contextmanager
    def stage(self, name: str, logger=None):
        """Times the body of a ``with`` block and reports it at DEBUG level on ``logger``."""
        self.start(name)
        try:
            yield
        finally:
            elapsed = self.stop(name)
            if logger is not None and elapsed is not None:
                logger.debug(f'took {elapsed:.3f}s', stage=name)

    def get_timer(self, name: str) -> Timer:
        return self._timers[name]

    def reset(self, name: Optional[str] = None):
        """Clears the history of ``name``, or of every stage when ``name`` is None."""
        for key, timer in self._timers.items():
            if name is None or key == name:
                timer.reset()

    def __iter__(self) -> Iterator[Tuple[str, Timer]]:
        return iter(list(self._timers.items()))
