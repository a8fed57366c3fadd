"""
Computation Monitor

This module provides a decorator to monitor long-running exact computations:
expansions, oracle evaluations and verification checks.
"""
import os
import logging
import inspect
import tracemalloc
import time
from functools import wraps
from typing import Any, Callable, Iterable, TypeVar

from src.constant import LOGS_DIR

F = TypeVar("F", bound=Callable[..., Any])


def _file_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(f"tauforge.monitor.{name}")
    logger.setLevel(logging.INFO)
    logger.propagate = False
    if not logger.hasHandlers():
        os.makedirs(LOGS_DIR, exist_ok=True)
        handler = logging.FileHandler(os.path.join(LOGS_DIR, f"{name}.log"), delay=True)
        formatter = logging.Formatter(
            '%(asctime)s | %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


def computation_monitor(
    func: F | None = None,
    *,
    logged_args: Iterable[str] = (),
    size: Callable[[Any], int] | None = None,
):
    """
    Decorator to monitor a computation.

    The wrapped function keeps a `last_stats` dict with the elapsed wall time, the peak
    traced memory and, when `size` is given, a size figure of the result (terms, chains...).
    One line per call goes to `LOGS_DIR/<function name>.log`.

    Args:
        func: The function to wrap (when used without arguments).
        logged_args: Names of arguments whose values are written to the log line.
        size: Optional callable mapping the result to an integer size.

    Example:
        ```python
        @computation_monitor(logged_args=("spec",), size=lambda tau: len(tau.series))
        def expand_tau(spec): ...
        ```
    """
    logged = tuple(logged_args)

    def decorate(inner: F) -> F:
        logger = _file_logger(inner.__name__)
        sig = inspect.signature(inner)

        @wraps(inner)
        def wrapper(*args, **kwargs):
            bound_args = sig.bind(*args, **kwargs)
            bound_args.apply_defaults()

            already_tracing = tracemalloc.is_tracing()
            if not already_tracing:
                tracemalloc.start()
            start_time = time.perf_counter()
            try:
                result = inner(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start_time
                _, peak = tracemalloc.get_traced_memory()
                if not already_tracing:
                    tracemalloc.stop()

            stats = {"elapsed": elapsed, "memory_peak": peak}
            if size is not None:
                stats["size"] = size(result)
            wrapper.last_stats = stats

            shown = ", ".join(
                f"{name}={bound_args.arguments.get(name)!r}" for name in logged
            )
            logger.info(
                "%s(%s) took %.3fs, peak %d B%s",
                inner.__name__, shown, elapsed, peak,
                f", size {stats['size']}" if "size" in stats else "",
            )
            return result

        wrapper.last_stats = {}
        return wrapper  # type: ignore[return-value]

    if func is not None:
        return decorate(func)
    return decorate
