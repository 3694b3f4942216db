import time
from contextlib import contextmanager
from typing import Iterator, List, Tuple


def chunk_range(total: int, parts: int) -> List[Tuple[int, int]]:
    """Split range(total) into at most `parts` contiguous half-open ranges."""
    parts = max(1, min(parts, total)) if total else 1
    size, extra = divmod(total, parts)
    ranges = []
    start = 0
    for index in range(parts):
        stop = start + size + (1 if index < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def format_duration(seconds: float) -> str:
    """Format a duration in a human-readable way."""
    if seconds < 1.0:
        return f"{seconds * 1000:.1f}ms"
    return f"{seconds:.2f}s"


@contextmanager
def stopwatch() -> Iterator[List[float]]:
    """Yield a one-element list that holds the elapsed seconds on exit."""
    elapsed = [0.0]
    start = time.perf_counter()
    try:
        yield elapsed
    finally:
        elapsed[0] = time.perf_counter() - start
