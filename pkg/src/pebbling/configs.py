"""Configurations and their size / support / reduced-size calculus.

A configuration on a graph with n vertices is a plain tuple of n
non-negative pebble counts, which keeps them hashable for memoized search.
"""

from __future__ import annotations

import json
from typing import Iterator

from .errors import PebblingError

Config = tuple[int, ...]


def size(c: Config) -> int:
    return sum(c)


def support(c: Config) -> tuple[int, ...]:
    return tuple(v for v, x in enumerate(c) if x)


def support_count(c: Config) -> int:
    return sum(1 for x in c if x)


def is_subconfig(c1: Config, c2: Config) -> bool:
    return all(a <= b for a, b in zip(c1, c2, strict=True))


def add(c1: Config, c2: Config) -> Config:
    return tuple(a + b for a, b in zip(c1, c2, strict=True))


def subtract(c1: Config, c2: Config) -> Config:
    if not is_subconfig(c2, c1):
        raise PebblingError("subtrahend is not a subconfiguration")
    return tuple(a - b for a, b in zip(c1, c2, strict=True))


def reduced_size(c: Config, k: int) -> int:
    """k-reduced size |c| - (k-1)(s#(c) - 1).

    Applied literally: the empty configuration gets k - 1, which is not an
    extractable pebble count, so callers must special-case s# = 0.
    """
    if k < 1:
        raise PebblingError("k must be >= 1")
    return size(c) - (k - 1) * (support_count(c) - 1)


def extract_blocks(c: Config, k: int, n: int) -> tuple[dict[int, int], Config]:
    """Extract n blocks of k pebbles, greedily from the lowest-id vertex
    holding at least k.  Requires the reduced-size bound r_k(c) >= n*k."""
    if k < 1 or n < 0:
        raise PebblingError("need k >= 1 and n >= 0")
    if reduced_size(c, k) < n * k:
        raise PebblingError(
            f"insufficient reduced size: r_{k}(c)={reduced_size(c, k)} < {n * k}"
        )
    counts = list(c)
    extraction: dict[int, int] = {}
    for _ in range(n):
        v = next(i for i, x in enumerate(counts) if x >= k)
        counts[v] -= k
        extraction[v] = extraction.get(v, 0) + 1
    return extraction, tuple(counts)


def extract_single_block(c: Config, k: int, n: int) -> tuple[int, Config]:
    """Remove one block of n <= k pebbles from a single vertex; the residual
    keeps reduced size at least r_k(c) - n."""
    if n > k:
        raise PebblingError("block size n must not exceed k")
    if reduced_size(c, k) < n:
        raise PebblingError(
            f"insufficient reduced size: r_{k}(c)={reduced_size(c, k)} < {n}"
        )
    v = next(i for i, x in enumerate(c) if x >= n)
    counts = list(c)
    counts[v] -= n
    return v, tuple(counts)


def enumerate_configs(vertex_count: int, total: int) -> Iterator[Config]:
    """All configurations of the exact given size, lexicographically
    ascending; yields C(total + n - 1, n - 1) items."""
    if vertex_count < 1 or total < 0:
        raise PebblingError("need vertex_count >= 1 and size >= 0")

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            yield tuple(prefix) + (remaining,)
            return
        for x in range(remaining + 1):
            prefix.append(x)
            yield from rec(prefix, remaining - x, slots - 1)
            prefix.pop()

    yield from rec([], total, vertex_count)


def enumerate_configs_with_support(
    vertex_count: int, total: int, support_size: int
) -> Iterator[Config]:
    """Configurations of the exact size whose support has exactly the given
    number of vertices."""
    if support_size > vertex_count or (support_size == 0) != (total == 0):
        return
    if support_size == 0:
        yield (0,) * vertex_count
        return
    if total < support_size:
        return

    def rec(prefix: list[int], remaining: int, slots: int, occupied: int):
        need = support_size - occupied
        if need < 0:
            return
        if slots == 1:
            if (remaining > 0) == (need == 1) and need <= 1:
                yield tuple(prefix) + (remaining,)
            return
        if need > slots or remaining < need:
            return
        choices = range(remaining + 1) if need < slots else range(1, remaining + 1)
        for x in choices:
            prefix.append(x)
            yield from rec(prefix, remaining - x, slots - 1, occupied + (x > 0))
            prefix.pop()

    yield from rec([], total, vertex_count, 0)


def config_from_pairs(vertex_count: int, pairs) -> Config:
    counts = [0] * vertex_count
    for v, x in pairs:
        if not 0 <= v < vertex_count:
            raise PebblingError(f"vertex {v} out of range")
        if x < 0:
            raise PebblingError("pebble counts must be non-negative")
        counts[v] += x
    return tuple(counts)


def config_from_text(text: str, vertex_count: int) -> Config:
    """Parse `pebbles <vertex> <count>` lines; omitted vertices are zero."""
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "pebbles" or len(parts) != 3:
            raise PebblingError(f"unrecognized configuration line: {raw!r}")
        pairs.append((int(parts[1]), int(parts[2])))
    return config_from_pairs(vertex_count, pairs)


def config_to_text(c: Config) -> str:
    lines = [f"pebbles {v} {x}" for v, x in enumerate(c) if x]
    return "\n".join(lines) + ("\n" if lines else "")


def config_from_json(text: str, vertex_count: int) -> Config:
    values = json.loads(text)
    if not isinstance(values, list) or len(values) != vertex_count:
        raise PebblingError("JSON configuration must be a list of length n")
    if any(not isinstance(x, int) or x < 0 for x in values):
        raise PebblingError("pebble counts must be non-negative integers")
    return tuple(values)
