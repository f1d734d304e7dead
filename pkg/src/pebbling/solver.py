"""Exact pebbling semantics: step application, solvability, pebbling
numbers, the 2-pebbling property, tau-verification and optimal pebbling.

Solvability is decided by depth-first search over the configuration graph
with a per-call memo of failed configurations; termination holds because
every step strictly decreases the total pebble count.  Two cheap bounds
avoid most searches:

* sufficient: vertices can independently deliver floor(c(v)/cost(v))
  pebbles to the target, where cost(v) is the cheapest product of edge
  weights along a path to the target;
* necessary: the fractional potential sum(c(v)/cost(v)) never increases
  under a pebbling step, so a configuration with potential below n is not
  n-fold solvable.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import configs
from .configs import Config, enumerate_configs, reduced_size, support_count
from .errors import PebblingError, SearchCapExceeded
from .graphs import Graph

Step = tuple[int, int]


@dataclass(frozen=True)
class SolveResult:
    solvable: bool
    witness: tuple[Step, ...] | None = None
    final: Config | None = None

    def __bool__(self) -> bool:
        return self.solvable


def apply_step(g: Graph, c: Config, u: int, v: int) -> Config:
    """Fire edge (u, v): remove its weight from u, add one pebble at v."""
    w = g.weight(u, v)
    if c[u] < w:
        raise PebblingError(f"vertex {u} has {c[u]} pebbles, step needs {w}")
    out = list(c)
    out[u] -= w
    out[v] += 1
    return tuple(out)


def replay(g: Graph, c: Config, steps) -> Config:
    for u, v in steps:
        c = apply_step(g, c, u, v)
    return c


def _deliverable(g: Graph, c: Config, t: int) -> int:
    """Lower bound for pebbles movable to t: independent greedy delivery."""
    cost = g.cost_to(t)
    total = 0
    for v, x in enumerate(c):
        if x and cost[v] is not None:
            total += x // cost[v]
    return total


def _potential(g: Graph, c: Config, t: int) -> Fraction:
    """Upper bound: sum c(v)/cost(v), non-increasing under pebbling steps."""
    cost = g.cost_to(t)
    total = Fraction(0)
    for v, x in enumerate(c):
        if x:
            if cost[v] is None:
                continue
            total += Fraction(x, cost[v])
    return total


def solvable_quick(g: Graph, c: Config, t: int, n: int) -> bool | None:
    """Fast decision when the bounds are conclusive, else None."""
    if c[t] >= n:
        return True
    if _deliverable(g, c, t) >= n:
        return True
    if _potential(g, c, t) < n:
        return False
    return None


def is_solvable(g: Graph, c: Config, t: int, n: int) -> SolveResult:
    """Complete decision of n-fold t-solvability with a replayable witness.

    Steps are explored in (from, to) sorted edge order, so the first
    witness found is deterministic.
    """
    if n < 0 or not 0 <= t < g.vertex_count:
        raise PebblingError("need n >= 0 and a valid target vertex")
    if c[t] >= n:
        return SolveResult(True, (), c)
    if _potential(g, c, t) < n:
        return SolveResult(False)
    edges = g.edges
    cost = g.cost_to(t)
    failed: set[Config] = set()

    def search(conf: Config):
        # Sufficient bound: finish greedily along cheapest paths.
        if conf[t] >= n:
            return (), conf
        for u, v, w in edges:
            if conf[u] >= w:
                nxt = list(conf)
                nxt[u] -= w
                nxt[v] += 1
                nxt = tuple(nxt)
                if nxt in failed:
                    continue
                # Potential prune before descending.
                pot = Fraction(0)
                ok = True
                for x, cv in zip(nxt, cost):
                    if x:
                        if cv is not None:
                            pot += Fraction(x, cv)
                if pot < n:
                    ok = False
                if ok:
                    sub = search(nxt)
                    if sub is not None:
                        steps, final = sub
                        return ((u, v),) + steps, final
                failed.add(nxt)
        return None

    # Greedy witness fast path: deliver from single vertices along cheapest
    # paths, which also yields a legal witness.
    if _deliverable(g, c, t) >= n:
        steps = _greedy_witness(g, c, t, n)
        if steps is not None:
            return SolveResult(True, steps, replay(g, c, steps))
    hit = search(c)
    if hit is None:
        return SolveResult(False)
    steps, final = hit
    return SolveResult(True, steps, final)


def _cheapest_path(g: Graph, v: int, t: int) -> list[Step] | None:
    """Edge list of a minimum-cost directed path from v to t."""
    cost = g.cost_to(t)
    if cost[v] is None:
        return None
    path = []
    while v != t:
        nxt = min(
            ((w * cost[y], y) for _, y, w in g.out_edges[v] if cost[y] is not None),
            default=None,
        )
        if nxt is None or nxt[0] != cost[v]:
            # Tie-broken walk failed (should not happen on exact costs).
            return None
        path.append((v, nxt[1]))
        v = nxt[1]
    return path


def _greedy_witness(g: Graph, c: Config, t: int, n: int):
    cost = g.cost_to(t)
    work = list(c)
    steps: list[Step] = []
    for v in sorted(range(g.vertex_count), key=lambda v: (cost[v] or 0, v)):
        if work[t] >= n:
            break
        if v == t or not work[v] or cost[v] is None:
            continue
        path = _cheapest_path(g, v, t)
        if path is None:
            continue
        k = work[v] // cost[v]
        if k == 0:
            continue
        # Move k pebbles from v to t along the cheapest path, batch by batch.
        carry = k * cost[v]
        work[v] -= carry
        cur = v
        for u, x in path:
            w = g.weight(u, x)
            moves = carry // w
            steps.extend([(u, x)] * moves)
            carry = moves
            cur = x
        work[t] += carry
    if work[t] >= n:
        return tuple(steps)
    return None


@dataclass(frozen=True)
class PebblingNumber:
    value: int
    witness_unsolvable: Config | None


def _singleton_witness(g: Graph, t: int, n: int, p: int) -> Config | None:
    """Unsolvable size-p configuration from singletons off t plus up to
    n-1 pebbles on t; exists whenever p <= #V + n - 2."""
    others = g.vertex_count - 1
    on_t = min(n - 1, p)
    rest = p - on_t
    if rest > others:
        return None
    counts = [0] * g.vertex_count
    counts[t] = on_t
    placed = 0
    for v in range(g.vertex_count):
        if v != t and placed < rest:
            counts[v] = 1
            placed += 1
    return tuple(counts)


def _structured_witness(g: Graph, t: int, n: int, p: int) -> Config | None:
    """Cheap scan of classically extremal shapes: all configurations with
    support at most two, and singleton paddings of concentrated stacks."""
    nv = g.vertex_count
    for v in range(nv):
        counts = [0] * nv
        counts[v] = p
        c = tuple(counts)
        if solvable_quick(g, c, t, n) is False:
            return c
        if solvable_quick(g, c, t, n) is None and not is_solvable(g, c, t, n):
            return c
    for v in range(nv):
        for u in range(v + 1, nv):
            for a in range(1, p):
                counts = [0] * nv
                counts[v] = a
                counts[u] = p - a
                c = tuple(counts)
                quick = solvable_quick(g, c, t, n)
                if quick is False:
                    return c
                if quick is None and not is_solvable(g, c, t, n):
                    return c
    return None


def _scan_chunk(args):
    g, t, n, p, first = args
    nv = g.vertex_count
    best = None
    for rest in enumerate_configs(nv - 1, p - first):
        c = (first,) + rest
        quick = solvable_quick(g, c, t, n)
        if quick is True:
            continue
        if quick is False or not is_solvable(g, c, t, n):
            best = c
            break
    return best


def find_unsolvable(g: Graph, t: int, n: int, p: int, jobs: int = 1) -> Config | None:
    """Some size-p configuration that is not n-fold t-solvable, or None.

    Deterministic regardless of the worker count: when the structured
    pre-pass misses, the lexicographically smallest witness of the full
    scan is returned.
    """
    w = _singleton_witness(g, t, n, p)
    if w is not None:
        return w
    w = _structured_witness(g, t, n, p)
    if w is not None:
        return w
    chunks = [(g, t, n, p, first) for first in range(p + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for hit in pool.map(_scan_chunk, chunks):
                if hit is not None:
                    return hit
        return None
    for chunk in chunks:
        hit = _scan_chunk(chunk)
        if hit is not None:
            return hit
    return None


def _size_cap(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("PEBBLE_SIZE_CAP")
    return int(env) if env else 10_000


def pebbling_number(
    g: Graph, t: int, n: int = 1, jobs: int = 1, size_cap: int | None = None
) -> PebblingNumber:
    """Smallest p such that every size-p configuration is n-fold
    t-solvable, with a size-(p-1) unsolvable witness.

    Solvability is monotone in the configuration, so checking size exactly
    p suffices for all larger sizes.
    """
    if n < 1:
        raise PebblingError("need n >= 1")
    cost = g.cost_to(t)
    if any(cv is None for cv in cost):
        raise PebblingError(f"target {t} is not reachable from every vertex")
    cap = _size_cap(size_cap)
    # Singleton witnesses cover all sizes up to #V + n - 2.
    p = g.vertex_count + n - 1
    witness = _singleton_witness(g, t, n, p - 1)
    if g.vertex_count == 1:
        return PebblingNumber(n, (n - 1,) if n > 1 else ((0,) if n == 1 else None))
    while True:
        if p > cap:
            raise SearchCapExceeded(f"pebbling number search passed cap {cap}")
        hit = find_unsolvable(g, t, n, p, jobs=jobs)
        if hit is None:
            return PebblingNumber(p, witness)
        witness = hit
        p += 1


def pebbling_number_graph(g: Graph, jobs: int = 1, size_cap: int | None = None) -> int:
    """pi(G): the largest 1-fold pebbling number over all targets."""
    return max(
        pebbling_number(g, t, 1, jobs=jobs, size_cap=size_cap).value
        for t in range(g.vertex_count)
    )


def unsolvable_witness(g: Graph, t: int, p: int) -> Config | None:
    """A size-p configuration that is not t-solvable, or None."""
    return find_unsolvable(g, t, 1, p)


def _odd_count(c: Config) -> int:
    return sum(1 for x in c if x % 2 == 1)


def has_2pp(g: Graph, pi: int, variant: str = "support", jobs: int = 1):
    """Check the 2-pebbling property.

    ``variant`` selects how q is counted: ``support`` (vertices with at
    least one pebble) or ``odd`` (vertices with an odd count).  All
    configurations with size in [2*pi - q + 1, pi2_max) are checked, where
    pi2_max is the largest brute-forced 2-fold pebbling number; larger
    configurations are 2-solvable regardless.
    """
    if variant not in ("support", "odd"):
        raise PebblingError(f"unknown 2PP variant {variant!r}")
    count_q = support_count if variant == "support" else _odd_count
    nv = g.vertex_count
    if nv == 1:
        return True, None
    pi2_max = max(
        pebbling_number(g, t, 2, jobs=jobs).value for t in range(nv)
    )
    lo = max(2 * pi - nv + 1, 0)
    for s in range(lo, pi2_max):
        for c in enumerate_configs(nv, s):
            q = count_q(c)
            if s < 2 * pi - q + 1:
                continue
            for t in range(nv):
                quick = solvable_quick(g, c, t, 2)
                if quick is True:
                    continue
                if quick is False or not is_solvable(g, c, t, 2):
                    return False, (c, t)
    return True, None


def _tau_subconfig_exists(
    g: Graph, c: Config, t: int, n: int, k: int, m: int, memo: dict, node_cap: int
) -> bool:
    """Is there c* within c, n-fold t-solvable, with r_k(c - c*) >= m?"""
    total = sum(c)
    cost = g.cost_to(t)

    def residual_ok(cstar: Config) -> bool:
        rest = tuple(a - b for a, b in zip(c, cstar))
        supp = support_count(rest)
        return (total - sum(cstar)) - (k - 1) * (supp - 1) >= m

    # Fast path: n*cost(v) pebbles taken from one vertex, optionally with
    # the target's own pebbles counted first.
    need_t = min(c[t], n)
    if need_t == n:
        cstar = tuple(need_t if v == t else 0 for v in range(g.vertex_count))
        if residual_ok(cstar):
            return True
    for v in range(g.vertex_count):
        if v == t or cost[v] is None:
            continue
        need = (n - need_t) * cost[v]
        for use_t in (need_t, 0):
            amount = (n - use_t) * cost[v]
            if c[v] >= amount:
                cstar = tuple(
                    amount if u == v else (use_t if u == t else 0)
                    for u in range(g.vertex_count)
                )
                if residual_ok(cstar):
                    return True
    # Complete fallback: search the subconfiguration lattice.
    nodes = 0

    def rec(idx: int, prefix: list[int]):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise SearchCapExceeded("tau subconfiguration search cap exceeded")
        if idx == g.vertex_count:
            cstar = tuple(prefix)
            if not residual_ok(cstar):
                return False
            key = cstar
            if key not in memo:
                memo[key] = bool(is_solvable(g, cstar, t, n))
            return memo[key]
        for x in range(c[idx], -1, -1):
            prefix.append(x)
            if rec(idx + 1, prefix):
                prefix.pop()
                return True
            prefix.pop()
        return False

    return rec(0, [])


def verify_tau(
    g: Graph,
    t: int,
    n: int,
    k: int,
    p: int,
    m_max: int,
    node_cap: int = 2_000_000,
) -> bool:
    """Bounded check that tau_{n,k}(G, t) <= p: for every m <= m_max and
    every configuration c with |c| = p - s#(c) + 1 + m there must be an
    n-fold t-solvable subconfiguration whose residual keeps k-reduced size
    at least m.  A True result certifies the bound up to m_max only."""
    if m_max < 0 or k < 1 or n < 0:
        raise PebblingError("need m_max >= 0, k >= 1, n >= 0")
    nv = g.vertex_count
    memo: dict = {}
    for m in range(m_max + 1):
        for q in range(0, nv + 1):
            s = p - q + 1 + m
            if s < 0:
                continue
            for c in configs.enumerate_configs_with_support(nv, s, q):
                if not _tau_subconfig_exists(g, c, t, n, k, m, memo, node_cap):
                    return False
    return True


def optimal_pebbling_number(g: Graph, size_cap: int | None = None):
    """Smallest configuration size solvable for every target, with one
    such configuration as witness."""
    cap = _size_cap(size_cap)
    targets = range(g.vertex_count)
    for s in range(0, cap + 1):
        for c in enumerate_configs(g.vertex_count, s):
            if all(
                solvable_quick(g, c, t, 1) is True or is_solvable(g, c, t, 1)
                for t in targets
            ):
                return s, c
    raise SearchCapExceeded(f"optimal pebbling search passed cap {cap}")
