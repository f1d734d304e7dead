"""Pebble flows: per-edge step counts abstracted away from step order.

A flow pairs a configuration with a count per edge.  Its excess
``x(v) = c(v) + in(v) - out*(v)`` (where out* weighs each outgoing count by
the edge weight) is exactly the pebble count at v after firing all counted
steps, independent of order.  A feasible flow (x >= 0 everywhere) can
always be turned back into a legal step sequence, so deciding solvability
reduces to finding integer edge counts with x >= 0 and x(t) >= n --- an
integer-programming feasibility problem solved here by branch and bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .configs import Config, config_from_text, config_to_text
from .errors import PebblingError
from .graphs import Graph, bfs_distances
from .solver import Step, apply_step

FlowMap = dict[tuple[int, int], int]


@dataclass(frozen=True)
class PebbleFlow:
    graph: Graph
    config: Config
    flow: FlowMap

    def __post_init__(self):
        for (u, v), count in self.flow.items():
            if not self.graph.has_edge(u, v):
                raise PebblingError(f"flow on missing edge ({u},{v})")
            if count < 0:
                raise PebblingError(f"negative flow on edge ({u},{v})")

    def count(self, u: int, v: int) -> int:
        return self.flow.get((u, v), 0)

    def inflow(self, v: int) -> int:
        return sum(self.count(u, v) for u, _, _ in self.graph.in_edges[v])

    def outflow(self, v: int) -> int:
        return sum(self.count(v, u) for _, u, _ in self.graph.out_edges[v])

    def weighted_outflow(self, v: int) -> int:
        return sum(w * self.count(v, u) for _, u, w in self.graph.out_edges[v])

    def excess(self, v: int) -> int:
        return self.config[v] + self.inflow(v) - self.weighted_outflow(v)

    def excess_vector(self) -> tuple[int, ...]:
        return tuple(self.excess(v) for v in range(self.graph.vertex_count))

    def total_count(self) -> int:
        return sum(self.flow.values())


def is_feasible(f: PebbleFlow) -> bool:
    return all(x >= 0 for x in f.excess_vector())


def is_realized(f: PebbleFlow) -> bool:
    return all(c >= x for c, x in zip(f.config, f.excess_vector()))


def flow_from_steps(g: Graph, c: Config, steps) -> PebbleFlow:
    """Count steps per edge after checking they replay legally from c."""
    work = c
    flow: FlowMap = {}
    for u, v in steps:
        work = apply_step(g, work, u, v)
        flow[(u, v)] = flow.get((u, v), 0) + 1
    return PebbleFlow(g, c, flow)


def unidirectional(f: PebbleFlow) -> PebbleFlow:
    """Cancel opposing edge pairs down to one direction.  Each cancelled
    opposing unit frees weight - 1 pebbles, so no excess decreases."""
    out: FlowMap = {}
    for (u, v), count in f.flow.items():
        reduced = count - min(count, f.count(v, u))
        if reduced:
            out[(u, v)] = reduced
    return PebbleFlow(f.graph, f.config, out)


def realize(g: Graph, f: PebbleFlow) -> tuple[tuple[Step, ...], Config]:
    """Turn a feasible flow into a legal step sequence whose final
    configuration dominates the flow's excess.

    While some vertex holds fewer pebbles than its excess demands, a
    vertex with remaining inflow below remaining outflow must exist; its
    minimum-weight remaining outflow edge fires.  Every fired step keeps
    the excess (with respect to the remaining flow) unchanged, and cyclic
    remainders are simply never fired.
    """
    if f.graph is not g:
        f = PebbleFlow(g, f.config, f.flow)
    if not is_feasible(f):
        raise PebblingError("cannot realize an infeasible flow")
    target_excess = f.excess_vector()
    work = list(f.config)
    remaining = dict(f.flow)
    steps: list[Step] = []
    while any(w < x for w, x in zip(work, target_excess)):
        fired = False
        for w in range(g.vertex_count):
            inflow = sum(remaining.get((u, w), 0) for u, _, _ in g.in_edges[w])
            out_edges = [
                (wt, v)
                for _, v, wt in g.out_edges[w]
                if remaining.get((w, v), 0) > 0
            ]
            if inflow >= sum(
                remaining.get((w, v), 0) for _, v, _ in g.out_edges[w]
            ) or not out_edges:
                continue
            wt, v = min(out_edges)
            if work[w] < wt:
                raise PebblingError("flow is not realizable step by step")
            work[w] -= wt
            work[v] += 1
            remaining[(w, v)] -= 1
            steps.append((w, v))
            fired = True
            break
        if not fired:
            raise PebblingError("no fireable vertex found; flow inconsistent")
    return tuple(steps), tuple(work)


def flow_to_text(f: PebbleFlow) -> str:
    lines = [config_to_text(f.config).rstrip("\n")] if any(f.config) else []
    lines += [
        f"flow {u} {v} {count}"
        for (u, v), count in sorted(f.flow.items())
        if count
    ]
    return "\n".join(line for line in lines if line) + "\n"


def flow_from_text(g: Graph, text: str) -> PebbleFlow:
    config_lines = []
    flow: FlowMap = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "pebbles":
            config_lines.append(line)
        elif parts[0] == "flow" and len(parts) == 4:
            u, v, count = int(parts[1]), int(parts[2]), int(parts[3])
            flow[(u, v)] = flow.get((u, v), 0) + count
        else:
            raise PebblingError(f"unrecognized flow line: {raw!r}")
    c = config_from_text("\n".join(config_lines), g.vertex_count)
    return PebbleFlow(g, c, flow)


def _greedy_steps(g: Graph, c: Config, t: int, n: int):
    """Heuristic witness search: repeatedly take the most expensive occupied
    vertex and fire a loss-free edge (cost(u) = weight * cost(head)) toward
    the cheapest head whose weight its pebbles can pay.  Complete on graphs
    where concentrating along cheapest paths suffices; else returns None."""
    cost = g.cost_to(t)
    work = list(c)
    steps: list[Step] = []
    while work[t] < n:
        candidates = []
        for u in range(g.vertex_count):
            if u == t or not work[u] or cost[u] is None:
                continue
            moves = [
                (cost[v], v, w)
                for _, v, w in g.out_edges[u]
                if cost[v] is not None
                and cost[u] == w * cost[v]
                and work[u] >= w
            ]
            if moves:
                candidates.append((cost[u], u, min(moves)))
        if not candidates:
            return None
        _, u, (_, v, w) = max(candidates)
        work[u] -= w
        work[v] += 1
        steps.append((u, v))
    return tuple(steps)


def _lp_infeasible(g: Graph, c: Config, t: int, n: int, caps) -> bool:
    """Root LP-relaxation prune: maximize fractional x(t) under x >= 0 and
    the per-edge caps; a maximum below n proves integer infeasibility."""
    from .weights import LinearProgram, simplex_max

    edges = g.edges
    nv = g.vertex_count
    nvars = len(edges)

    def excess_row(v: int) -> list[Fraction]:
        row = [Fraction(0)] * nvars
        for i, (a, b, w) in enumerate(edges):
            if b == v:
                row[i] += 1
            if a == v:
                row[i] -= w
        return row

    constraints = []
    for v in range(nv):
        if v == t:
            continue
        # x(v) >= 0  <=>  -(in - out*) <= c(v)
        row = [-x for x in excess_row(v)]
        constraints.append((row, Fraction(c[v])))
    for i in range(nvars):
        row = [Fraction(0)] * nvars
        row[i] = Fraction(1)
        constraints.append((row, Fraction(caps[i])))
    objective = excess_row(t)
    lp = LinearProgram(tuple(objective), tuple(constraints))
    optimum, _, _ = simplex_max(lp)
    return optimum + c[t] < n


def solve_via_flow(
    g: Graph, c: Config, t: int, n: int, use_lp: bool = False
) -> PebbleFlow | None:
    """Find a feasible flow with excess at least n on t, or prove there is
    none; this decides n-fold t-solvability exactly.

    A greedy step simulation supplies most positive answers; the complete
    fallback is depth-first branch and bound over per-edge counts, edges
    ordered by the head's distance to t and values tried descending.
    """
    if n < 0 or not 0 <= t < g.vertex_count:
        raise PebblingError("need n >= 0 and a valid target vertex")
    if c[t] >= n:
        return PebbleFlow(g, c, {})
    total = sum(c)
    cost = g.cost_to(t)
    potential = sum(
        Fraction(x, cv) for x, cv in zip(c, cost) if x and cv is not None
    )
    if potential < n:
        return None

    steps = _greedy_steps(g, c, t, n)
    if steps is not None:
        return flow_from_steps(g, c, steps)

    dist = bfs_distances(g, t)
    order = sorted(
        range(len(g.edges)),
        key=lambda i: (
            dist[g.edges[i][1]] if dist[g.edges[i][1]] is not None else total,
            g.edges[i],
        ),
    )
    edges = [g.edges[i] for i in order]
    budget = total - n  # every flow unit on weight w destroys w - 1 pebbles
    if budget < 0:
        return None
    caps = [min(budget // (w - 1), budget) for _, _, w in edges]
    if use_lp and _lp_infeasible(g, c, t, n, caps):
        return None

    nv = g.vertex_count
    in_open = [0] * nv   # cap sum of not-yet-assigned in-edges
    for (u, v, w), cap in zip(edges, caps):
        in_open[v] += cap
    in_got = list(c)     # c(v) + assigned inflow
    out_spent = [0] * nv  # assigned weighted outflow
    assignment: list[int] = []

    def feasible_completion(spent: int) -> bool:
        left = budget - spent
        for v in range(nv):
            best = in_got[v] + min(in_open[v], left) - out_spent[v]
            if best < (n if v == t else 0):
                return False
        return True

    def dfs(i: int, spent: int) -> bool:
        if i == len(edges):
            return all(
                in_got[v] - out_spent[v] >= (n if v == t else 0)
                for v in range(nv)
            )
        u, v, w = edges[i]
        in_open[v] -= caps[i]
        limit = min(caps[i], (budget - spent) // (w - 1))
        for value in range(limit, -1, -1):
            in_got[v] += value
            out_spent[u] += w * value
            used = spent + (w - 1) * value
            if feasible_completion(used) and dfs(i + 1, used):
                assignment.append(value)
                return True
            in_got[v] -= value
            out_spent[u] -= w * value
        in_open[v] += caps[i]
        return False

    if not dfs(0, 0):
        return None
    assignment.reverse()
    flow = {
        (u, v): count
        for (u, v, _), count in zip(edges, assignment)
        if count
    }
    return PebbleFlow(g, c, flow)
