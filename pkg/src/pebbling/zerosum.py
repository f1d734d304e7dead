"""Constructive zero-sum theorems via pebbling on divisor lattices.

The generic engine replays a pebbling solution while every pebble carries
a non-empty set of indices into the input sequence; a caller-supplied
combiner merges the payloads consumed by each step.  Instantiated on the
divisor lattice of n this turns solvability of size-n configurations into
explicit zero-sum subsequences: subsets of divisors summing exactly to n,
the gcd-weighted variant, and the general divisors-of-n statement.
"""

from __future__ import annotations

from math import gcd

from .errors import PebblingError
from .flows import realize, solve_via_flow
from .graphs import Graph, divisor_lattice

IndexSet = frozenset[int]


def zero_sum_mod(seq: list[int], n: int) -> IndexSet:
    """Non-empty contiguous 1-based index range of the first n entries
    whose sum is divisible by n, found by the prefix-sum pigeonhole."""
    if n < 1:
        raise PebblingError("modulus must be >= 1")
    if len(seq) < n:
        raise PebblingError(f"need at least {n} entries, got {len(seq)}")
    seen: dict[int, int] = {0: 0}
    prefix = 0
    for j in range(1, n + 1):
        prefix = (prefix + seq[j - 1]) % n
        if prefix in seen:
            return frozenset(range(seen[prefix] + 1, j + 1))
        seen[prefix] = j
    raise AssertionError("pigeonhole cannot fail on n+1 prefixes mod n")


class PayloadState:
    """Per-vertex FIFO queues of index sets, one per pebble."""

    def __init__(self, vertex_count: int):
        self.queues: list[list[IndexSet]] = [[] for _ in range(vertex_count)]

    def place(self, vertex: int, indices: IndexSet) -> None:
        self.queues[vertex].append(indices)

    def counts(self) -> tuple[int, ...]:
        return tuple(len(q) for q in self.queues)

    def live_sets(self) -> list[IndexSet]:
        return [s for q in self.queues for s in q]

    def check(self, well_placed=None) -> None:
        live = self.live_sets()
        if any(not s for s in live):
            raise PebblingError("payload invariant broken: empty index set")
        if sum(len(s) for s in live) != len(set().union(*live) if live else set()):
            raise PebblingError("payload invariant broken: overlapping sets")
        if well_placed is not None:
            for v, queue in enumerate(self.queues):
                for s in queue:
                    if not well_placed(v, s):
                        raise PebblingError(
                            f"payload at vertex {v} is not well-placed: {sorted(s)}"
                        )


def pebbling_construction(
    g: Graph,
    t: int,
    placements: dict[int, int],
    combiner,
    steps,
    well_placed=None,
) -> IndexSet:
    """Replay a pebbling solution with payload-carrying pebbles.

    ``placements`` maps 1-based indices to their starting vertices; each
    step of weight k pops k index sets (FIFO) from its source and pushes
    ``combiner(u, v, sets)`` -- a non-empty subset of their union -- onto
    its head.  Returns the front payload at the target.  When
    ``well_placed`` is given, every queue is validated after every step.
    """
    state = PayloadState(g.vertex_count)
    for i in sorted(placements):
        state.place(placements[i], frozenset({i}))
    state.check(well_placed)
    for u, v in steps:
        w = g.weight(u, v)
        queue = state.queues[u]
        if len(queue) < w:
            raise PebblingError(
                f"step ({u},{v}) needs {w} pebbles, vertex has {len(queue)}"
            )
        popped = [queue.pop(0) for _ in range(w)]
        union = frozenset().union(*popped)
        merged = frozenset(combiner(u, v, popped))
        if not merged or not merged <= union:
            raise PebblingError(
                "combiner must return a non-empty subset of the popped union"
            )
        state.place(v, merged)
        state.check(well_placed)
    if not state.queues[t]:
        raise PebblingError("steps do not deliver a pebble to the target")
    return state.queues[t][0]


def _lattice_solution(n: int, counts_by_divisor: dict[int, int]):
    """Graph, target and step sequence delivering a pebble to vertex n of
    the divisor lattice from the given per-divisor pebble counts."""
    g = divisor_lattice(n)
    index = {d: i for i, d in enumerate(g.labels)}
    c = [0] * g.vertex_count
    for d, count in counts_by_divisor.items():
        c[index[d]] += count
    t = index[n]
    flow = solve_via_flow(g, tuple(c), t, 1)
    if flow is None:
        raise AssertionError(
            f"size-{sum(c)} configuration on the divisor lattice of {n} "
            "must be solvable"
        )
    steps, _ = realize(g, flow)
    return g, t, steps


def divisor_zero_sum(n: int, divisors: list[int]) -> IndexSet:
    """Non-empty 1-based subset of n divisors of n summing exactly to n.

    Index i starts at lattice vertex a_i; merging at an edge (d, p*d)
    unions p payloads of sum d into one of sum p*d, so the payload
    reaching vertex n sums to n.
    """
    if len(divisors) != n:
        raise PebblingError(f"need exactly {n} divisors, got {len(divisors)}")
    if n < 1:
        raise PebblingError("need n >= 1")
    for a in divisors:
        if a < 1 or n % a != 0:
            raise PebblingError(f"{a} is not a divisor of {n}")
    counts: dict[int, int] = {}
    for a in divisors:
        counts[a] = counts.get(a, 0) + 1
    g, t, steps = _lattice_solution(n, counts)
    index = {d: i for i, d in enumerate(g.labels)}
    placements = {i + 1: index[a] for i, a in enumerate(divisors)}

    def combiner(u, v, sets):
        return frozenset().union(*sets)

    def well_placed(v, s):
        return sum(divisors[i - 1] for i in s) == g.labels[v]

    out = pebbling_construction(g, t, placements, combiner, steps, well_placed)
    if sum(divisors[i - 1] for i in out) != n:
        raise AssertionError("constructed subset does not sum to n")
    return out


def gcd_zero_sum(n: int, seq: list[int]) -> IndexSet:
    """Non-empty 1-based subset S of n positive integers with
    n | sum(a_i) and sum(gcd(n, a_i)) <= n.

    Index i starts at vertex gcd(n, a_i).  At an edge (d, p*d) each popped
    payload sums to a multiple x_i of d with gcd-sum at most d; a zero-sum
    of the ratios x_i/d modulo p selects payloads whose union sums to a
    multiple of p*d with gcd-sum at most p*d.
    """
    if len(seq) != n:
        raise PebblingError(f"need exactly {n} entries, got {len(seq)}")
    if n < 1:
        raise PebblingError("need n >= 1")
    if any(a < 1 for a in seq):
        raise PebblingError("entries must be positive")
    gcds = [gcd(n, a) for a in seq]
    counts: dict[int, int] = {}
    for d in gcds:
        counts[d] = counts.get(d, 0) + 1
    g, t, steps = _lattice_solution(n, counts)
    index = {d: i for i, d in enumerate(g.labels)}
    placements = {i + 1: index[d] for i, d in enumerate(gcds)}

    def combiner(u, v, sets):
        d = g.labels[u]
        p = g.labels[v] // d
        ratios = [sum(seq[i - 1] for i in s) // d for s in sets]
        chosen = zero_sum_mod(ratios, p)
        return frozenset().union(*(sets[i - 1] for i in chosen))

    def well_placed(v, s):
        d = g.labels[v]
        total = sum(seq[i - 1] for i in s)
        return total % d == 0 and sum(gcds[i - 1] for i in s) <= d

    out = pebbling_construction(g, t, placements, combiner, steps, well_placed)
    if sum(seq[i - 1] for i in out) % n != 0:
        raise AssertionError("constructed subset sum is not divisible by n")
    if sum(gcds[i - 1] for i in out) > n:
        raise AssertionError("constructed subset gcd-sum exceeds n")
    return out


def erdos_lemke(n: int, d: int, seq: list[int]) -> IndexSet:
    """Non-empty subset of d divisors of n (d | n) with sum divisible by d
    and sum at most n."""
    if d < 1 or n < 1 or n % d != 0:
        raise PebblingError("need d >= 1 dividing n")
    if len(seq) != d:
        raise PebblingError(f"need exactly {d} entries, got {len(seq)}")
    for a in seq:
        if a < 1 or n % a != 0:
            raise PebblingError(f"{a} is not a divisor of {n}")
    out = gcd_zero_sum(d, seq)
    total = sum(seq[i - 1] for i in out)
    if total % d != 0 or total > n:
        raise AssertionError("constructed subset violates the target bounds")
    return out
