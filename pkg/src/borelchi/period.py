"""Strongly connected components, component periods, and the decision rule.

A Borel equivariant map from the free part of the full two-shift into a
subshift exists iff the subshift's transition graph has a strongly connected
component whose period (gcd of its cycle lengths) is 1.  Aperiodicity of one
component is what lets two coprime tile lengths be realized, and that is both
necessary and sufficient.

The period of a component is computed from a single BFS inside it: for every
internal edge u -> v the value level(u) + 1 - level(v) is a nonnegative
multiple of the period, and the gcd over all internal edges equals the period
exactly.  A component with no internal edge (a singleton without a self-loop)
has no cycles and gets period 0, which never satisfies the criterion.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .sft import Sft
from .transition import (
    DEFAULT_ADJ_CACHE_LIMIT,
    DEFAULT_CODE_BUDGET,
    TransitionGraph,
    build,
)


def strongly_connected_components(n: int, successors) -> list:
    """Tarjan's algorithm, iterative, over vertices 0..n-1.

    ``successors(i)`` must return an iterable of out-neighbor indices.
    Components are returned as lists of vertex indices in reverse
    topological order of the condensation (sinks first).
    """
    ids = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack = []
    comps = []
    counter = 0

    for root in range(n):
        if ids[root] >= 0:
            continue
        frames = [[root, 0, None]]
        while frames:
            frame = frames[-1]
            v = frame[0]
            if frame[2] is None:
                ids[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
                frame[2] = successors(v)
            advanced = False
            nbrs = frame[2]
            i = frame[1]
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if ids[w] < 0:
                    frame[1] = i
                    frames.append([w, 0, None])
                    advanced = True
                    break
                if on_stack[w] and ids[w] < low[v]:
                    low[v] = ids[w]
            if advanced:
                continue
            frame[1] = i
            frames.pop()
            if frames:
                parent = frames[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == ids[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def component_period(successors, member_indices) -> tuple:
    """(period, internal edge count) of one strongly connected component.

    ``member_indices`` is any iterable of the component's vertex indices.
    Period 0 means the component has no cycle at all.
    """
    members = list(member_indices)
    if len(members) == 1:
        v = members[0]
        internal = sum(1 for w in successors(v) if w == v)
        return (1 if internal else 0), internal

    inside = set(members)
    start = min(members)
    dist = {start: 0}
    queue = deque([start])
    g = 0
    internal = 0
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in successors(u):
            if w not in inside:
                continue
            internal += 1
            dw = dist.get(w)
            if dw is None:
                dist[w] = du + 1
                queue.append(w)
            else:
                g = math.gcd(g, du + 1 - dw)
    return g, internal


@dataclass(eq=False)
class SccInfo:
    """One strongly connected component, by vertex indices and window codes."""

    scc_id: int
    member_codes: tuple
    member_indices: tuple
    period: int | None = None
    internal_edge_count: int | None = None
    _graph: TransitionGraph | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.member_indices)

    @property
    def members(self) -> frozenset:
        return frozenset(self.member_codes)


def sccs(graph: TransitionGraph) -> list:
    """All strongly connected components of a transition graph."""
    comps = strongly_connected_components(graph.vertex_count, graph.successor_fn())
    out = []
    for k, comp in enumerate(comps):
        comp_sorted = sorted(comp)
        out.append(
            SccInfo(
                scc_id=k,
                member_codes=tuple(int(graph.codes[i]) for i in comp_sorted),
                member_indices=tuple(comp_sorted),
                _graph=graph,
            )
        )
    return out


def period(graph: TransitionGraph, scc: SccInfo) -> int:
    """Period of a component of this graph; fills the fields on ``scc``."""
    if scc._graph is not None and scc._graph is not graph:
        raise ValueError("component does not belong to this graph")
    if scc.period is None:
        p, internal = component_period(graph.successor_fn(), scc.member_indices)
        scc.period = p
        scc.internal_edge_count = internal
    return scc.period


@dataclass(frozen=True)
class Decision:
    """Outcome of the existence decision, with the evidence that drove it."""

    answer: bool
    witness_component: SccInfo | None
    vertex_count: int
    edge_count: int
    scc_count: int
    sccs: tuple


def decide(
    sft: Sft,
    *,
    graph: TransitionGraph | None = None,
    code_budget: int = DEFAULT_CODE_BUDGET,
    adjacency_cache_limit: int = DEFAULT_ADJ_CACHE_LIMIT,
) -> Decision:
    """Decide whether some strongly connected component has period 1.

    Components are examined largest first and the scan stops at the first
    aperiodic one, so the common yes case touches few components.
    """
    if graph is None:
        graph = build(sft, code_budget=code_budget, adjacency_cache_limit=adjacency_cache_limit)
    all_sccs = sccs(graph)
    witness = None
    for scc in sorted(all_sccs, key=lambda s: -s.size):
        if period(graph, scc) == 1:
            witness = scc
            break
    return Decision(
        answer=witness is not None,
        witness_component=witness,
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        scc_count=len(all_sccs),
        sccs=tuple(all_sccs),
    )
