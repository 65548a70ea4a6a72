"""De Bruijn style transition graph of a normalized SFT.

Vertices are the allowed words of the window length; there is an edge from
``u`` to ``v`` whenever ``v`` can follow ``u`` with a one-symbol shift, i.e.
the last ``window_len - 1`` symbols of ``u`` equal the first
``window_len - 1`` of ``v``.  Window length 1 degenerates to the complete
directed graph (with loops) on the allowed symbols, which is exactly right:
every symbol may follow every symbol.

For moderate sizes the adjacency is materialized as CSR arrays; above a
configurable cutoff neighbor queries fall back to on-demand arithmetic on
codes, trading speed for memory.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .sft import Sft, _CHUNK, decode_word

DEFAULT_CODE_BUDGET = 1 << 27
DEFAULT_ADJ_CACHE_LIMIT = 1 << 22


@dataclass(eq=False)
class TransitionGraph:
    """Transition graph over allowed window codes.

    ``codes`` is the sorted array of allowed codes; vertex i is ``codes[i]``.
    When the CSR cache is built, ``_indptr``/``_targets`` hold out-adjacency
    by vertex index and ``_code_to_idx`` inverts ``codes`` (-1 for absent).
    """

    sft: Sft
    codes: np.ndarray = field(repr=False)
    edge_count: int
    _indptr: np.ndarray | None = field(default=None, repr=False)
    _targets: np.ndarray | None = field(default=None, repr=False)
    _code_to_idx: np.ndarray | None = field(default=None, repr=False)
    _rev_indptr: np.ndarray | None = field(default=None, repr=False)
    _rev_targets: np.ndarray | None = field(default=None, repr=False)
    _adj_lists: list | None = field(default=None, repr=False)
    _rev_lists: list | None = field(default=None, repr=False)

    @property
    def vertex_count(self) -> int:
        return int(self.codes.size)

    @property
    def has_cached_adjacency(self) -> bool:
        return self._indptr is not None

    def index_of_code(self, code) -> int:
        """Vertex index of an allowed code, or -1 if the code is not a vertex."""
        code = int(code)
        i = int(np.searchsorted(self.codes, code))
        if i < self.codes.size and int(self.codes[i]) == code:
            return i
        return -1

    def contains_code(self, code) -> bool:
        return self.index_of_code(code) >= 0

    def _successor_codes(self, code):
        b = self.sft.alphabet.size
        mod = b ** (self.sft.window_len - 1)
        head = (int(code) % mod) * b
        return [head + s for s in range(b)]

    def _predecessor_codes(self, code):
        b = self.sft.alphabet.size
        hi = b ** (self.sft.window_len - 1)
        tail = int(code) // b
        return [s * hi + tail for s in range(b)]

    def successors(self, i: int) -> list:
        """Out-neighbor vertex indices of vertex i."""
        if self._indptr is not None:
            return self._targets[self._indptr[i] : self._indptr[i + 1]].tolist()
        out = []
        for c in self._successor_codes(self.codes[i]):
            j = self.index_of_code(c)
            if j >= 0:
                out.append(j)
        return out

    def predecessors(self, i: int) -> list:
        """In-neighbor vertex indices of vertex i."""
        if self._indptr is not None:
            self._ensure_reverse()
            return self._rev_targets[self._rev_indptr[i] : self._rev_indptr[i + 1]].tolist()
        out = []
        for c in self._predecessor_codes(self.codes[i]):
            j = self.index_of_code(c)
            if j >= 0:
                out.append(j)
        return out

    def successor_fn(self):
        """A fast callable i -> list of out-neighbor indices.

        With cached adjacency this returns slices of prebuilt Python lists,
        avoiding per-call numpy overhead inside graph traversals.
        """
        if self._indptr is not None:
            if self._adj_lists is None:
                indptr = self._indptr.tolist()
                targets = self._targets.tolist()
                self._adj_lists = [
                    targets[indptr[i] : indptr[i + 1]] for i in range(self.vertex_count)
                ]
            lists = self._adj_lists
            return lambda i: lists[i]
        return self.successors

    def predecessor_fn(self):
        """Like :meth:`successor_fn` for in-neighbors."""
        if self._indptr is not None:
            self._ensure_reverse()
            if self._rev_lists is None:
                indptr = self._rev_indptr.tolist()
                targets = self._rev_targets.tolist()
                self._rev_lists = [
                    targets[indptr[i] : indptr[i + 1]] for i in range(self.vertex_count)
                ]
            lists = self._rev_lists
            return lambda i: lists[i]
        return self.predecessors

    def _ensure_reverse(self):
        if self._rev_indptr is not None:
            return
        n = self.vertex_count
        counts = np.bincount(self._targets, minlength=n)
        rev_indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=rev_indptr[1:])
        src = np.repeat(np.arange(n, dtype=self._targets.dtype), np.diff(self._indptr))
        order = np.argsort(self._targets, kind="stable")
        self._rev_indptr = rev_indptr
        self._rev_targets = src[order]


def build(
    sft: Sft,
    *,
    code_budget: int = DEFAULT_CODE_BUDGET,
    adjacency_cache_limit: int = DEFAULT_ADJ_CACHE_LIMIT,
) -> TransitionGraph:
    """Scan the code space for allowed windows and assemble the graph.

    Raises :class:`CapacityError` when the full code space b**window_len
    exceeds ``code_budget``.  Adjacency CSR arrays are materialized only when
    the vertex count is at most ``adjacency_cache_limit``.
    """
    b = sft.alphabet.size
    ell = sft.window_len
    space = sft.code_space
    if space > code_budget:
        raise CapacityError(
            f"code space {b}**{ell} = {space} exceeds budget {code_budget}",
            required=space,
            budget=code_budget,
        )

    parts = []
    for start in range(0, space, _CHUNK):
        stop = min(start + _CHUNK, space)
        chunk = np.arange(start, stop, dtype=np.int64)
        parts.append(chunk[~sft.forbidden_mask(chunk)])
    codes = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
    n = codes.size
    mod = b ** (ell - 1)

    if n <= adjacency_cache_limit:
        idx_dtype = np.int32 if n < 2**31 else np.int64
        code_to_idx = np.full(space, -1, dtype=idx_dtype)
        code_to_idx[codes] = np.arange(n, dtype=idx_dtype)
        indptr = np.zeros(n + 1, dtype=np.int64)
        target_parts = []
        for start in range(0, n, _CHUNK):
            stop = min(start + _CHUNK, n)
            heads = (codes[start:stop] % mod) * b
            cand = heads[:, None] + np.arange(b, dtype=np.int64)[None, :]
            tgt = code_to_idx[cand]
            valid = tgt >= 0
            indptr[start + 1 : stop + 1] = valid.sum(axis=1)
            target_parts.append(tgt[valid].astype(idx_dtype, copy=False))
        np.cumsum(indptr, out=indptr)
        targets = (
            np.concatenate(target_parts) if target_parts else np.empty(0, dtype=idx_dtype)
        )
        return TransitionGraph(
            sft=sft,
            codes=codes,
            edge_count=int(targets.size),
            _indptr=indptr,
            _targets=targets,
            _code_to_idx=code_to_idx,
        )

    edge_count = 0
    for start in range(0, n, _CHUNK):
        stop = min(start + _CHUNK, n)
        heads = (codes[start:stop] % mod) * b
        cand = (heads[:, None] + np.arange(b, dtype=np.int64)[None, :]).ravel()
        pos = np.searchsorted(codes, cand)
        pos_clipped = np.minimum(pos, n - 1)
        edge_count += int(np.count_nonzero(codes[pos_clipped] == cand))
    return TransitionGraph(sft=sft, codes=codes, edge_count=edge_count)


def out_neighbors(graph: TransitionGraph, code) -> list:
    """Out-neighbor codes of a vertex given by its code."""
    i = graph.index_of_code(code)
    if i < 0:
        raise ValueError(f"code {int(code)} is not an allowed window")
    return [int(graph.codes[j]) for j in graph.successors(i)]


def to_dot(graph: TransitionGraph, max_vertices: int = 512) -> str:
    """Graphviz rendering of small graphs, vertices labeled by their words."""
    n = graph.vertex_count
    if n > max_vertices:
        raise CapacityError(
            f"graph has {n} vertices, dot export is capped at {max_vertices}",
            required=n,
            budget=max_vertices,
        )
    b = graph.sft.alphabet.size
    ell = graph.sft.window_len
    lines = ["digraph transition {"]
    for i in range(n):
        word = "".join(str(s) for s in decode_word(int(graph.codes[i]), b, ell))
        lines.append(f'  v{i} [label="{word}"];')
    for i in range(n):
        for j in graph.successors(i):
            lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
