"""Two-tiles certificates: construction, search, extraction, verification.

A two-tiles graph joins two directed cycles of coprime lengths p and q along
a shared directed path of n vertices.  A vertex labeling that spells no
forbidden word along any directed path of window length certifies that the
subshift admits an equivariant map from the free part of the two-shift.  This
module can

* build the graph and check labelings (:func:`build_gamma`, :func:`respects`),
* search for labelings exhaustively (:func:`search_gamma_labeling`), which
  serves as an independent oracle for the decision procedure,
* extract a verified certificate from an aperiodic component of the
  transition graph (:func:`extract_certificate`),
* produce and check the explicit tile pairs behind the closed-form chromatic
  upper bounds (``*_construction``, :func:`verify_tile_pair`).

Tile pairs are the same certificates in word form: a word of length l + p
whose first and last l symbols agree wraps into the p-cycle of a two-tiles
graph, with the repeated l-block as the shared path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CapacityError, InternalInconsistencyError
from .sft import GeneratorSet, Sft, coloring_sft, decode_word
from .transition import (
    DEFAULT_ADJ_CACHE_LIMIT,
    DEFAULT_CODE_BUDGET,
    TransitionGraph,
)
from .period import Decision, decide


@dataclass(frozen=True)
class TwoTilesGraph:
    """Two directed cycles of lengths p and q sharing an n-vertex path.

    Vertex ids: 0..n-1 are the shared path in order; n..p-1 close the first
    cycle; p..p+q-n-1 close the second.  Only the last shared vertex has
    out-degree 2 and only the first shared vertex has in-degree 2.
    """

    n: int
    p: int
    q: int
    out_edges: tuple
    cycle_p: tuple
    cycle_q: tuple

    @property
    def vertex_count(self) -> int:
        return self.p + self.q - self.n


def build_gamma(n: int, p: int, q: int) -> TwoTilesGraph:
    """Construct the two-tiles graph for parameters 1 <= n < p, q."""
    n, p, q = int(n), int(p), int(q)
    if n < 1 or p <= n or q <= n:
        raise ValueError(f"need 1 <= n < p and n < q, got n={n}, p={p}, q={q}")
    total = p + q - n
    out = [[] for _ in range(total)]
    for i in range(n - 1):
        out[i].append(i + 1)
    first_private = list(range(n, p))
    second_private = list(range(p, total))
    branch = n - 1
    out[branch].append(first_private[0] if first_private else 0)
    for a, b in zip(first_private, first_private[1:]):
        out[a].append(b)
    if first_private:
        out[first_private[-1]].append(0)
    out[branch].append(second_private[0])
    for a, b in zip(second_private, second_private[1:]):
        out[a].append(b)
    out[second_private[-1]].append(0)
    return TwoTilesGraph(
        n=n,
        p=p,
        q=q,
        out_edges=tuple(tuple(t) for t in out),
        cycle_p=tuple(range(n)) + tuple(first_private),
        cycle_q=tuple(range(n)) + tuple(second_private),
    )


def _walks(gamma: TwoTilesGraph, length: int):
    """Yield every simple directed walk of ``length`` vertices.

    When length <= n the simplicity check never triggers (both cycles are
    longer than the walk); it is kept so the enumeration stays correct for
    any parameters.
    """
    if length < 1:
        return
    for start in range(gamma.vertex_count):
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            if len(path) == length:
                yield path
                continue
            for w in gamma.out_edges[v]:
                if w not in path:
                    stack.append((w, path + (w,)))


def _check_labeling(gamma: TwoTilesGraph, labeling, alphabet_size: int) -> tuple:
    labels = tuple(int(s) for s in labeling)
    if len(labels) != gamma.vertex_count:
        raise ValueError(
            f"labeling has {len(labels)} entries, graph has {gamma.vertex_count} vertices"
        )
    for s in labels:
        if not 0 <= s < alphabet_size:
            raise ValueError(f"symbol {s} out of range for alphabet of size {alphabet_size}")
    return labels


def respects(gamma: TwoTilesGraph, labeling, sft: Sft) -> bool:
    """Whether the labeling spells no forbidden word along any walk."""
    return _find_violation(gamma, labeling, sft) is None


def _find_violation(gamma: TwoTilesGraph, labeling, sft: Sft):
    """First (path, word) whose spelled word is forbidden, or None."""
    labels = _check_labeling(gamma, labeling, sft.alphabet.size)
    b = sft.alphabet.size
    ell = sft.window_len
    forbidden = set(int(c) for c in sft.forbidden_codes)
    if not forbidden:
        return None
    for path in _walks(gamma, ell):
        code = 0
        for v in path:
            code = code * b + labels[v]
        if code in forbidden:
            return path, tuple(labels[v] for v in path)
    return None


def search_gamma_labeling(sft: Sft, n: int, p: int, q: int):
    """Exhaustive backtracking search for a labeling that respects the SFT.

    Returns a list of symbols in vertex-id order, or None when no labeling
    exists (the search is complete, so None is a proof of nonexistence).
    Requires window_len <= n < p, q and gcd(p, q) = 1.
    """
    n, p, q = int(n), int(p), int(q)
    if sft.window_len > n:
        raise ValueError(f"need window_len <= n, got window_len={sft.window_len}, n={n}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"need gcd(p, q) = 1, got p={p}, q={q}")
    gamma = build_gamma(n, p, q)
    b = sft.alphabet.size
    ell = sft.window_len
    forbidden = set(int(c) for c in sft.forbidden_codes)
    total = gamma.vertex_count

    # Group the windows by their largest vertex id, so each one is checked
    # exactly once: at the moment its last-assigned vertex receives a label.
    by_max = [[] for _ in range(total)]
    for path in _walks(gamma, ell):
        by_max[max(path)].append(path)

    labels = [0] * total
    pos = 0
    while True:
        if labels[pos] < b:
            ok = True
            for path in by_max[pos]:
                code = 0
                for v in path:
                    code = code * b + labels[v]
                if code in forbidden:
                    ok = False
                    break
            if ok:
                if pos == total - 1:
                    return list(labels)
                pos += 1
                labels[pos] = 0
                continue
            labels[pos] += 1
            continue
        pos -= 1
        if pos < 0:
            return None
        labels[pos] += 1


@dataclass(frozen=True)
class TwoTilesWitness:
    """A labeled two-tiles graph claimed to respect an SFT."""

    gamma: TwoTilesGraph
    labeling: tuple
    sft: Sft

    def __post_init__(self):
        object.__setattr__(self, "labeling", tuple(int(s) for s in self.labeling))


def explain_two_tiles_failure(witness: TwoTilesWitness):
    """None when the witness verifies; otherwise a one-line reason."""
    gamma = witness.gamma
    ell = witness.sft.window_len
    if ell > gamma.n:
        return f"window length {ell} exceeds shared path length n={gamma.n}"
    if gamma.p <= gamma.n or gamma.q <= gamma.n:
        return f"cycle lengths must exceed n: n={gamma.n}, p={gamma.p}, q={gamma.q}"
    if math.gcd(gamma.p, gamma.q) != 1:
        return f"gcd(p, q) = {math.gcd(gamma.p, gamma.q)}, expected 1"
    if len(witness.labeling) != gamma.vertex_count:
        return (
            f"labeling has {len(witness.labeling)} entries, "
            f"graph has {gamma.vertex_count} vertices"
        )
    b = witness.sft.alphabet.size
    for s in witness.labeling:
        if not 0 <= s < b:
            return f"symbol {s} out of range for alphabet of size {b}"
    hit = _find_violation(gamma, witness.labeling, witness.sft)
    if hit is not None:
        path, word = hit
        return f"forbidden word {''.join(map(str, word))} spelled along vertices {list(path)}"
    return None


def verify_two_tiles(witness: TwoTilesWitness) -> bool:
    """Full re-verification of a certificate; shares no state with search."""
    return explain_two_tiles_failure(witness) is None


def _closed_walk_lengths(graph: TransitionGraph, members):
    """Closed-walk data through a fixed vertex of one strongly connected SCC.

    Returns (w, dist_out, out_parent, dist_in, in_next, lengths) where
    ``lengths`` maps each observed closed-walk length through w to one
    internal edge (x, y) realizing it as out-path + edge + in-path.
    """
    inside = set(members)
    w = min(members)
    succ = graph.successor_fn()
    pred = graph.predecessor_fn()

    dist_out = {w: 0}
    out_parent = {}
    queue = [w]
    while queue:
        nxt = []
        for u in queue:
            du = dist_out[u]
            for v in succ(u):
                if v in inside and v not in dist_out:
                    dist_out[v] = du + 1
                    out_parent[v] = u
                    nxt.append(v)
        queue = nxt

    dist_in = {w: 0}
    in_next = {}
    queue = [w]
    while queue:
        nxt = []
        for u in queue:
            du = dist_in[u]
            for v in pred(u):
                if v in inside and v not in dist_in:
                    dist_in[v] = du + 1
                    in_next[v] = u
                    nxt.append(v)
        queue = nxt

    lengths = {}
    for x in members:
        dx = dist_out.get(x)
        if dx is None:
            continue
        for y in succ(x):
            if y not in inside:
                continue
            dy = dist_in.get(y)
            if dy is None:
                continue
            length = dx + 1 + dy
            if length not in lengths:
                lengths[length] = (x, y)
    return w, dist_out, out_parent, dist_in, in_next, lengths


def _coprime_realizable_pair(lengths, floor):
    """Smallest (m, m+1) with m > floor, both sums of the given lengths.

    The set of realizable totals is closed under addition and has gcd 1, so
    all sufficiently large integers are realizable and consecutive realizable
    values exist.  The search cap starts near the product of the two smallest
    lengths and grows geometrically; failure to find a pair within generous
    bounds indicates a bug upstream (a component that was not aperiodic).
    """
    vals = sorted(lengths)
    if math.gcd(*vals) != 1:
        raise InternalInconsistencyError(
            f"closed-walk lengths {vals} have gcd {math.gcd(*vals)}, expected 1"
        )
    second = vals[1] if len(vals) > 1 else vals[0]
    cap = floor + 1 + vals[0] * second + 1
    for _ in range(40):
        dp = bytearray(cap + 1)
        choice = [0] * (cap + 1)
        dp[0] = 1
        for L in vals:
            for i in range(L, cap + 1):
                if not dp[i] and dp[i - L]:
                    dp[i] = 1
                    choice[i] = L
        for m in range(floor + 1, cap):
            if dp[m] and dp[m + 1]:
                return m, choice
        cap *= 2
    raise InternalInconsistencyError(
        f"no coprime realizable pair above {floor} from lengths {vals}"
    )


def _decompose(total, choice):
    parts = []
    while total:
        part = choice[total]
        if part <= 0:
            raise InternalInconsistencyError(f"length {total} lost its decomposition")
        parts.append(part)
        total -= part
    return parts


def extract_certificate(
    sft: Sft,
    *,
    graph: TransitionGraph | None = None,
    decision: Decision | None = None,
    code_budget: int = DEFAULT_CODE_BUDGET,
    adjacency_cache_limit: int = DEFAULT_ADJ_CACHE_LIMIT,
):
    """Build a verified TwoTilesWitness from an aperiodic component.

    Returns None when the decision is no.  Otherwise picks the witness
    component, collects closed-walk lengths through a fixed vertex w, realizes
    two consecutive (hence coprime) lengths p, q > window_len as concatenated
    closed walks, and labels the two-tiles graph with n = window_len by
    spelling w along the shared path and the walk symbols along each cycle.
    The result is re-verified before being returned.
    """
    if decision is None:
        decision = decide(
            sft, graph=graph, code_budget=code_budget, adjacency_cache_limit=adjacency_cache_limit
        )
    if not decision.answer:
        return None
    scc = decision.witness_component
    graph = scc._graph
    if graph is None:
        raise ValueError("decision does not carry its transition graph")

    b = sft.alphabet.size
    ell = sft.window_len
    w, dist_out, out_parent, dist_in, in_next, lengths = _closed_walk_lengths(
        graph, scc.member_indices
    )
    p, choice = _coprime_realizable_pair(lengths, ell)
    q = p + 1

    def closed_walk(length):
        x, y = lengths[length]
        left = [x]
        v = x
        while v != w:
            v = out_parent[v]
            left.append(v)
        left.reverse()
        right = [y]
        v = y
        while v != w:
            v = in_next[v]
            right.append(v)
        return left + right

    def realize(total):
        walk = [w]
        for part in _decompose(total, choice):
            walk.extend(closed_walk(part)[1:])
        if len(walk) != total + 1 or walk[0] != w or walk[-1] != w:
            raise InternalInconsistencyError("realized walk has wrong shape")
        return walk

    walk_p = realize(p)
    walk_q = realize(q)
    shared = decode_word(int(graph.codes[w]), b, ell)

    def arc_labels(walk, cycle_len):
        symbols = [int(graph.codes[v]) % b for v in walk[1:]]
        if tuple(symbols[cycle_len - ell :]) != shared:
            raise InternalInconsistencyError(
                "closed walk does not return to the shared window"
            )
        return symbols[: cycle_len - ell]

    labeling = list(shared) + arc_labels(walk_p, p) + arc_labels(walk_q, q)
    witness = TwoTilesWitness(build_gamma(ell, p, q), tuple(labeling), sft)
    reason = explain_two_tiles_failure(witness)
    if reason is not None:
        raise InternalInconsistencyError(f"extracted certificate fails verification: {reason}")
    return witness


def verify_s_coloration(word, gens) -> bool:
    """Whether positions at distance a carry distinct symbols, for each a."""
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    w = [int(s) for s in word]
    for a in gens:
        for i in range(len(w) - a):
            if w[i] == w[i + a]:
                return False
    return True


def explain_tile_pair_failure(c1, c2, gens, ell):
    """None when the tile pair verifies; otherwise a one-line reason."""
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    ell = int(ell)
    c1 = tuple(int(s) for s in c1)
    c2 = tuple(int(s) for s in c2)
    if ell < gens.max_generator + 1:
        return (
            f"boundary length {ell} is below max(S)+1 = {gens.max_generator + 1}; "
            "tiles this short cannot control all generator distances"
        )
    p = len(c1) - ell
    q = len(c2) - ell
    if p <= ell or q <= ell:
        return f"cycle lengths must exceed the boundary length: p={p}, q={q}, ell={ell}"
    if math.gcd(p, q) != 1:
        return f"gcd(p, q) = {math.gcd(p, q)}, expected 1 (p={p}, q={q})"
    for name, c in (("first tile", c1), ("second tile", c2)):
        if not verify_s_coloration(c, gens):
            return f"{name} is not an S-coloration"
    blocks = [c1[:ell], c1[-ell:], c2[:ell], c2[-ell:]]
    if len(set(blocks)) != 1:
        return "boundary blocks differ (first/last ell symbols of both tiles must agree)"
    return None


def verify_tile_pair(c1, c2, gens, ell) -> bool:
    """Tile-pair certificate check: lengths, coprimality, colorations, boundaries."""
    return explain_tile_pair_failure(c1, c2, gens, ell) is None


def tile_pair_witness(c1, c2, gens, ell, colors=None) -> TwoTilesWitness:
    """Wrap a tile pair as a TwoTilesWitness against its coloring SFT.

    The repeated boundary block becomes the shared path; the tile interiors
    label the private arcs.  ``colors`` defaults to the number of distinct
    symbols needed (max symbol + 1).
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    ell = int(ell)
    c1 = tuple(int(s) for s in c1)
    c2 = tuple(int(s) for s in c2)
    p = len(c1) - ell
    q = len(c2) - ell
    if colors is None:
        colors = max(max(c1), max(c2)) + 1
    sft = coloring_sft(gens, colors)
    if sft.window_len > ell:
        raise ValueError(
            f"tiles with boundary {ell} cannot certify window length {sft.window_len}"
        )
    gamma = build_gamma(ell, p, q)
    labeling = c1[:ell] + c1[ell : ell + (p - ell)] + c2[ell : ell + (q - ell)]
    return TwoTilesWitness(gamma, labeling, sft)


class ConstructedTiles(NamedTuple):
    c0: tuple
    c1: tuple
    c2: tuple
    ell: int
    p: int
    q: int


class PairTiles(NamedTuple):
    c1: tuple
    c2: tuple
    ell: int
    p: int
    q: int


def _self_check(c1, c2, gens, ell, label):
    reason = explain_tile_pair_failure(c1, c2, gens, ell)
    if reason is not None:
        raise InternalInconsistencyError(f"{label} produced an invalid tile pair: {reason}")


def cong_construction(gens, m: int) -> ConstructedTiles:
    """Tile pair with m+2 colors when no generator is divisible by m+1.

    The base word cycles 01..m; the longer tile is a pure power of it.  The
    shorter tile drops one 0 right after the boundary block and then repairs
    the residue drift with a cascade of replacements (1 -> m+1 first, then
    i -> i-1 for i = m..2, finally 0 -> m), each applied to a calibrated
    number of earliest occurrences so replaced letters stay far apart.
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    m = int(m)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    mod = m + 1
    bad = [a for a in gens if a % mod == 0]
    if bad:
        raise ValueError(
            f"hypothesis violated: generators {bad} are divisible by m+1 = {mod}"
        )
    a_max = gens.max_generator
    big_m = -(-(a_max + 1) // mod)
    ell = big_m * mod
    b0 = 2 * big_m + 2
    b_at = {i: b0 + (mod - i) * (2 * big_m + 2) for i in range(1, m + 1)}
    n_reps = b_at[1] + 2 * big_m + 2
    p = n_reps * mod
    q = p - 1

    base = tuple(range(mod))
    c0 = base * big_m
    c1 = base * (big_m + n_reps)

    word = list(c1)
    del word[ell]

    def replace_first(symbol, new_symbol, count):
        seen = 0
        for i in range(ell, len(word)):
            if word[i] == symbol:
                word[i] = new_symbol
                seen += 1
                if seen == count:
                    return
        raise InternalInconsistencyError(
            f"ran out of {symbol} symbols to replace ({seen} of {count})"
        )

    replace_first(1, m + 1, b_at[1])
    for i in range(2, m + 1):
        replace_first(i, i - 1, b_at[i])
    replace_first(0, m, b0)
    c2 = tuple(word)

    _self_check(c1, c2, gens, ell, "cong_construction")
    return ConstructedTiles(c0, c1, c2, ell, p, q)


def two_a1_construction(gens) -> ConstructedTiles:
    """3-color tile pair when max(S) < 2 min(S).

    Blocks of a_1 equal symbols cycling 0,1,2 form both tiles; the shorter
    one drops a single symbol right after the boundary block.  Any generator
    distance then lands one or two blocks away, never on the same symbol.
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    a1 = gens.generators[0]
    a_max = gens.max_generator
    if a_max >= 2 * a1:
        raise ValueError(f"hypothesis violated: max(S) = {a_max} >= 2*min(S) = {2 * a1}")
    period = 3 * a1
    big_m = -(-(a_max + 1) // period)
    ell = period * big_m
    n_reps = 2 * big_m + 2
    block = (0,) * a1 + (1,) * a1 + (2,) * a1
    c0 = block * big_m
    c1 = block * n_reps
    word = list(c1)
    del word[ell]
    c2 = tuple(word)
    p = period * (n_reps - big_m)
    q = p - 1

    _self_check(c1, c2, gens, ell, "two_a1_construction")
    return ConstructedTiles(c0, c1, c2, ell, p, q)


def _pair_case1(a2: int) -> PairTiles:
    """a_1 = 1, a_2 even: alternate 01 and break parity with one 021 block."""
    ell = a2 + 1
    t = a2 // 2 - 1
    c0 = (0, 1) * t + (0, 2, 1)
    c1 = c0 * 4
    word = list(c1)
    del word[ell : ell + 2]
    c2 = tuple(word)
    return PairTiles(c1, c2, ell, 3 * ell, 3 * ell - 2)


def _pair_case2(a1: int, a2: int, m: int) -> PairTiles:
    """a_1 > 1, odd block ratio m: blocks 0^a1 / 1^(a1-1)2 with a 1^b seam."""
    b = a2 - m * a1
    t = (m - 1) // 2
    u = (0,) * a1
    v = (1,) * (a1 - 1) + (2,)
    s = (1,) * b
    c0 = (u + v) * t + u + s + (2,) * a1
    ell = len(c0)
    u_star = (0,) * (a1 - 1) + (1,)
    v_tilde = (1,) * (a1 - 2) + (2, 2)
    c0_tilde = (u_star + v_tilde) * t + u_star + s + (2,) * (a1 - 1)
    c1 = c0 * 4
    c2 = c0 + c0_tilde + c0 + c0
    return PairTiles(c1, c2, ell, 3 * ell, 3 * ell - 1)


def _pair_case3(a1: int, a2: int, m: int) -> PairTiles:
    """a_1 > 1, even block ratio m: seam 1^b 2^d 0^b 1^a1, longer middle block.

    Here the second tile inserts one symbol rather than deleting one: its
    middle block has length ell + 1, led by a 2 and rebalanced at the seam.
    """
    b = a2 - m * a1
    d = a1 - b
    t = m // 2 - 1
    u = (0,) * a1
    v = (1,) * (a1 - 1) + (2,)
    s = (1,) * b
    c0 = (u + v) * t + u + s + (2,) * d + (0,) * b + (1,) * a1
    ell = len(c0)
    u_tilde = (2,) + (0,) * (a1 - 1)
    middle = (u_tilde + v) * t + u_tilde + s + (2,) * (d + 1) + (0,) * b + (1,) * (a1 - 1) + (2,)
    c1 = c0 * 4
    c2 = c0 + middle + c0 + c0
    return PairTiles(c1, c2, ell, 3 * ell, 3 * ell + 1)


def pair_construction(a1: int, a2: int) -> PairTiles:
    """3-color tile pair for a coprime pair a_1 < a_2, except (1, 2).

    Dispatch: a_1 = 1 goes to the alternating construction (even a_2) or the
    congruence construction with m = 1 (odd a_2); a_2 < 2 a_1 goes to the
    block construction; otherwise the block ratio m = a_2 // a_1 selects the
    odd or even seam case.  Every result is re-verified before return.
    """
    a1, a2 = int(a1), int(a2)
    if not 1 <= a1 < a2:
        raise ValueError(f"need 1 <= a_1 < a_2, got ({a1}, {a2})")
    if math.gcd(a1, a2) != 1:
        raise ValueError(f"need gcd(a_1, a_2) = 1, got gcd = {math.gcd(a1, a2)}")
    if (a1, a2) == (1, 2):
        raise ValueError("(1, 2) needs 4 colors; no 3-color tile pair exists")
    gens = GeneratorSet((a1, a2))

    if a1 == 1:
        if a2 % 2 == 0:
            tiles = _pair_case1(a2)
        else:
            cong = cong_construction(gens, 1)
            tiles = PairTiles(cong.c1, cong.c2, cong.ell, cong.p, cong.q)
    elif a2 < 2 * a1:
        two = two_a1_construction(gens)
        tiles = PairTiles(two.c1, two.c2, two.ell, two.p, two.q)
    else:
        m = a2 // a1
        if m % 2 == 1:
            tiles = _pair_case2(a1, a2, m)
        else:
            tiles = _pair_case3(a1, a2, m)

    _self_check(tiles.c1, tiles.c2, gens, tiles.ell, f"pair_construction({a1},{a2})")
    return tiles


def write_witness_file(path, witness: TwoTilesWitness):
    """Line format: "gamma n p q", then "g" and the labels in vertex order."""
    gamma = witness.gamma
    with open(path, "w") as fh:
        fh.write(f"gamma {gamma.n} {gamma.p} {gamma.q}\n")
        fh.write("g " + " ".join(str(s) for s in witness.labeling) + "\n")


def read_witness_file(path):
    """Returns (n, p, q, labels); pair with an SFT to re-verify."""
    with open(path) as fh:
        tokens = fh.read().split()
    if len(tokens) < 5 or tokens[0] != "gamma":
        raise ValueError("witness file must start with 'gamma n p q'")
    n, p, q = int(tokens[1]), int(tokens[2]), int(tokens[3])
    if tokens[4] != "g":
        raise ValueError("witness file labels must start with 'g'")
    labels = tuple(int(t) for t in tokens[5:])
    expected = p + q - n
    if len(labels) != expected:
        raise ValueError(f"expected {expected} labels, found {len(labels)}")
    return n, p, q, labels


def write_tile_file(path, c1, c2, ell):
    """Line format: "tiles ell", then each tile on its own line."""
    with open(path, "w") as fh:
        fh.write(f"tiles {int(ell)}\n")
        fh.write(" ".join(str(int(s)) for s in c1) + "\n")
        fh.write(" ".join(str(int(s)) for s in c2) + "\n")


def read_tile_file(path):
    """Returns (c1, c2, ell)."""
    with open(path) as fh:
        lines = [line.strip() for line in fh.read().splitlines() if line.strip()]
    if len(lines) != 3 or not lines[0].startswith("tiles"):
        raise ValueError("tile file must be 'tiles ell' plus two tile lines")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("tile file header must be 'tiles ell'")
    ell = int(head[1])
    c1 = tuple(int(t) for t in lines[1].split())
    c2 = tuple(int(t) for t in lines[2].split())
    return c1, c2, ell
