"""Vertex connectivity, minimum separators, disjoint path systems, and fans.

Everything is exact and deterministic: paths come out of unit-vertex-capacity
maximum flow with sorted-order augmentation, and minimum cuts are tie-broken
to the lexicographically least vertex set where that is affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import Graph, components


@dataclass(frozen=True)
class Separator:
    """A vertex cut together with two separated sides.

    For separators produced by `find_separator` the sides live in G - cut.
    For blocking separators from `fan` they live in G - forbidden - cut
    (the fan contract), with side_b the unreachable target remnant.
    """

    cut: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class PathSystem:
    """Paths that are pairwise internally disjoint, or disjoint except at an apex."""

    paths: tuple[tuple[int, ...], ...]
    apex: int | None = None


def verify_separator(g: Graph, sep: Separator) -> bool:
    """Recheck that the cut actually separates side_a from side_b in G - cut."""
    if sep.cut & (sep.side_a | sep.side_b):
        return False
    if not sep.side_a or not sep.side_b or sep.side_a & sep.side_b:
        return False
    comp_of = {}
    for i, comp in enumerate(components(g, set(sep.cut))):
        for v in comp:
            comp_of[v] = i
    sides_a = {comp_of[v] for v in sep.side_a}
    sides_b = {comp_of[v] for v in sep.side_b}
    return not (sides_a & sides_b)


def verify_path_system(g: Graph, ps: PathSystem) -> bool:
    """Recheck simplicity, edge existence, and the declared disjointness."""
    for p in ps.paths:
        if len(set(p)) != len(p):
            return False
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False
    for i in range(len(ps.paths)):
        for j in range(i + 1, len(ps.paths)):
            pi, pj = ps.paths[i], ps.paths[j]
            shared = set(pi) & set(pj)
            ends = {pi[0], pi[-1]} & {pj[0], pj[-1]}
            if ps.apex is not None:
                ends = {ps.apex}
            if shared - ends:
                return False
    return True


# -- unit-capacity flow core -------------------------------------------------


class _Net:
    """Tiny Edmonds-Karp network with unit capacities."""

    def __init__(self):
        self.adj: dict[int, list[int]] = {}
        self.cap: dict[tuple[int, int], int] = {}

    def arc(self, a: int, b: int, c: int = 1) -> None:
        if (a, b) not in self.cap:
            self.adj.setdefault(a, []).append(b)
            self.adj.setdefault(b, []).append(a)
            self.cap[(a, b)] = 0
            self.cap.setdefault((b, a), 0)
        self.cap[(a, b)] += c

    def augment(self, s: int, t: int) -> bool:
        parent = {s: s}
        queue = [s]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if x == t:
                break
            for y in self.adj.get(x, ()):
                if y not in parent and self.cap[(x, y)] > 0:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            return False
        y = t
        while y != s:
            x = parent[y]
            self.cap[(x, y)] -= 1
            self.cap[(y, x)] += 1
            y = x
        return True

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit and self.augment(s, t):
            flow += 1
        return flow

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in self.adj.get(x, ()):
                if y not in seen and self.cap[(x, y)] > 0:
                    seen.add(y)
                    stack.append(y)
        return seen


def _flow_paths_cut(
    g: Graph,
    source: int,
    sinks: frozenset[int],
    allowed_internal: frozenset[int],
    limit: int,
    cuttable_sinks: bool,
) -> tuple[list[tuple[int, ...]], frozenset[int]]:
    """Max paths from source to sinks, pairwise disjoint except at source.

    Internal vertices are confined to allowed_internal.  Each sink absorbs at
    most one path.  Returns the paths and, when fewer than `limit` exist, a
    blocking vertex set (drawn from allowed_internal, plus sinks when
    cuttable_sinks is set).
    """
    # node ids: v_in = 2v, v_out = 2v+1, SRC = 2n, SNK = 2n+1
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    inf = n + 2  # arcs that must never sit on a minimum cut
    sink_cap = 1 if cuttable_sinks else inf  # fans: one path per target
    net = _Net()
    live = allowed_internal | sinks | {source}
    for v in sorted(allowed_internal):
        net.arc(2 * v, 2 * v + 1, 1)
    for t in sorted(sinks):
        net.arc(2 * t, 2 * t + 1, sink_cap)
        net.arc(2 * t + 1, snk, sink_cap)
    for u in range(n):
        if u not in live:
            continue
        for w in g.neighbors(u):
            if w not in live or w == source:
                continue
            if u == source:
                # a source-sink edge is a one-shot direct path
                net.arc(src, 2 * w, 1 if w in sinks else inf)
            elif u in allowed_internal:
                net.arc(2 * u + 1, 2 * w, inf)
            # sink vertices emit nothing: paths stop there
    flow = net.max_flow(src, snk, limit)

    cut: frozenset[int] = frozenset()
    if flow < limit:
        # snapshot the min cut before decomposition disturbs the residual
        reach = net.residual_reachable(src)
        cut_set = {
            v for v in allowed_internal if 2 * v in reach and 2 * v + 1 not in reach
        }
        if cuttable_sinks:
            for t in sinks:
                # either the target's own split arc or a saturated direct
                # source edge crosses the cut; both are blocked by t itself
                if 2 * t in reach and 2 * t + 1 not in reach:
                    cut_set.add(t)
                elif g.has_edge(source, t) and 2 * t not in reach:
                    cut_set.add(t)
        cut = frozenset(cut_set)

    paths = []
    for w in sorted(g.neighbors(source)):
        if w not in live:
            continue
        while net.cap.get((2 * w, src), 0) > 0 and len(paths) < flow:
            # one unit entered at w; walk it forward, consuming residual marks
            net.cap[(2 * w, src)] -= 1
            path = [source, w]
            x = w
            while x not in sinks:
                nxt = None
                for y in sorted(g.neighbors(x)):
                    if y in live and net.cap.get((2 * y, 2 * x + 1), 0) > 0:
                        nxt = y
                        break
                assert nxt is not None, "flow decomposition lost a unit"
                net.cap[(2 * nxt, 2 * x + 1)] -= 1
                path.append(nxt)
                x = nxt
            net.cap[(snk, 2 * x + 1)] -= 1
            paths.append(tuple(path))

    return paths, cut


def disjoint_paths(
    g: Graph,
    u: int,
    v: int,
    limit: int | None = None,
    allowed_internal: frozenset[int] | None = None,
) -> list[tuple[int, ...]]:
    """Maximum set of internally disjoint u-v paths (capped at limit)."""
    if u == v:
        raise ValueError("endpoints must differ")
    if allowed_internal is None:
        allowed_internal = frozenset(range(g.n)) - {u, v}
    else:
        allowed_internal = frozenset(allowed_internal) - {u, v}
    cap = limit if limit is not None else g.n
    paths, _ = _flow_paths_cut(
        g, u, frozenset([v]), allowed_internal, cap, cuttable_sinks=False
    )
    return paths


def min_vertex_cut(g: Graph, u: int, v: int) -> frozenset[int]:
    """Minimum u-v vertex cut for nonadjacent u, v."""
    if g.has_edge(u, v):
        raise ValueError("cut undefined for adjacent endpoints")
    allowed = frozenset(range(g.n)) - {u, v}
    _, cut = _flow_paths_cut(g, u, frozenset([v]), allowed, g.n, cuttable_sinks=False)
    return cut


def max_disjoint_paths(g: Graph, u: int, v: int, limit: int | None = None) -> PathSystem:
    return PathSystem(tuple(disjoint_paths(g, u, v, limit)))


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); n-1 for complete graphs, 0 for empty or disconnected ones."""
    n = g.n
    if n <= 1:
        return 0
    if g.is_complete():
        return n - 1
    if len(components(g)) > 1:
        return 0
    v0 = min(range(n), key=lambda v: (g.degree(v), v))
    best = n - 1
    for s in (v0, *g.neighbors(v0)):
        for t in range(n):
            if t == s or g.has_edge(s, t):
                continue
            allowed = frozenset(range(n)) - {s, t}
            paths, _ = _flow_paths_cut(
                g, s, frozenset([t]), allowed, best, cuttable_sinks=False
            )
            if len(paths) < best:
                best = len(paths)
    return best


def find_separator(g: Graph, k: int) -> Separator | None:
    """A minimum separator when kappa(G) < k and G is incomplete; else None.

    The returned cut is the lexicographically least minimum cut whenever the
    brute-force scan is affordable (always true for the engine's k <= 4 use).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0 or g.is_complete():
        return None
    kappa = vertex_connectivity(g)
    if kappa >= k:
        return None
    if comb(g.n, kappa) <= 500_000:
        for cut in combinations(range(g.n), kappa):
            comps = components(g, set(cut))
            if len(comps) >= 2:
                side_a = frozenset(comps[0])
                side_b = frozenset(v for c in comps[1:] for v in c)
                return Separator(frozenset(cut), side_a, side_b)
        raise AssertionError("connectivity said a cut exists")
    # large kappa: fall back to a flow cut (minimum, but not lex-least)
    v0 = min(range(g.n), key=lambda v: (g.degree(v), v))
    best_cut = None
    for s in (v0, *g.neighbors(v0)):
        for t in range(g.n):
            if t == s or g.has_edge(s, t):
                continue
            allowed = frozenset(range(g.n)) - {s, t}
            paths, cut = _flow_paths_cut(
                g, s, frozenset([t]), allowed, kappa + 1, cuttable_sinks=False
            )
            if len(paths) == kappa:
                best_cut = cut
                break
        if best_cut is not None:
            break
    assert best_cut is not None
    comps = components(g, set(best_cut))
    side_a = frozenset(comps[0])
    side_b = frozenset(v for c in comps[1:] for v in c)
    return Separator(best_cut, side_a, side_b)


def fan(
    g: Graph,
    u: int,
    target: frozenset[int] | set[int],
    k: int,
    forbidden: frozenset[int] | set[int] = frozenset(),
) -> PathSystem | Separator:
    """k paths from u to distinct target vertices, disjoint except at u.

    Path interiors avoid target and forbidden.  When no such fan exists the
    result is a blocking Separator of fewer than k vertices (never u) whose
    removal separates u from the target set within G - forbidden.
    """
    target = frozenset(target)
    forbidden = frozenset(forbidden)
    if u in target or u in forbidden or (target & forbidden):
        raise ValueError("apex, target, and forbidden must be disjoint")
    if k < 1 or k > len(target):
        raise ValueError("need 1 <= k <= |target|")
    allowed = frozenset(range(g.n)) - target - forbidden - {u}
    paths, cut = _flow_paths_cut(g, u, target, allowed, k, cuttable_sinks=True)
    if len(paths) >= k:
        return PathSystem(tuple(paths[:k]), apex=u)
    removed = set(forbidden) | set(cut)
    comp_u = None
    for comp in components(g, removed):
        if u in comp:
            comp_u = frozenset(comp)
            break
    assert comp_u is not None
    side_b = frozenset(v for v in range(g.n) if v not in removed and v not in comp_u)
    return Separator(frozenset(cut), comp_u, side_b)
