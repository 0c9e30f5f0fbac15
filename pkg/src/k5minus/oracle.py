"""Exhaustive containment oracle, independent of the backtracking finder.

Enumerates every edge subset of the host (Gray-code order, so degree counts
update in O(1)) and tests whether the subset is *exactly* a subdivision of
the pattern: branch degrees match, every other vertex has degree 0 or 2, the
support is connected, and suppressing degree-2 vertices yields a graph
isomorphic to the pattern.  Intended for desk-scale hosts only.
"""

from __future__ import annotations

from itertools import permutations

from .graphs import Graph
from .patterns import Pattern

EDGE_GUARD = 25


class TooLarge(Exception):
    pass


def oracle_contains(g: Graph, pattern: Pattern) -> bool:
    edges = g.edges()
    m = len(edges)
    if m > EDGE_GUARD:
        raise TooLarge(f"{m} edges exceeds the oracle guard of {EDGE_GUARD}")
    if pattern.k < 1 or min(pattern.degrees()) < 3:
        raise ValueError("oracle requires patterns with minimum branch degree 3")

    n = g.n
    pat_deg_count: dict[int, int] = {}
    for d in pattern.degrees():
        pat_deg_count[d] = pat_deg_count.get(d, 0) + 1
    pat_edge_set = set(pattern.edges)

    cnt = [0] * (n + 2)
    cnt[0] = n
    deg = [0] * n

    def bucket(d: int) -> int:
        if d == 1:
            return cnt[1]
        if d >= 3:
            return abs(cnt[d] - pat_deg_count.get(d, 0))
        return 0

    # how far the current degree profile is from "exact subdivision" shape
    bad = sum(pat_deg_count.values())

    def exact(state: int) -> bool:
        adj: dict[int, list[int]] = {}
        for i in range(m):
            if state >> i & 1:
                u, v = edges[i]
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
        support = sorted(adj)
        if not support:
            return False
        seen = {support[0]}
        stack = [support[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(support):
            return False
        branch = [v for v in support if len(adj[v]) >= 3]
        if len(branch) != pattern.k:
            return False
        # suppress degree-2 chains between branch vertices
        index = {v: i for i, v in enumerate(branch)}
        walked: set[tuple[int, int]] = set()
        chains: list[tuple[int, int]] = []
        for bstart in branch:
            for first in adj[bstart]:
                if (bstart, first) in walked:
                    continue
                prev, cur = bstart, first
                walked.add((bstart, first))
                while cur not in index:
                    nxts = [y for y in adj[cur] if y != prev]
                    if len(nxts) != 1:
                        return False
                    prev, cur = cur, nxts[0]
                walked.add((cur, prev))
                if cur == bstart:
                    return False  # suppressed loop
                a, b = index[bstart], index[cur]
                chains.append((a, b) if a < b else (b, a))
        if len(chains) != len(pattern.edges):
            return False
        chain_set = set(chains)
        if len(chain_set) != len(chains):
            return False  # parallel chains
        # isomorphism of the suppressed graph onto the pattern
        sup_degs = tuple(sorted(len(adj[v]) for v in branch))
        if sup_degs != tuple(sorted(pattern.degrees())):
            return False
        for perm in permutations(range(pattern.k)):
            ok = True
            for a, b in chain_set:
                pa, pb = perm[a], perm[b]
                if (pa, pb) not in pat_edge_set and (pb, pa) not in pat_edge_set:
                    ok = False
                    break
            if ok:
                return True
        return False

    state = 0
    for i in range(1, 1 << m):
        bit = (i & -i).bit_length() - 1
        u, v = edges[bit]
        delta = -1 if state >> bit & 1 else 1
        state ^= 1 << bit
        for x in (u, v):
            old = deg[x]
            new = old + delta
            bad -= bucket(old) + bucket(new)
            cnt[old] -= 1
            cnt[new] += 1
            deg[x] = new
            bad += bucket(old) + bucket(new)
        if bad == 0 and exact(state):
            return True
    return False
