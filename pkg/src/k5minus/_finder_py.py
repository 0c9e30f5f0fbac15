"""Pure-Python subdivision-search kernel.

This is the reference twin of the compiled kernel in `_finder_c.pyx`; the two
must stay step-for-step identical, including candidate order, path
enumeration order (shortest first, lexicographic within a length), and the
points where the node budget is charged.  `tests/test_finder.py` checks that
both backends return byte-identical results.

The search interleaves branch placement with path routing: a pattern edge is
routed as soon as both of its branch images are chosen, so infeasible
placements die before the remaining branches are enumerated.

Kernel contract: `search` returns (status, branch_map, paths, nodes_used)
with status 0 = found, 1 = exhausted (no embedding), 2 = budget exceeded.
"""

from __future__ import annotations

_INF = 1 << 30


class _Budget(Exception):
    pass


def make_schedule(k, edges, anchor_branches, degs):
    """Alternating assign/route schedule; shared by both kernels.

    Branch order: anchored first, then decreasing pattern degree, then id.
    Each edge is routed immediately after its second endpoint is placed.
    Steps are (0, branch) or (1, edge_index).
    """
    order = sorted(
        range(k), key=lambda b: (0 if b in anchor_branches else 1, -degs[b], b)
    )
    steps = []
    placed = set()
    routed = set()
    for b in order:
        steps.append((0, b))
        placed.add(b)
        for ei, (x, y) in enumerate(edges):
            if ei not in routed and x in placed and y in placed:
                steps.append((1, ei))
                routed.add(ei)
    return steps


def search(n, adj, restrict_mask, k, edges, degs, anchors, node_limit, max_len=None):
    if max_len is None:
        max_len = n
    nedges = len(edges)
    counter = [0]

    # adjacency restricted to the allowed vertex set
    radj: list[tuple[int, ...]] = []
    for v in range(n):
        if restrict_mask >> v & 1:
            radj.append(tuple(w for w in adj[v] if restrict_mask >> w & 1))
        else:
            radj.append(())
    rmask = []
    for v in range(n):
        m = 0
        for w in radj[v]:
            m |= 1 << w
        rmask.append(m)

    anchor_of = dict(anchors)
    steps = make_schedule(k, edges, anchor_of.keys(), degs)
    base_cands = sorted(
        (v for v in range(n) if restrict_mask >> v & 1),
        key=lambda v: (-len(radj[v]), v),
    )

    img = [-1] * k
    paths: list[tuple[int, ...] | None] = [None] * nedges

    def tick():
        counter[0] += 1
        if counter[0] > node_limit:
            raise _Budget

    def dist_to(w, allowed):
        # BFS distances toward w; expansion only through `allowed` vertices
        dist = [_INF] * n
        dist[w] = 0
        queue = [w]
        qi = 0
        while qi < len(queue):
            z = queue[qi]
            qi += 1
            dz = dist[z] + 1
            for y in radj[z]:
                if dist[y] > dz:
                    dist[y] = dz
                    if allowed >> y & 1:
                        queue.append(y)
        return dist

    def run(si, used_mask):
        if si == len(steps):
            return True
        kind, arg = steps[si]
        if kind == 0:
            b = arg
            cands = (anchor_of[b],) if b in anchor_of else base_cands
            need = degs[b]
            for v in cands:
                tick()
                if used_mask >> v & 1:
                    continue
                if len(radj[v]) < need:
                    continue
                img[b] = v
                if run(si + 1, used_mask | (1 << v)):
                    return True
            img[b] = -1
            return False

        e = arg
        a, b = edges[e]
        u, w = img[a], img[b]
        allowed = restrict_mask & ~used_mask
        dist = dist_to(w, allowed)
        du = dist[u]
        if du >= _INF:
            return False
        maxlen = bin(allowed).count("1") + 1
        if maxlen > max_len:
            maxlen = max_len
        if du > maxlen:
            return False
        path = [u]

        def extend(x, remaining, onpath_mask):
            tick()
            if remaining == 1:
                if rmask[x] >> w & 1:
                    path.append(w)
                    paths[e] = tuple(path)
                    if run(si + 1, used_mask | (onpath_mask & ~(1 << u))):
                        return True
                    paths[e] = None
                    path.pop()
                return False
            r1 = remaining - 1
            for y in radj[x]:
                if (allowed >> y & 1) and not (onpath_mask >> y & 1) and dist[y] <= r1:
                    path.append(y)
                    if extend(y, r1, onpath_mask | (1 << y)):
                        return True
                    path.pop()
            return False

        for length in range(max(du, 1), maxlen + 1):
            if extend(u, length, 1 << u):
                return True
        return False

    try:
        found = run(0, 0)
    except _Budget:
        return 2, None, None, counter[0]
    if found:
        return 0, tuple(img), tuple(paths), counter[0]
    return 1, None, None, counter[0]
