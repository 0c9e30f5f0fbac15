# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled subdivision-search kernel.

Twin of `_finder_py.search`: identical schedule (assign a branch, then route
every pattern edge whose endpoints are now placed), identical candidate
order, identical shortest-first lexicographic path enumeration, identical
budget charging.  Any behavioural divergence between the two is a bug; the
test suite compares them result-for-result.  Limits: n <= 64, pattern k <= 8,
<= 32 pattern edges.
"""

from k5minus._finder_py import make_schedule

cdef int _INF = 1 << 30

class _Budget(Exception):
    pass


cdef class _State:
    cdef int n, k, nedges, nsteps, ncands, max_len
    cdef long long node_limit, counter
    cdef unsigned long long restrict_mask
    cdef int radj[64][64]
    cdef int radjlen[64]
    cdef unsigned long long rmask[64]
    cdef int ea[32]
    cdef int eb[32]
    cdef int degs[8]
    cdef int anchored[8]
    cdef int img[8]
    cdef int cands[64]
    cdef int step_kind[40]
    cdef int step_arg[40]
    cdef int distbuf[40][64]
    cdef int pathbuf[40][96]
    cdef int plen[40]
    cdef int cur_u[40]
    cdef int cur_w[40]
    cdef unsigned long long cur_allowed[40]
    cdef unsigned long long cur_used[40]

    cdef int tick(self) except -1:
        self.counter += 1
        if self.counter > self.node_limit:
            raise _Budget()
        return 0

    cdef void dist_to(self, int si, int w, unsigned long long allowed):
        cdef int queue[64]
        cdef int i, qi, qn, z, y, j, dz
        for i in range(self.n):
            self.distbuf[si][i] = _INF
        self.distbuf[si][w] = 0
        queue[0] = w
        qn = 1
        qi = 0
        while qi < qn:
            z = queue[qi]
            qi += 1
            dz = self.distbuf[si][z] + 1
            for j in range(self.radjlen[z]):
                y = self.radj[z][j]
                if self.distbuf[si][y] > dz:
                    self.distbuf[si][y] = dz
                    if allowed >> y & 1:
                        queue[qn] = y
                        qn += 1

    cdef int run(self, int si, unsigned long long used) except -1:
        if si == self.nsteps:
            return 1
        cdef int arg = self.step_arg[si]
        cdef int b, v, ci, need, e, a2, b2, u, w, du, maxlen, length
        cdef unsigned long long allowed
        if self.step_kind[si] == 0:
            b = arg
            need = self.degs[b]
            if self.anchored[b] >= 0:
                self.tick()
                v = self.anchored[b]
                if not (used >> v & 1) and self.radjlen[v] >= need:
                    self.img[b] = v
                    if self.run(si + 1, used | ((<unsigned long long>1) << v)):
                        return 1
                self.img[b] = -1
                return 0
            for ci in range(self.ncands):
                v = self.cands[ci]
                self.tick()
                if used >> v & 1:
                    continue
                if self.radjlen[v] < need:
                    continue
                self.img[b] = v
                if self.run(si + 1, used | ((<unsigned long long>1) << v)):
                    return 1
            self.img[b] = -1
            return 0

        e = arg
        a2 = self.ea[e]
        b2 = self.eb[e]
        u = self.img[a2]
        w = self.img[b2]
        allowed = self.restrict_mask & ~used
        self.dist_to(si, w, allowed)
        du = self.distbuf[si][u]
        if du >= _INF:
            return 0
        maxlen = 1
        cdef unsigned long long tmp = allowed
        while tmp:
            tmp &= tmp - 1
            maxlen += 1
        if maxlen > self.max_len:
            maxlen = self.max_len
        if du > maxlen:
            return 0
        self.cur_u[si] = u
        self.cur_w[si] = w
        self.cur_allowed[si] = allowed
        self.cur_used[si] = used
        self.pathbuf[si][0] = u
        self.plen[si] = 1
        length = du if du > 1 else 1
        while length <= maxlen:
            if self.extend(si, e, u, length, (<unsigned long long>1) << u):
                return 1
            length += 1
        return 0

    cdef int extend(self, int si, int e, int x, int remaining,
                    unsigned long long onpath) except -1:
        self.tick()
        cdef int w = self.cur_w[si]
        cdef unsigned long long allowed = self.cur_allowed[si]
        cdef int j, y, r1
        if remaining == 1:
            if self.rmask[x] >> w & 1:
                self.pathbuf[si][self.plen[si]] = w
                self.plen[si] += 1
                if self.run(
                    si + 1,
                    self.cur_used[si]
                    | (onpath & ~((<unsigned long long>1) << self.cur_u[si])),
                ):
                    return 1
                self.plen[si] -= 1
            return 0
        r1 = remaining - 1
        for j in range(self.radjlen[x]):
            y = self.radj[x][j]
            if (allowed >> y & 1) and not (onpath >> y & 1) and self.distbuf[si][y] <= r1:
                self.pathbuf[si][self.plen[si]] = y
                self.plen[si] += 1
                if self.extend(si, e, y, r1, onpath | ((<unsigned long long>1) << y)):
                    return 1
                self.plen[si] -= 1
        return 0


def search(n, adj, restrict_mask, k, edges, degs, anchors, node_limit, max_len=None):
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    if k > 8 or len(edges) > 32:
        raise ValueError("compiled kernel handles at most 8 branches / 32 edges")

    cdef _State st = _State()
    st.n = n
    st.k = k
    st.nedges = len(edges)
    st.node_limit = node_limit
    st.counter = 0
    st.max_len = n if max_len is None else max_len
    st.restrict_mask = restrict_mask

    radj_py = []
    for v0 in range(n):
        if restrict_mask >> v0 & 1:
            radj_py.append([w0 for w0 in adj[v0] if restrict_mask >> w0 & 1])
        else:
            radj_py.append([])

    cdef int v, j, w
    cdef unsigned long long m
    for v in range(n):
        j = 0
        m = 0
        for w in radj_py[v]:
            st.radj[v][j] = w
            m |= (<unsigned long long>1) << w
            j += 1
        st.radjlen[v] = j
        st.rmask[v] = m

    anchor_of = dict(anchors)
    for b in range(k):
        st.anchored[b] = anchor_of.get(b, -1)
        st.degs[b] = degs[b]
        st.img[b] = -1

    steps = make_schedule(k, edges, anchor_of.keys(), degs)
    st.nsteps = len(steps)
    for j in range(st.nsteps):
        st.step_kind[j] = steps[j][0]
        st.step_arg[j] = steps[j][1]

    base_cands = sorted(
        (v0 for v0 in range(n) if restrict_mask >> v0 & 1),
        key=lambda v0: (-len(radj_py[v0]), v0),
    )
    st.ncands = len(base_cands)
    for j in range(st.ncands):
        st.cands[j] = base_cands[j]

    for j in range(st.nedges):
        st.ea[j] = edges[j][0]
        st.eb[j] = edges[j][1]

    try:
        found = st.run(0, 0)
    except _Budget:
        return 2, None, None, st.counter
    if found:
        img = tuple(st.img[b] for b in range(k))
        # collect routed paths: step si routed edge step_arg[si]
        out_paths = [None] * st.nedges
        for j in range(st.nsteps):
            if st.step_kind[j] == 1:
                out_paths[st.step_arg[j]] = tuple(
                    st.pathbuf[j][i] for i in range(st.plen[j])
                )
        return 0, img, tuple(out_paths), st.counter
    return 1, None, None, st.counter
