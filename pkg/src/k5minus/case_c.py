"""Case (c): the new path from v1 lands internally on rim segment R2.

Entry assumes the wheel is oriented so that p1 is an internal vertex of
rim[1] (the analyze step mirrors R3 landings onto R2 first) and that P was
chosen landing as close to v3 along R2 as possible.
"""

from __future__ import annotations

from .bridges import bridge_containing_edge, bridge_path, compute_bridges
from .tables import K5MINUS, SHORTER_W4, c1_case, c1_outcome, outcome_rank
from .wheel import WheelW4, subpath
from ._work import (
    MAX_DEPTH,
    Ctx,
    StepBudget,
    StepFallback,
    StepReplace,
    assemble_case_b,
    claim_k5minus,
    claim_shorter,
    cut_or_scan,
    eset,
    interior,
    minimal_pair,
    safe_join,
    search_path,
    stitch_path,
    try_cut,
    vset,
    _escalate,
)
from .finder import BudgetExceeded
from .wheel import improve_once


def _h_neighbors(edge_set, v):
    out = set()
    for a, b in edge_set:
        if a == v:
            out.add(b)
        elif b == v:
            out.add(a)
    return out


def run(
    ctx: Ctx,
    h: WheelW4,
    P,
    p1,
    depth: int,
    spokes_main: bool,
    preferred_u3: int | None = None,
):
    g = ctx.g
    v = h.hub
    v1, v2, v3, v4 = h.smr
    P1, P2, P3, P4 = h.spokes
    R1, R2, R3, R4 = h.rim
    hv, he = set(h.vertex_set()), set(h.edge_set())
    total = h.total_spoke_length
    ctx.emit("c", "case", total)

    hp_v = hv | set(P)
    hp_e = he | eset(P)
    fourth = sorted(u for u in g.neighbors(v3) if u not in _h_neighbors(he, v3))
    if not fourth:
        return StepFallback("c:no_fourth_neighbor_of_v3")
    u3 = preferred_u3 if preferred_u3 in fourth else fourth[0]
    bridges_hp = compute_bridges(g, hp_v, hp_e)
    U3 = bridge_containing_edge(bridges_hp, v3, u3)
    att = set(U3.attachments) - {v3}

    v2R2p1 = subpath(R2, v2, p1)
    p1R2v3 = subpath(R2, p1, v3)

    if v1 in att:
        w_path = bridge_path(g, U3, v3, v1)
        return assemble_case_b(ctx, h, tuple(reversed(w_path)), spokes_main)

    k5_zone = (set(R1) - {v1}) | (set(v2R2p1) - {p1}) | set(interior(P)) | set(interior(P1))
    hits = sorted(att & k5_zone)
    if hits:
        q_path = bridge_path(g, U3, v3, hits[0])
        return claim_k5minus(ctx, hp_e | eset(q_path), h, "c:fig1", spokes_main)

    hits = sorted(att & (set(interior(P2)) | set(interior(P4))))
    if hits:
        q_path = bridge_path(g, U3, v3, hits[0])
        return claim_shorter(ctx, hp_e | eset(q_path), h, "c:spoke_attach", spokes_main)

    confined = set(interior(R4)) | set(p1R2v3) | set(R3) | set(P3)
    if not att <= confined:
        return StepFallback("c:unconfined_attachments")

    # (i): is there any H u P-avoiding path from v3 to the interior of R4?
    # Choose the landing closest to v1 along R4.
    by_vertex = {}
    for bridge in bridges_hp:
        if v3 in bridge.attachments:
            for t in sorted(bridge.attachments):
                by_vertex.setdefault(t, bridge)
    q3 = None
    for idx in range(len(R4) - 2, 0, -1):  # R4 runs v4 -> v1
        if R4[idx] in by_vertex:
            q3 = R4[idx]
            break
    if q3 is not None:
        q_path = bridge_path(g, by_vertex[q3], v3, q3)
        return case_c_i(ctx, h, P, p1, q_path, q3, depth, spokes_main)
    return _case_c_ii(ctx, h, P, p1, U3, att, depth, spokes_main)


# -- (i): U3 reaches the interior of R4 --------------------------------------


def case_c_i(ctx: Ctx, h: WheelW4, P, p1, Q, q3, depth: int, spokes_main: bool):
    g = ctx.g
    if depth > MAX_DEPTH:
        return StepFallback("c_i:depth")
    v = h.hub
    v1, v2, v3, v4 = h.smr
    P1, P2, P3, P4 = h.spokes
    R1, R2, R3, R4 = h.rim
    hv, he = set(h.vertex_set()), set(h.edge_set())
    total = h.total_spoke_length
    ctx.emit("c_i", "case", total)

    comp_v = hv | set(P) | set(Q)
    comp_e = he | eset(P) | eset(Q)
    g1v = vset(R1, R2, P1, P2, P)
    g2v = vset(R3, R4, P3, P4, Q)
    core = {v1, v, v3}
    side_a = g1v - core
    side_b = g2v - core

    v2R2p1 = subpath(R2, v2, p1)
    p1R2v3 = subpath(R2, p1, v3)
    v4R4q3 = subpath(R4, v4, q3)
    q3R4v1 = subpath(R4, q3, v1)

    def row_of(r1):
        if r1 == p1 or r1 in interior(P):
            return "P"
        if r1 in set(R1) - {v1}:
            return "R1"
        if r1 in interior(P1):
            return "P1"
        if r1 in interior(P2):
            return "P2"
        if r1 in set(v2R2p1) - {v2, p1}:
            return "v2R2p1"
        if r1 in set(p1R2v3) - {p1, v3}:
            return "p1R2v3"
        return None

    def col_of(r2):
        if r2 == q3 or r2 in interior(Q):
            return "Q"
        if r2 in set(R3) - {v3}:
            return "R3"
        if r2 in interior(P3):
            return "P3"
        if r2 in interior(P4):
            return "P4"
        if r2 in set(v4R4q3) - {v4, q3}:
            return "v4R4q3"
        if r2 in set(q3R4v1) - {q3, v1}:
            return "q3R4v1"
        return None

    bridges_c = compute_bridges(g, comp_v, comp_e)
    cands = []
    for bridge in bridges_c:
        aa = sorted(set(bridge.attachments) & side_a)
        bb = sorted(set(bridge.attachments) & side_b)
        for r1 in aa:
            row = row_of(r1)
            if row is None:
                continue
            for r2 in bb:
                col = col_of(r2)
                if col is None:
                    continue
                cid = c1_case(row, col)
                out = c1_outcome(cid)
                cands.append((outcome_rank(out), r1, r2, cid, out, col, bridge))
    if not cands:
        return cut_or_scan(ctx, {v1, v, v3}, [], "c_i:no_cross_path", total)
    cands.sort(key=lambda t: (t[0], t[1], t[2]))
    rank, r1, r2, cid, out, col, bridge = cands[0]
    r_path = bridge_path(g, bridge, r1, r2)
    comp_plus = comp_e | eset(r_path)
    if out == K5MINUS:
        return claim_k5minus(ctx, comp_plus, h, f"c_i:{cid}", spokes_main)
    if out == SHORTER_W4:
        return claim_shorter(ctx, comp_plus, h, f"c_i:{cid}", spokes_main)
    return _c_residual(ctx, h, P, p1, Q, q3, cands, depth, spokes_main)


def _c_residual(ctx: Ctx, h, P, p1, Q, q3, cands, depth, spokes_main):
    """Rows 2b/6b/7b/7c/7d/10b/13/22b: the secondary-path arguments."""
    g = ctx.g
    total = h.total_spoke_length
    R2 = h.rim[1]
    f1 = [c for c in cands if c[3] in ("6b", "7b", "7d", "10b")]
    f2 = [c for c in cands if c[3] in ("2b", "7c", "22b")]
    thirteen = [c for c in cands if c[3] == "13"]
    if f1:
        pos = {x: i for i, x in enumerate(subpath(R2, p1, h.smr[2]))}
        f1.sort(key=lambda c: (pos[c[1]], c[1], c[2]))
        _, r1, r2, cid, out, col, bridge = f1[0]
        r_path = bridge_path(g, bridge, r1, r2)
        return _c_residual_canonical(
            ctx, h, P, p1, Q, q3, r1, col, r_path, depth, spokes_main
        )
    if f2:
        # symmetric side: rotate the wheel half way and swap P and Q
        if depth >= MAX_DEPTH:
            return StepFallback("c_res:mirror_depth")
        ctx.emit("c_i", "mirror", total)
        h2 = h.reorder(2, False)
        return case_c_i(ctx, h2, Q, q3, P, p1, depth + 1, spokes_main)
    # only case 13 (P1 to P3) remains
    thirteen.sort(key=lambda c: (c[1], c[2]))
    _, r1, r2, cid, out, col, bridge = thirteen[0]
    r13 = bridge_path(g, bridge, r1, r2)
    return _c_case13(ctx, h, P, p1, Q, q3, r13, depth, spokes_main)


def _c_case13(ctx: Ctx, h, P, p1, Q, q3, r13, depth, spokes_main):
    g = ctx.g
    total = h.total_spoke_length
    v = h.hub
    v1, v2, v3, v4 = h.smr
    P1, P2, P3, P4 = h.spokes
    R1, R2, R3, R4 = h.rim
    hv, he = set(h.vertex_set()), set(h.edge_set())
    comp_v = hv | set(P) | set(Q)
    comp_e = he | eset(P) | eset(Q)
    ctx.emit("c_i", "case13", total)

    g1v = vset(R1, R2, P1, P2, P)
    g2v = vset(R3, R4, P3, P4, Q)
    core = {v1, v, v3}
    a2 = (g1v - set(P1)) - core
    b2 = (g2v - set(P3)) - core
    everything = frozenset(range(g.n))
    allowed = (everything - comp_v) | (set(P1) - {v1, v}) | (set(P3) - {v, v3})
    rp = search_path(g, a2, b2, allowed)
    if rp is None:
        return cut_or_scan(ctx, {v1, v, v3}, [], "c_i:13_cut", total)
    comp_plus = comp_e | eset(r13) | eset(rp)
    if set(rp[1:-1]) & (set(P1) | set(P3)):
        # the secondary path clips a spoke: one of the eight subpath classes
        return claim_shorter(ctx, comp_plus, h, "c_i:13_subpath", spokes_main)
    # rp qualifies as a fresh R avoiding P1 and P3; rescan will classify it
    # into one of the non-13 cells
    if depth >= MAX_DEPTH:
        return StepFallback("c_i:13_depth")
    return case_c_i(ctx, h, P, p1, Q, q3, depth + 1, spokes_main)


def _c_residual_canonical(ctx: Ctx, h, P, p1, Q, q3, r1, col, r_path, depth, spokes_main):
    """All cross paths land on p1R2v3; drive the r1-minimal argument."""
    g = ctx.g
    everything = frozenset(range(g.n))
    guard = 0
    while True:
        guard += 1
        if guard > g.n + 2:
            return StepFallback("c_res:loop_guard")
        total = h.total_spoke_length
        v = h.hub
        v1, v2, v3, v4 = h.smr
        P1, P2, P3, P4 = h.spokes
        R1, R2, R3, R4 = h.rim
        hv, he = set(h.vertex_set()), set(h.edge_set())
        comp_v = hv | set(P) | set(Q)
        comp_e = he | eset(P) | eset(Q)
        g1v = vset(R1, R2, P1, P2, P)
        g2v = vset(R3, R4, P3, P4, Q)
        v2R2p1 = subpath(R2, v2, p1)
        p1R2v3 = subpath(R2, p1, v3)
        r1R2v3 = subpath(R2, r1, v3)
        q3R4v1 = subpath(R4, q3, v1)
        ctx.emit("c_i", "residual", total)

        a2 = set(r1R2v3) - {r1}
        t2 = (g1v - set(P1)) - set(r1R2v3)
        free = everything - comp_v
        rp = search_path(g, a2, t2, free - set(r_path))
        crossing = False
        if rp is None:
            rp = search_path(g, a2, t2, free)
            crossing = rp is not None
        if rp is None:
            return cut_or_scan(
                ctx,
                {r1, v, v1},
                [{w, v, v1} for w in p1R2v3],
                "c_i:res_cut",
                total,
            )
        s, t = rp[0], rp[-1]
        comp_plus = comp_e | eset(r_path) | eset(rp)
        if t in interior(P2):
            return claim_shorter(ctx, comp_plus, h, "c_i:res_p2", spokes_main)
        if t in (set(R1) - {v1}) | (set(v2R2p1) - {v2, p1}) or t == v2:
            if col != "q3R4v1":
                return claim_k5minus(ctx, comp_plus, h, "c_i:res_eight", spokes_main)
            # the r2 argument: R lands on q3R4v1
            r2 = r_path[-1] if r_path[-1] in set(q3R4v1) else r_path[0]
            r2R4v1 = subpath(R4, r2, v1)
            a3 = set(r2R4v1) - {r2}
            t3 = (g2v - set(P3)) - set(r2R4v1)
            rpp = search_path(g, a3, t3, free)
            if rpp is None:
                return cut_or_scan(
                    ctx,
                    {r2, v, v3},
                    [{w, v, v3} for w in q3R4v1],
                    "c_i:res_r2_cut",
                    total,
                )
            return claim_k5minus(
                ctx, comp_plus | eset(rpp), h, "c_i:res_four", spokes_main
            )
        between = set(subpath(R2, p1, r1)) - {r1}
        if t in between and not crossing:
            # reroute the rim through rp and continue closer to v3
            new_r2 = safe_join(
                subpath(R2, v2, t), tuple(reversed(rp)), subpath(R2, s, v3)
            )
            new_r = safe_join(subpath(R2, s, r1), tuple(r_path))
            if new_r2 is not None and new_r is not None:
                h_new = WheelW4(
                    h.hub, h.spokes, h.smr, (R1, new_r2, R3, R4)
                )
                if h_new.verify(g) == []:
                    ctx.emit("c_i", "rim_replace", total)
                    h = h_new
                    r_path = new_r
                    r1 = s
                    continue
            return _escalate(ctx, comp_plus, h, "c_i:res_reroute_failed", spokes_main)
        # t == p1, t on P, or a crossing reroute: the choice arguments say these
        # cannot happen; certify whatever the composite holds, then punt
        return _escalate(ctx, comp_plus, h, "c_i:res_unexpected_landing", spokes_main)


# -- (ii): U3 confined to p1R2v3, R3, P3 -------------------------------------


def _case_c_ii(ctx: Ctx, h, P, p1, U3, att, depth, spokes_main):
    g = ctx.g
    total = h.total_spoke_length
    v = h.hub
    v1, v2, v3, v4 = h.smr
    P3 = h.spokes[2]
    if not att:
        step = try_cut(ctx, {v3}, "c_ii:pendant", total)
        return step if step is not None else StepFallback("c_ii:pendant_cut_failed")
    att_p3 = sorted(att & (set(P3) - {v3}))
    if att_p3:
        return _c_ii_1(ctx, h, P, p1, U3, att_p3, depth, spokes_main)
    return _c_ii_2(ctx, h, P, p1, U3, att, depth, spokes_main)


def _c_ii_1(ctx: Ctx, h, P, p1, U3, att_p3, depth, spokes_main):
    """U3 attaches to P3 beyond v3: the two-path family on the spoke."""
    g = ctx.g
    everything = frozenset(range(g.n))
    total = h.total_spoke_length
    v = h.hub
    v1, v2, v3, v4 = h.smr
    P1, P2, P3, P4 = h.spokes
    R1, R2, R3, R4 = h.rim
    hv, he = set(h.vertex_set()), set(h.edge_set())
    comp_e = he | eset(P)
    ctx.emit("c_ii_1", "case", total)

    v2R2p1 = subpath(R2, v2, p1)
    p1R2v3 = subpath(R2, p1, v3)
    free = everything - hv - set(P)
    pair = minimal_pair(
        g, v3, [x for x in P3 if x != v3], free | set(P3)
    )
    if pair is None:
        return StepFallback("c_ii_1:no_pair")
    px, py, x = pair
    v3P3x = subpath(P3, v3, x)
    g1v = set(p1R2v3) | set(R3) | set(P3)
    g2v = (hv | set(P)) - g1v

    sources = (set(px) | set(py)) - {v3, x}
    allowed = (free - set(px) - set(py)) | (
        set(v3P3x) - {v3, x} - set(px) - set(py)
    )
    r_path = search_path(g, sources, g2v, allowed)
    if r_path is not None:
        r1, r2 = r_path[0], r_path[-1]
        if r1 in set(px) - {v3, x}:
            px, py = py, px
        comp_plus = comp_e | eset(px) | eset(py) | eset(r_path)
        if r2 in (set(P1) - {v}) | set(R1) | (set(v2R2p1) - {p1}) | (set(P) - {p1}):
            return claim_k5minus(ctx, comp_plus, h, "c_ii_1:k5m", spokes_main)
        if r2 in interior(P2) | interior(P4):
            return claim_shorter(ctx, comp_plus, h, "c_ii_1:short", spokes_main)
        if r2 in interior(R4):
            # replace the spoke P3 by vP3x + Px and hand off to (c)(i)
            new_spoke = stitch_path(
                eset(subpath(P3, v, x)) | eset(px), v, v3
            )
            q_new = safe_join(subpath(py, v3, r1), r_path)
            if new_spoke is None or q_new is None:
                return _escalate(ctx, comp_plus, h, "c_ii_1:stitch_failed", spokes_main)
            h_new = WheelW4(v, (P1, P2, tuple(new_spoke), P4), h.smr, h.rim)
            if h_new.verify(g) != []:
                return _escalate(ctx, comp_plus, h, "c_ii_1:bad_wheel", spokes_main)
            wit = improve_once(g, h_new, tracker=ctx.tracker)
            if isinstance(wit, BudgetExceeded):
                return StepBudget()
            if wit is not None:
                return StepReplace(wit.wheel, "c_ii_1:improved_replacement")
            if depth >= MAX_DEPTH:
                return StepFallback("c_ii_1:depth")
            ctx.emit("c_ii_1", "spoke_detour", h_new.total_spoke_length)
            return case_c_i(ctx, h_new, P, p1, q_new, r2, depth + 1, False)
        return _escalate(ctx, comp_plus, h, "c_ii_1:odd_landing", spokes_main)

    # no escape path: either a rim touch gives a shorter wheel, or {v3, x} cuts
    tgt = (set(p1R2v3) | set(R3)) - {v3}
    allowed2 = (free | set(P3) | set(px) | set(py)) - {v3}
    path2 = search_path(g, sources, tgt, allowed2 - tgt)
    if path2 is not None:
        comp2 = comp_e | eset(px) | eset(py) | eset(path2)
        return claim_shorter(ctx, comp2, h, "c_ii_1:pair_to_rim", spokes_main)
    return cut_or_scan(
        ctx, {v3, x}, [{v3, w} for w in P3 if w != v3], "c_ii_1:cut", total
    )


def _c_ii_2(ctx: Ctx, h, P, p1, U3, att, depth, spokes_main):
    """U3 attaches only on p1R2v3 and R3: the paired rim families."""
    g = ctx.g
    everything = frozenset(range(g.n))
    total = h.total_spoke_length
    v = h.hub
    v1, v2, v3, v4 = h.smr
    P1, P2, P3, P4 = h.spokes
    R1, R2, R3, R4 = h.rim
    hv, he = set(h.vertex_set()), set(h.edge_set())
    comp_e = he | eset(P)
    ctx.emit("c_ii_2", "case", total)

    p1R2v3 = subpath(R2, p1, v3)
    v3R2p1 = tuple(reversed(p1R2v3))
    g1v = set(p1R2v3) | set(R3) | set(P3)
    g2v = (hv | set(P)) - g1v
    free = everything - hv - set(P)

    # family on the R2 side: endpoints prefer landing close to p1
    pair_a = minimal_pair(
        g, v3, [x for x in p1R2v3 if x != v3], free | set(v3R2p1)
    )
    x = pair_a[2] if pair_a else v3
    if pair_a:
        rw, rx, _ = pair_a
        v3R2x = subpath(R2, v3, x)
        sources = (set(rw) | set(rx)) - {v3, x}
        allowed = (free - set(rw) - set(rx)) | (
            set(v3R2x) - {v3, x} - set(rw) - set(rx)
        )
        r_path = search_path(g, sources, g2v, allowed)
        if r_path is not None:
            return _c_ii_2_redispatch(
                ctx, h, P, p1, rw, rx, x, r_path, "R2", depth, spokes_main
            )

    # family on the R3 side: endpoints prefer landing close to v4
    pair_c = minimal_pair(
        g, v3, [y for y in reversed(R3) if y != v3], free | set(R3)
    )
    y = pair_c[2] if pair_c else v3
    if pair_c:
        ry, rz, _ = pair_c
        v3R3y = subpath(R3, v3, y)
        sources = (set(ry) | set(rz)) - {v3, y}
        allowed = (free - set(ry) - set(rz)) | (
            set(v3R3y) - {v3, y} - set(ry) - set(rz)
        )
        r_path = search_path(g, sources, g2v, allowed)
        if r_path is not None:
            return _c_ii_2_redispatch(
                ctx, h, P, p1, ry, rz, y, r_path, "R3", depth, spokes_main
            )

    # a spoke-to-rim path would beat shortness
    path3 = search_path(g, interior(P3), (set(p1R2v3) | set(R3)) - {v3}, free)
    if path3 is not None:
        return claim_shorter(ctx, comp_e | eset(path3), h, "c_ii_2:spoke_rim", spokes_main)
    return cut_or_scan(
        ctx,
        {v3, x, y},
        [{v3, a, b} for a in p1R2v3 for b in R3],
        "c_ii_2:cut",
        total,
    )


def _c_ii_2_redispatch(ctx, h, P, p1, pa, pb, x, r_path, side, depth, spokes_main):
    """Rim-replace one pair path, extend the other by R, re-enter (c)(i)."""
    g = ctx.g
    v = h.hub
    v1, v2, v3, v4 = h.smr
    R1, R2, R3, R4 = h.rim
    v2R2p1 = subpath(R2, v2, p1)
    r1, r2 = r_path[0], r_path[-1]
    if r1 in set(pa) - {v3, x}:
        feeder, replacement = pa, pb
    else:
        feeder, replacement = pb, pa
    comp_plus = set(h.edge_set()) | eset(P) | eset(pa) | eset(pb) | eset(r_path)
    if side == "R2":
        kept = subpath(R2, v2, x)
        new_seg = safe_join(kept, tuple(reversed(replacement)))
        new_rim = (R1, new_seg, R3, R4) if new_seg else None
    else:
        kept = subpath(R3, y_end := x, v4)  # x names the pair endpoint on R3
        new_seg = safe_join(replacement, kept)
        new_rim = (R1, R2, new_seg, R4) if new_seg else None
    if new_rim is None:
        return _escalate(ctx, comp_plus, h, "c_ii_2:rim_stitch_failed", spokes_main)
    h_new = WheelW4(h.hub, h.spokes, h.smr, new_rim)
    if h_new.verify(g) != []:
        return _escalate(ctx, comp_plus, h, "c_ii_2:bad_rim", spokes_main)
    q_new = safe_join(subpath(feeder, v3, r1), r_path)
    if q_new is None:
        return _escalate(ctx, comp_plus, h, "c_ii_2:q_stitch_failed", spokes_main)
    # same spokes, so the new wheel is exactly as short as the old one
    if r2 in (set(h.spokes[0]) - {v}) | set(R1) | (set(v2R2p1) - {p1}) | (set(P) - {p1}):
        return claim_k5minus(ctx, comp_plus, h_new, "c_ii_2:k5m", spokes_main)
    if r2 in interior(h.spokes[1]) | interior(h.spokes[3]):
        return claim_shorter(ctx, comp_plus, h_new, "c_ii_2:short", spokes_main)
    if r2 in interior(R4) and depth < MAX_DEPTH:
        ctx.emit("c_ii_2", "rim_replace", h_new.total_spoke_length)
        return case_c_i(ctx, h_new, P, p1, q_new, r2, depth + 1, spokes_main)
    return _escalate(ctx, comp_plus, h_new, "c_ii_2:odd_landing", spokes_main)
