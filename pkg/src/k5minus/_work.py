"""Shared machinery for the extraction case analysis.

Case handlers communicate through small Step objects; every terminal claim
is certified before it is returned (subdivision searches for K5-minus and
shorter-wheel claims, component checks for cuts), so a handler can never
smuggle out an unsound outcome — at worst it escalates to the driver's
fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .connectivity import Separator, disjoint_paths
from .finder import BudgetExceeded, BudgetTracker, find_subdivision
from .graphs import Graph, components
from .patterns import K5_MINUS, Embedding, verify_embedding
from .wheel import (
    ShorterWitness,
    WheelW4,
    concat,
    improve_once,
    is_simple,
    path_edges,
    subpath,
)

MAX_DEPTH = 6


# -- step results ------------------------------------------------------------


@dataclass
class StepFound:
    embedding: Embedding


@dataclass
class StepImprove:
    witness: ShorterWitness  # strictly shorter, spokes prefix the main wheel's


@dataclass
class StepReplace:
    wheel: WheelW4  # produced by a spoke replacement; driver guards progress
    note: str


@dataclass
class StepCut:
    separator: Separator
    label: str


@dataclass
class StepBudget:
    pass


@dataclass
class StepFallback:
    reason: str


Step = object


@dataclass
class Ctx:
    g: Graph
    tracker: BudgetTracker
    trace: list
    # bound by the driver: full re-dispatch with a replacement wheel and path
    redispatch: Optional[Callable] = None
    _step: int = 0

    def emit(self, case_label: str, action: str, total: int) -> None:
        self.trace.append(
            {
                "step": self._step,
                "case_label": case_label,
                "action": action,
                "total_spoke_length": total,
            }
        )
        self._step += 1

    @property
    def exhausted(self) -> bool:
        return self.tracker.exhausted


# -- path and set helpers ----------------------------------------------------


def interior(path) -> frozenset[int]:
    return frozenset(path[1:-1])


def vset(*paths) -> set[int]:
    out: set[int] = set()
    for p in paths:
        out.update(p)
    return out


def eset(*paths) -> set[tuple[int, int]]:
    out: set[tuple[int, int]] = set()
    for p in paths:
        out.update(path_edges(p))
    return out


def search_path(g: Graph, sources, targets, allowed_internal) -> tuple[int, ...] | None:
    """Shortest path from any source to any target whose interior stays in
    allowed_internal; deterministic (sorted multi-source BFS)."""
    sources = sorted(set(sources))
    targets = set(targets)
    allowed = set(allowed_internal) - targets
    parent: dict[int, int] = {}
    queue: list[int] = []
    for s in sources:
        if s in targets:
            continue
        parent[s] = -1
        queue.append(s)
    qi = 0
    hit = None
    while qi < len(queue) and hit is None:
        x = queue[qi]
        qi += 1
        for y in g.neighbors(x):
            if y in parent:
                continue
            if y in targets:
                parent[y] = x
                hit = y
                break
            if y in allowed:
                parent[y] = x
                queue.append(y)
    if hit is None:
        return None
    path = [hit]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def safe_join(*parts) -> tuple[int, ...] | None:
    """concat that returns None instead of producing a self-intersecting path."""
    try:
        out = concat(*parts)
    except ValueError:
        return None
    return out if is_simple(out) else None


def stitch_path(edges, src: int, dst: int) -> tuple[int, ...] | None:
    """Shortest src->dst path inside the small graph given by `edges`."""
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for k in adj:
        adj[k].sort()
    if src not in adj or dst not in adj:
        return None
    parent = {src: -1}
    queue = [src]
    qi = 0
    while qi < len(queue) and dst not in parent:
        x = queue[qi]
        qi += 1
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if dst not in parent:
        return None
    path = [dst]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def minimal_pair(
    g: Graph, apex: int, candidates, allowed_base
) -> tuple[tuple, tuple, int] | None:
    """First candidate x admitting two internally disjoint apex-x paths whose
    interiors stay inside allowed_base; None when only the trivial pair exists."""
    for x in candidates:
        if x == apex:
            continue
        ps = disjoint_paths(
            g, apex, x, limit=2, allowed_internal=set(allowed_base) - {apex, x}
        )
        if len(ps) >= 2:
            return ps[0], ps[1], x
    return None


# -- certification -----------------------------------------------------------


def composite_graph(g: Graph, comp_edges) -> Graph:
    return Graph(g.n, comp_edges)


def certify_k5minus(ctx: Ctx, comp_edges) -> Embedding | None | BudgetExceeded:
    """Search for a K5-minus subdivision inside the composite subgraph only."""
    cg = composite_graph(ctx.g, comp_edges)
    emb = find_subdivision(cg, K5_MINUS, tracker=ctx.tracker)
    if emb is None or isinstance(emb, BudgetExceeded):
        return emb
    assert verify_embedding(ctx.g, emb) == []
    return emb


def certify_shorter(
    ctx: Ctx, comp_edges, h_local: WheelW4
) -> ShorterWitness | None | BudgetExceeded:
    """Search the composite for a wheel shorter than h_local."""
    cg = composite_graph(ctx.g, set(comp_edges) | set(h_local.edge_set()))
    wit = improve_once(cg, h_local, tracker=ctx.tracker)
    if wit is None or isinstance(wit, BudgetExceeded):
        return wit
    assert wit.wheel.verify(ctx.g) == []
    return wit


class TableClaimFalsified(Exception):
    """A table or figure claim failed to certify on its composite."""

    def __init__(self, claim: str, detail: str):
        super().__init__(f"{claim}: {detail}")
        self.claim = claim
        self.detail = detail


def claim_k5minus(ctx: Ctx, comp_edges, h_local, label: str, spokes_main: bool) -> Step:
    res = certify_k5minus(ctx, comp_edges)
    if isinstance(res, BudgetExceeded):
        return StepBudget()
    if res is not None:
        ctx.emit(label, "found", h_local.total_spoke_length)
        return StepFound(res)
    return _escalate(ctx, comp_edges, h_local, label + ":k5m_claim_failed", spokes_main,
                     skip_k5m=True)


def claim_shorter(ctx: Ctx, comp_edges, h_local, label: str, spokes_main: bool) -> Step:
    res = certify_shorter(ctx, comp_edges, h_local)
    if isinstance(res, BudgetExceeded):
        return StepBudget()
    if res is not None:
        return _improve_step(ctx, res, label, spokes_main)
    return _escalate(ctx, comp_edges, h_local, label + ":shorter_claim_failed",
                     spokes_main, skip_shorter=True)


def _improve_step(ctx: Ctx, wit: ShorterWitness, label: str, spokes_main: bool) -> Step:
    if spokes_main:
        ctx.emit(label, "improve", wit.wheel.total_spoke_length)
        return StepImprove(wit)
    return StepReplace(wit.wheel, label)


def _escalate(
    ctx: Ctx, comp_edges, h_local, reason: str, spokes_main: bool,
    skip_k5m: bool = False, skip_shorter: bool = False,
) -> Step:
    """A claim failed: try the other claim on the full composite, then punt."""
    if not skip_k5m:
        res = certify_k5minus(ctx, comp_edges)
        if isinstance(res, BudgetExceeded):
            return StepBudget()
        if res is not None:
            ctx.emit("escalate", "found", h_local.total_spoke_length)
            return StepFound(res)
    if not skip_shorter:
        wit = certify_shorter(ctx, comp_edges, h_local)
        if isinstance(wit, BudgetExceeded):
            return StepBudget()
        if wit is not None:
            return _improve_step(ctx, wit, "escalate", spokes_main)
    return StepFallback(reason)


# -- cut witnesses -----------------------------------------------------------


def try_cut(ctx: Ctx, vertices, label: str, total: int) -> Step | None:
    """Verify that the (deduplicated) vertex set disconnects the graph."""
    cut = frozenset(vertices)
    if len(cut) > 3:
        return None
    comps = components(ctx.g, set(cut))
    if len(comps) < 2:
        return None
    side_a = frozenset(comps[0])
    side_b = frozenset(v for c in comps[1:] for v in c)
    ctx.emit(label, "cut", total)
    return StepCut(Separator(cut, side_a, side_b), label)


def cut_or_scan(ctx: Ctx, claimed, scan_sets, label: str, total: int) -> Step:
    """Claimed cut first; otherwise scan the promised cut shapes, then punt."""
    step = try_cut(ctx, claimed, label, total)
    if step is not None:
        return step
    for cand in scan_sets:
        step = try_cut(ctx, cand, label + ":scan", total)
        if step is not None:
            return step
    return StepFallback(label + ":cut_failed")


# -- the two immediate cases -------------------------------------------------


def assemble_case_b(ctx: Ctx, h: WheelW4, p_path, spokes_main: bool) -> Step:
    """p1 = v3: K5-minus with trivertices v2, v4 and tetravertices v, v1, v3.

    p_path runs v1 -> v3 and meets the wheel only at its endpoints.
    """
    v1, v2, v3, v4 = h.smr
    bm = (h.hub, v1, v3, v2, v4)
    paths = (
        h.spokes[0],                  # v  -> v1
        h.spokes[2],                  # v  -> v3
        h.spokes[1],                  # v  -> v2
        h.spokes[3],                  # v  -> v4
        tuple(p_path),                # v1 -> v3
        h.rim[0],                     # v1 -> v2
        tuple(reversed(h.rim[3])),    # v1 -> v4
        tuple(reversed(h.rim[1])),    # v3 -> v2
        h.rim[2],                     # v3 -> v4
    )
    emb = Embedding(K5_MINUS, bm, paths)
    if verify_embedding(ctx.g, emb) == []:
        ctx.emit("b", "found", h.total_spoke_length)
        return StepFound(emb)
    comp = set(h.edge_set()) | eset(p_path)
    return claim_k5minus(ctx, comp, h, "b", spokes_main)


def assemble_case_a(ctx: Ctx, h: WheelW4, p_path, spokes_main: bool) -> Step:
    """p1 internal on spoke P2 (after mirroring): wheel shortened at p1.

    p_path runs v1 -> p1 and meets the wheel only at its endpoints.  The new
    wheel keeps spokes P1, P3, P4, cuts P2 at p1, and reroutes the rim
    v1 -> p1 -> v3 through p_path and the abandoned spoke tail.
    """
    p1 = p_path[-1]
    v1, v2, v3, v4 = h.smr
    p2 = h.spokes[1]
    new_spoke2 = subpath(p2, h.hub, p1)
    tail = subpath(p2, p1, v2)  # abandoned spoke tail, reused by the rim
    rim_p1_v3 = safe_join(tail, h.rim[1])
    wheel = None
    if rim_p1_v3 is not None:
        wheel = WheelW4(
            h.hub,
            (h.spokes[0], new_spoke2, h.spokes[2], h.spokes[3]),
            (v1, p1, v3, v4),
            (tuple(p_path), rim_p1_v3, h.rim[2], h.rim[3]),
        ).canonical()
    if wheel is not None and wheel.verify(ctx.g) == []:
        prefixes = (
            len(h.spokes[0]) - 1,
            len(new_spoke2) - 1,
            len(h.spokes[2]) - 1,
            len(h.spokes[3]) - 1,
        )
        wit = ShorterWitness(wheel, prefixes)
        return _improve_step(ctx, wit, "a", spokes_main)
    comp = set(h.edge_set()) | eset(p_path)
    return claim_shorter(ctx, comp, h, "a", spokes_main)
