"""Certified Hamilton-path extraction.

The engine keeps an oriented (u,v)-path and repeatedly either applies an
explicit path-lengthening rotation or emits a machine-checkable
certificate that one of the three hypotheses (2k-connectivity, freeness
from the edge-plus-k-isolated-vertices pattern, toughness > 1) fails.

Every rotation template rebuilds the path from segments of itself, some
reversed, plus off-path vertices; every certificate is assembled from
the concrete adjacency facts the scans established, and self-validated
before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EngineError, GraphInputError
from .graph import Graph, bits, components_masks, is_connected, mask_of
from .invariants import _independent_subset
from .outcomes import (
    ForbiddenInduced,
    HamiltonPath,
    Outcome,
    SmallCut,
    Stalled,
    ToughnessWitness,
)

# --- oriented paths ---------------------------------------------------------


@dataclass(frozen=True)
class OrientedPath:
    """A simple (u,v)-path with O(1) successor/predecessor navigation."""

    seq: tuple[int, ...]
    pos: dict[int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "pos", {w: i for i, w in enumerate(self.seq)})
        if len(self.pos) != len(self.seq):
            raise EngineError(f"repeated vertex in path {self.seq}")

    @property
    def first(self) -> int:
        return self.seq[0]

    @property
    def last(self) -> int:
        return self.seq[-1]

    def __len__(self) -> int:
        return len(self.seq)

    def position(self, w: int) -> int:
        return self.pos[w]

    def succ(self, w: int) -> int:
        return self.seq[self.pos[w] + 1]

    def pred(self, w: int) -> int:
        return self.seq[self.pos[w] - 1]

    def shift(self, w: int, offset: int) -> int:
        """w^{+offset} (negative offset for predecessors)."""
        i = self.pos[w] + offset
        if not 0 <= i < len(self.seq):
            raise EngineError(f"offset {offset} from {w} leaves the path")
        return self.seq[i]

    def vertex_mask(self) -> int:
        return mask_of(self.seq)

    def reversed(self) -> "OrientedPath":
        return OrientedPath(tuple(reversed(self.seq)))

    def validate(self, G: Graph) -> None:
        if len(self.seq) < 1:
            raise EngineError("empty path")
        for a, b in zip(self.seq, self.seq[1:]):
            if not G.has_edge(a, b):
                raise EngineError(f"path uses missing edge {a}-{b}")


def initial_path(G: Graph, u: int, v: int) -> OrientedPath:
    """Shortest (u,v)-path by breadth-first search, lowest-index first."""
    if u == v:
        raise GraphInputError("endpoints must be distinct")
    parent = {u: -1}
    frontier = [u]
    while frontier and v not in parent:
        nxt = []
        for a in frontier:
            for b in bits(G.adj[a]):
                if b not in parent:
                    parent[b] = a
                    nxt.append(b)
        frontier = nxt
    if v not in parent:
        raise GraphInputError(f"vertices {u} and {v} are disconnected")
    seq = [v]
    while seq[-1] != u:
        seq.append(parent[seq[-1]])
    return OrientedPath(tuple(reversed(seq)))


# --- rotation plans ---------------------------------------------------------


@dataclass(frozen=True)
class InsertAtConsecutive:
    """Splice a path through the off-path component between two
    consecutive path vertices that both see the component."""

    after: int
    interior: tuple[int, ...]


@dataclass(frozen=True)
class ViaComponentPath:
    """Detour through the component between neighbors xi < xj whose
    successors are adjacent; the tail is partly reversed."""

    xi: int
    xj: int
    interior: tuple[int, ...]


@dataclass(frozen=True)
class ThreeCase:
    """Common-neighbor rotation at a consecutive pair (a, a+), split by
    the positions of the two neighbor bases xp < xq relative to the
    segment's anchor neighbor."""

    case: str  # "A" | "B" | "C"
    a: int
    xp: int
    xq: int
    x: int


@dataclass(frozen=True)
class OutsideTwoNeighbors:
    """Absorb both the isolated vertex x and an outside vertex y that
    sees two successor vertices."""

    y: int
    xp: int
    xq: int
    x: int


RotationPlan = InsertAtConsecutive | ViaComponentPath | ThreeCase | OutsideTwoNeighbors


def apply_rotation(G: Graph, P: OrientedPath, plan: RotationPlan) -> OrientedPath:
    """Instantiate a plan; the result is validated and strictly longer."""
    seq = list(P.seq)
    if isinstance(plan, InsertAtConsecutive):
        i = P.position(plan.after)
        new = seq[: i + 1] + list(plan.interior) + seq[i + 1 :]
    elif isinstance(plan, ViaComponentPath):
        pi, pj = P.position(plan.xi), P.position(plan.xj)
        new = (
            seq[: pi + 1]
            + list(plan.interior)
            + [plan.xj]
            + list(reversed(seq[pi + 1 : pj]))
            + seq[pj + 1 :]
        )
    elif isinstance(plan, ThreeCase):
        pa = P.position(plan.a)
        pb = pa + 1
        pp, pq = P.position(plan.xp), P.position(plan.xq)
        if plan.case == "A":
            new = (
                seq[: pa + 1]
                + seq[pp + 1 : pq + 1]
                + [plan.x]
                + list(reversed(seq[pb : pp + 1]))
                + seq[pq + 1 :]
            )
        elif plan.case == "B":
            new = (
                seq[: pp + 1]
                + [plan.x]
                + list(reversed(seq[pp + 1 : pq + 1]))
                + list(reversed(seq[pq + 1 : pa + 1]))
                + seq[pb:]
            )
        elif plan.case == "C":
            new = (
                seq[: pp + 1]
                + [plan.x]
                + list(reversed(seq[pb : pq + 1]))
                + seq[pp + 1 : pa + 1]
                + seq[pq + 1 :]
            )
        else:
            raise EngineError(f"unknown rotation case {plan.case!r}")
    elif isinstance(plan, OutsideTwoNeighbors):
        pp, pq = P.position(plan.xp), P.position(plan.xq)
        new = (
            seq[: pp + 1]
            + [plan.x]
            + list(reversed(seq[pp + 1 : pq + 1]))
            + [plan.y]
            + seq[pq + 1 :]
        )
    else:
        raise EngineError(f"unknown plan {plan!r}")
    result = OrientedPath(tuple(new))
    result.validate(G)
    if result.first != P.first or result.last != P.last:
        raise EngineError(f"rotation moved the endpoints: {plan!r}")
    if len(result) <= len(P):
        raise EngineError(f"rotation did not lengthen the path: {plan!r}")
    if P.vertex_mask() & ~result.vertex_mask():
        raise EngineError(f"rotation dropped a path vertex: {plan!r}")
    return result


# --- path decomposition -----------------------------------------------------


@dataclass(frozen=True)
class PathContext:
    """Structural decomposition around one off-path component.

    ``segments[i]`` holds the path stretch strictly between consecutive
    component-neighbors (index 0 = before the first neighbor, index t =
    after the last); derived sets are only built for singleton
    components.
    """

    component: frozenset[int]
    x: int | None
    nbrs: tuple[int, ...]
    plus: tuple[int, ...]
    island: frozenset[int]
    segments: tuple[tuple[int, ...], ...] | None = None
    s_prime: frozenset[int] | None = None
    s_star: frozenset[int] | None = None


def _component_neighbors(G: Graph, P: OrientedPath, comp_mask: int):
    nbrs = tuple(w for w in P.seq if G.adj[w] & comp_mask)
    plus = tuple(P.succ(w) for w in nbrs if w != P.last)
    return nbrs, plus


def _segments(P: OrientedPath, nbrs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    cuts = [P.position(w) for w in nbrs]
    segs = [tuple(P.seq[: cuts[0]])]
    for a, b in zip(cuts, cuts[1:]):
        segs.append(tuple(P.seq[a + 1 : b]))
    segs.append(tuple(P.seq[cuts[-1] + 1 :]))
    return tuple(segs)


def _odd_sets(segs: tuple[tuple[int, ...], ...]) -> frozenset[int]:
    """Union of the odd-position vertices of every segment: counted
    forward from each neighbor for segments 1..t, backward from the
    first neighbor for segment 0."""
    out: set[int] = set()
    for i, seg in enumerate(segs):
        if i == 0:
            out.update(seg[len(seg) - 1 :: -2])
        else:
            out.update(seg[0::2])
    return frozenset(out)


def decompose(G: Graph, k: int, P: OrientedPath) -> PathContext | None:
    """Context for the component holding the lowest off-path vertex;
    None when the path is already Hamilton."""
    off = G.full_mask & ~P.vertex_mask()
    if not off:
        return None
    comp_mask = components_masks(G.adj, off)[0]
    nbrs, plus = _component_neighbors(G, P, comp_mask)
    island = frozenset(bits(off))
    if comp_mask.bit_count() != 1 or not nbrs:
        return PathContext(
            component=frozenset(bits(comp_mask)),
            x=None,
            nbrs=nbrs,
            plus=plus,
            island=island,
        )
    x = comp_mask.bit_length() - 1
    segs = _segments(P, nbrs)
    s_prime = _odd_sets(segs)
    s_star = frozenset(P.seq) - s_prime
    return PathContext(
        component=frozenset((x,)),
        x=x,
        nbrs=nbrs,
        plus=plus,
        island=island,
        segments=segs,
        s_prime=s_prime,
        s_star=s_star,
    )


# --- step outcomes ----------------------------------------------------------


@dataclass(frozen=True)
class StepOutcome:
    kind: str  # "extended" | "hamilton" | "certified" | "stalled"
    rule: str
    path: OrientedPath | None = None
    certificate: Outcome | None = None
    diagnostic: str = ""


def _extended(rule: str, path: OrientedPath) -> StepOutcome:
    return StepOutcome(kind="extended", rule=rule, path=path)


def _certified(rule: str, certificate: Outcome) -> StepOutcome:
    return StepOutcome(kind="certified", rule=rule, certificate=certificate)


# --- helpers ----------------------------------------------------------------


def _path_through_component(G: Graph, comp_mask: int, a: int, b: int) -> tuple[int, ...]:
    """Shortest path interior inside the component joining a neighbor of
    a to a neighbor of b (a, b are path vertices seeing the component)."""
    sources = G.adj[a] & comp_mask
    targets = G.adj[b] & comp_mask
    if not sources or not targets:
        raise EngineError("component path requested without anchors")
    parent: dict[int, int] = {s: -1 for s in bits(sources)}
    frontier = sorted(parent)
    goal = None
    while goal is None:
        hits = [w for w in frontier if targets >> w & 1]
        if hits:
            goal = hits[0]
            break
        nxt = []
        for w in frontier:
            for z in bits(G.adj[w] & comp_mask):
                if z not in parent:
                    parent[z] = w
                    nxt.append(z)
        if not nxt:
            raise EngineError("component path search exhausted")
        frontier = sorted(nxt)
    out = [goal]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return tuple(reversed(out))


def _pick_independent(G: Graph, k: int, ordered: list[int]) -> frozenset[int] | None:
    """First k pairwise non-adjacent vertices of ``ordered``; falls back
    to a full independent-subset search over the same candidates."""
    chosen: list[int] = []
    for w in ordered:
        if all(not G.has_edge(w, c) for c in chosen):
            chosen.append(w)
            if len(chosen) == k:
                return frozenset(chosen)
    found = _independent_subset(G, mask_of(ordered), k)
    if found is None:
        return None
    return frozenset(bits(found))


def _forbidden(
    G: Graph, k: int, edge: tuple[int, int], candidates: list[int]
) -> ForbiddenInduced | None:
    """Assemble a forbidden-pattern witness: the given edge plus an
    independent k-set drawn from candidates, filtered for the witness
    invariants (distinctness and non-adjacency to the edge)."""
    z, w = edge
    usable = [
        c
        for c in candidates
        if c not in (z, w) and not G.has_edge(c, z) and not G.has_edge(c, w)
    ]
    indep = _pick_independent(G, k, usable)
    if indep is None:
        return None
    return ForbiddenInduced(edge=edge, independent=indep)


def _forbidden_or_bug(G, k, edge, candidates) -> ForbiddenInduced:
    out = _forbidden(G, k, edge, candidates)
    if out is None:
        raise EngineError(
            f"failed to assemble a guaranteed forbidden witness at edge {edge}"
        )
    return out


# --- the claim cascade ------------------------------------------------------


def _choose_x_set(
    P: OrientedPath, plus: tuple[int, ...], k: int, forced: list[int]
) -> list[int]:
    """2k-1 successor vertices: the forced anchors plus the lowest
    path positions; deterministic."""
    size = 2 * k - 1
    out = sorted(set(forced), key=P.position)
    if len(out) > size:
        raise EngineError("forced anchors exceed the reference-set size")
    for w in plus:
        if len(out) == size:
            break
        if w not in out:
            out.append(w)
    if len(out) < size:
        raise EngineError("successor set too small for the reference set")
    return out


@dataclass
class _Frame:
    """One orientation of the working path with its singleton-component
    context; the tail segment of the reversed frame is segment 0."""

    path: OrientedPath
    x: int
    nbrs: tuple[int, ...]
    plus: tuple[int, ...]
    plus_mask: int
    reversed_frame: bool = False


def _make_frame(G: Graph, P: OrientedPath, x: int, rev: bool) -> _Frame:
    path = P.reversed() if rev else P
    comp_mask = 1 << x
    nbrs, plus = _component_neighbors(G, path, comp_mask)
    return _Frame(
        path=path,
        x=x,
        nbrs=nbrs,
        plus=plus,
        plus_mask=mask_of(plus),
        reversed_frame=rev,
    )


def _scan_segment(G: Graph, k: int, fr: _Frame, i: int, seg: tuple[int, ...]):
    """Parity scan of one segment (claims 3/4 machinery).

    Returns None when clean, else ("rotate", plan) or ("certify",
    witness). Odd positions must avoid the successor set (just the
    anchor successor when 2k-1 == 1); even positions must see at least
    k+1 members of the reference set.
    """
    P, x = fr.path, fr.x
    anchor_succ = seg[0]
    union_mask = fr.plus_mask if 2 * k - 1 >= 2 else 1 << anchor_succ
    jstar = None
    xr = None
    for j in range(1, len(seg) + 1, 2):
        w = seg[j - 1]
        hits = G.adj[w] & union_mask & ~(1 << w)
        if j == 1:
            if hits:
                raise EngineError("successor set not independent at scan time")
            continue
        if hits:
            jstar = j
            xr = min(bits(hits), key=P.position)
            break
    forced = [anchor_succ] if jstar is None else [anchor_succ, xr]
    X = _choose_x_set(P, fr.plus, k, forced)
    x_mask = mask_of(X)
    limit = jstar if jstar is not None else len(seg)
    for j in range(2, limit + 1):
        if j % 2 == 1 and j != jstar:
            continue
        w = seg[j - 1]
        cnt = (G.adj[w] & x_mask).bit_count()
        if j % 2 == 0:
            if cnt <= k:
                edge = (seg[j - 2], w)
                witness = _forbidden_or_bug(G, k, edge, [x] + X)
                return ("certify", witness)
        else:
            if cnt <= k:
                witness = _forbidden_or_bug(G, k, (xr, w), [x] + X)
                return ("certify", witness)
            a = seg[j - 2]
            common = G.adj[a] & G.adj[w] & x_mask
            if common.bit_count() < 2:
                raise EngineError("common-neighbor count dropped below two")
            return ("rotate", _three_case_plan(P, fr.nbrs, i, a, common, x))
    return None


def _three_case_plan(
    P: OrientedPath, nbrs: tuple[int, ...], i: int, a: int, common: int, x: int
) -> ThreeCase:
    picks = sorted(bits(common), key=P.position)[:2]
    xp, xq = (P.pred(w) for w in picks)
    anchor_pos = P.position(nbrs[i - 1])
    if P.position(xp) > anchor_pos:
        case = "A"
    elif P.position(xq) <= anchor_pos:
        case = "B"
    else:
        case = "C"
    return ThreeCase(case=case, a=a, xp=xp, xq=xq, x=x)


def _singleton_phase(G: Graph, k: int, P: OrientedPath, x: int) -> StepOutcome:
    """Rules 5-9: the parity scans, the even-segment rule, the
    independence scans, and the toughness endgame, in fixed order."""
    fwd = _make_frame(G, P, x, rev=False)
    segs = _segments(P, fwd.nbrs)
    t = len(fwd.nbrs)

    # rule 5: parity scans, forward segments then the reversed head
    for i in range(1, t + 1):
        seg = segs[i]
        if not seg:
            continue
        hit = _scan_segment(G, k, fwd, i, seg)
        if hit is not None:
            return _scan_result("rule5", G, P, hit, reversed_frame=False)
    if segs[0]:
        rev = _make_frame(G, P, x, rev=True)
        # the reversed successor set was never covered by rule 2
        bad = _independent_violation(G, rev.plus)
        if bad is not None:
            wi, wj = sorted(bad, key=rev.path.position)
            plan = ViaComponentPath(
                xi=rev.path.pred(wi), xj=rev.path.pred(wj), interior=(x,)
            )
            return _extended("rule5", apply_rotation(G, rev.path, plan).reversed())
        tail = tuple(reversed(segs[0]))
        hit = _scan_segment(G, k, rev, t, tail)
        if hit is not None:
            return _scan_result("rule5", G, rev.path, hit, reversed_frame=True)

    # rule 6: every interior segment must have odd length
    for i in range(1, t):
        seg = segs[i]
        if len(seg) % 2 != 0:
            continue
        X = _choose_x_set(P, fwd.plus, k, [seg[0]])
        x_mask = mask_of(X)
        nxt = fwd.nbrs[i]
        cnt_next = (G.adj[nxt] & x_mask).bit_count()
        if cnt_next <= k - 1:
            witness = _forbidden_or_bug(G, k, (x, nxt), X)
            return _certified("rule6", witness)
        a = seg[-1]
        if (G.adj[a] & x_mask).bit_count() <= k:
            raise EngineError("even-segment endpoint lost its reference count")
        common = G.adj[a] & G.adj[nxt] & x_mask
        if common.bit_count() < 2:
            raise EngineError("even-segment rotation lacks common neighbors")
        plan = _three_case_plan(P, fwd.nbrs, i, a, common, x)
        return _extended("rule6", apply_rotation(G, P, plan))

    s_prime = _odd_sets(segs)
    minus = tuple(P.pred(w) for w in fwd.nbrs if w != P.first)
    wide_candidates = [x] + sorted(set(fwd.plus) | set(minus))

    # rule 7: the odd-position set must be independent
    for z in sorted(s_prime):
        for w in sorted(bits(G.adj[z] & mask_of(s_prime))):
            if w <= z:
                continue
            witness = _forbidden(G, k, (z, w), wide_candidates)
            if witness is not None:
                return _certified("rule7", witness)
            return StepOutcome(
                kind="stalled",
                rule="rule7",
                diagnostic=f"edge {z}-{w} inside the odd-position set, "
                "but no independent witness set of the required size",
            )

    # rule 8: outside vertices must avoid the successor set and S'
    island = sorted(bits(G.full_mask & ~P.vertex_mask() & ~(1 << x)))
    for y in island:
        plus_hits = sorted(bits(G.adj[y] & fwd.plus_mask), key=P.position)
        if len(plus_hits) >= 2:
            xp, xq = (P.pred(w) for w in plus_hits[:2])
            plan = OutsideTwoNeighbors(y=y, xp=xp, xq=xq, x=x)
            return _extended("rule8", apply_rotation(G, P, plan))
        if len(plus_hits) == 1:
            witness = _forbidden_or_bug(G, k, (y, plus_hits[0]), [x] + list(fwd.plus))
            return _certified("rule8", witness)
        s_hits = sorted(bits(G.adj[y] & mask_of(s_prime)))
        if s_hits:
            witness = _forbidden(G, k, (y, s_hits[0]), wide_candidates)
            if witness is not None:
                return _certified("rule8", witness)
            return StepOutcome(
                kind="stalled",
                rule="rule8",
                diagnostic=f"outside vertex {y} touches the odd-position set, "
                "but no independent witness set of the required size",
            )

    # rule 9: the toughness endgame
    s_star = frozenset(P.seq) - s_prime
    witness_set = frozenset(bits(G.full_mask & ~P.vertex_mask())) | s_prime
    problem = _independent_violation(G, sorted(witness_set))
    if problem is not None:
        return StepOutcome(
            kind="stalled",
            rule="rule9",
            diagnostic=f"endgame witness set not independent at {problem}",
        )
    if len(s_star) > len(witness_set) or len(witness_set) < 2:
        return StepOutcome(
            kind="stalled",
            rule="rule9",
            diagnostic="endgame counting failed: "
            f"|cut|={len(s_star)}, |witness|={len(witness_set)}",
        )
    return _certified(
        "rule9", ToughnessWitness(cut=s_star, independent=witness_set)
    )


def _scan_result(rule, G, path, hit, reversed_frame) -> StepOutcome:
    action, payload = hit
    if action == "certify":
        return _certified(rule, payload)
    new = apply_rotation(G, path, payload)
    if reversed_frame:
        new = new.reversed()
    return _extended(rule, new)


def _independent_violation(G: Graph, vertices) -> tuple[int, int] | None:
    vs = sorted(vertices)
    m = mask_of(vs)
    for w in vs:
        inner = G.adj[w] & m
        if inner:
            return (w, (inner & -inner).bit_length() - 1)
    return None


def _insertion_fallback(G: Graph, P: OrientedPath) -> OrientedPath | None:
    """Last-resort single-vertex insertion before conceding a stall."""
    off = G.full_mask & ~P.vertex_mask()
    for y in bits(off):
        for a, b in zip(P.seq, P.seq[1:]):
            if G.has_edge(y, a) and G.has_edge(y, b):
                return apply_rotation(G, P, InsertAtConsecutive(after=a, interior=(y,)))
    return None


def extend_or_certify(G: Graph, k: int, P: OrientedPath) -> StepOutcome:
    """One step: apply the first applicable rule of the fixed cascade."""
    off = G.full_mask & ~P.vertex_mask()
    if not off:
        return StepOutcome(kind="hamilton", rule="done", path=P)
    comps = components_masks(G.adj, off)

    # rule 1: consecutive neighbors of any component admit a splice
    for comp in comps:
        nbrs, _ = _component_neighbors(G, P, comp)
        for a, b in zip(nbrs, nbrs[1:]):
            if P.position(b) == P.position(a) + 1:
                interior = _path_through_component(G, comp, a, b)
                plan = InsertAtConsecutive(after=a, interior=interior)
                return _extended("rule1", apply_rotation(G, P, plan))

    # rule 2: adjacent successors admit a detour through the component
    for comp in comps:
        _, plus = _component_neighbors(G, P, comp)
        bad = _independent_violation(G, plus)
        if bad is not None:
            wi, wj = sorted(bad, key=P.position)
            xi, xj = P.pred(wi), P.pred(wj)
            interior = _path_through_component(G, comp, xi, xj)
            plan = ViaComponentPath(xi=xi, xj=xj, interior=interior)
            return _extended("rule2", apply_rotation(G, P, plan))

    # rule 3: a component with few path neighbors is a small cut
    for comp in comps:
        nbrs, _ = _component_neighbors(G, P, comp)
        if len(nbrs) < 2 * k:
            cut = frozenset(nbrs)
            rest = G.full_mask & ~comp & ~mask_of(nbrs)
            if not rest:
                raise EngineError("small-cut rule reached with nothing separated")
            return _certified("rule3", SmallCut(cut=cut))

    # rule 4: a component edge joins an independent successor set
    for comp in comps:
        if comp.bit_count() == 1:
            continue
        z = (comp & -comp).bit_length() - 1
        inner = G.adj[z] & comp
        w = (inner & -inner).bit_length() - 1
        _, plus = _component_neighbors(G, P, comp)
        witness = _forbidden_or_bug(G, k, (z, w), list(plus))
        return _certified("rule4", witness)

    # rules 5-9 on the singleton component with the lowest vertex
    x = (comps[0] & -comps[0]).bit_length() - 1
    outcome = _singleton_phase(G, k, P, x)
    if outcome.kind == "stalled":
        rescued = _insertion_fallback(G, P)
        if rescued is not None:
            return _extended("fallback", rescued)
    return outcome


# --- end-to-end extraction --------------------------------------------------


@dataclass(frozen=True)
class ExtractionResult:
    outcome: Outcome
    trace: tuple[str, ...]
    k: int
    u: int
    v: int

    @property
    def extended_steps(self) -> int:
        # every trace entry but the terminal one lengthened the path
        return max(0, len(self.trace) - 1)


def extract(G: Graph, k: int, u: int, v: int) -> ExtractionResult:
    """Loop extend_or_certify from a shortest (u,v)-path until a Hamilton
    path or a certificate emerges; deterministic, at most n steps."""
    if k < 1:
        raise GraphInputError("k must be at least 1")
    if G.n < 3:
        raise GraphInputError("extraction needs n >= 3")
    if u == v or not (0 <= u < G.n and 0 <= v < G.n):
        raise GraphInputError("endpoints must be distinct vertices of G")
    if not is_connected(G):
        return ExtractionResult(
            outcome=SmallCut(cut=frozenset()),
            trace=("disconnected",),
            k=k,
            u=u,
            v=v,
        )
    P = initial_path(G, u, v)
    trace: list[str] = []
    for _ in range(G.n + 1):
        step = extend_or_certify(G, k, P)
        trace.append(step.rule)
        if step.kind == "extended":
            if len(step.path) <= len(P):
                raise EngineError("non-increasing extension step")
            P = step.path
        elif step.kind == "hamilton":
            return ExtractionResult(
                outcome=HamiltonPath(path=P.seq), trace=tuple(trace), k=k, u=u, v=v
            )
        elif step.kind == "certified":
            return ExtractionResult(
                outcome=step.certificate, trace=tuple(trace), k=k, u=u, v=v
            )
        else:
            return ExtractionResult(
                outcome=Stalled(diagnostic=step.diagnostic),
                trace=tuple(trace),
                k=k,
                u=u,
                v=v,
            )
    raise EngineError("extraction exceeded the step bound")
