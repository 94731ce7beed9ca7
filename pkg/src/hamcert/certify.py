"""Independent validation of extraction outcomes.

Deliberately shares no logic with the engine: every check is a direct
transcription of the definition being claimed, built from graph-core
primitives only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, components_after_removal
from .outcomes import (
    ForbiddenInduced,
    HamiltonPath,
    Outcome,
    SmallCut,
    ToughnessWitness,
)


@dataclass(frozen=True)
class ValidationReport:
    outcome_kind: str
    accepted: bool
    code: str = "ok"
    detail: str = ""


def _reject(kind: str, code: str, detail: str) -> ValidationReport:
    return ValidationReport(outcome_kind=kind, accepted=False, code=code, detail=detail)


def _accept(kind: str) -> ValidationReport:
    return ValidationReport(outcome_kind=kind, accepted=True)


def _check_hamilton(G: Graph, u: int, v: int, outcome: HamiltonPath) -> ValidationReport:
    kind = outcome.kind
    path = outcome.path
    if len(path) != G.n or set(path) != set(range(G.n)):
        return _reject(kind, "not-spanning", "path does not visit every vertex once")
    if len(set(path)) != len(path):
        return _reject(kind, "repeat", "path repeats a vertex")
    if path[0] != u or path[-1] != v:
        return _reject(kind, "endpoints", f"endpoints are not ({u},{v})")
    for a, b in zip(path, path[1:]):
        if not G.has_edge(a, b):
            return _reject(kind, "missing-edge", f"consecutive pair {a}-{b} not adjacent")
    return _accept(kind)


def _check_small_cut(G: Graph, k: int, outcome: SmallCut) -> ValidationReport:
    kind = outcome.kind
    cut = outcome.cut
    if any(not 0 <= w < G.n for w in cut):
        return _reject(kind, "range", "cut contains a non-vertex")
    if len(cut) >= 2 * k:
        return _reject(kind, "too-large", f"|cut|={len(cut)} is not below {2 * k}")
    if len(components_after_removal(G, cut)) < 2:
        return _reject(kind, "not-a-cut", "removal leaves fewer than two components")
    return _accept(kind)


def _check_forbidden(G: Graph, k: int, outcome: ForbiddenInduced) -> ValidationReport:
    kind = outcome.kind
    z, w = outcome.edge
    members = outcome.independent
    if any(not 0 <= c < G.n for c in (z, w, *members)):
        return _reject(kind, "range", "witness contains a non-vertex")
    if len(members) != k:
        return _reject(kind, "size", f"independent set has {len(members)} vertices, not {k}")
    if z == w or z in members or w in members:
        return _reject(kind, "distinct", "the k+2 witness vertices are not distinct")
    if not G.has_edge(z, w):
        return _reject(kind, "no-edge", f"claimed edge {z}-{w} is absent")
    for c in members:
        if G.has_edge(c, z) or G.has_edge(c, w):
            return _reject(kind, "edge-adjacent", f"vertex {c} touches the edge")
    for c in members:
        for d in members:
            if c < d and G.has_edge(c, d):
                return _reject(kind, "not-independent", f"edge {c}-{d} inside the set")
    return _accept(kind)


def _check_toughness(G: Graph, outcome: ToughnessWitness) -> ValidationReport:
    kind = outcome.kind
    cut = outcome.cut
    members = outcome.independent
    if any(not 0 <= c < G.n for c in cut | members):
        return _reject(kind, "range", "witness contains a non-vertex")
    if cut & members or cut | members != set(range(G.n)):
        return _reject(kind, "partition", "cut and witness set do not partition V(G)")
    for c in members:
        for d in members:
            if c < d and G.has_edge(c, d):
                return _reject(kind, "not-independent", f"edge {c}-{d} inside the set")
    comps = components_after_removal(G, cut)
    if len(comps) < 2:
        return _reject(kind, "not-a-cut", "removal leaves fewer than two components")
    if len(cut) > len(comps):
        return _reject(
            kind,
            "ratio",
            f"|cut|={len(cut)} exceeds the component count {len(comps)}; "
            "toughness <= 1 not established",
        )
    if len(cut) < 1:
        return _reject(kind, "empty-cut", "toughness witness needs a nonempty cut")
    return _accept(kind)


def validate_outcome(G: Graph, k: int, u: int, v: int, outcome: Outcome) -> ValidationReport:
    """Accept iff the outcome proves what its kind claims about (G,k,u,v)."""
    if isinstance(outcome, HamiltonPath):
        return _check_hamilton(G, u, v, outcome)
    if isinstance(outcome, SmallCut):
        return _check_small_cut(G, k, outcome)
    if isinstance(outcome, ForbiddenInduced):
        return _check_forbidden(G, k, outcome)
    if isinstance(outcome, ToughnessWitness):
        return _check_toughness(G, outcome)
    return _reject(getattr(outcome, "kind", "unknown"), "unknown-kind", "not a validatable outcome")
