"""Extraction outcomes and their line-oriented JSON wire format.

These types are shared by the extraction engine and the independent
validator; they carry data only, no checking logic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GraphInputError


@dataclass(frozen=True)
class HamiltonPath:
    kind = "hamilton_path"
    path: tuple[int, ...]


@dataclass(frozen=True)
class SmallCut:
    """Claimed vertex cut of size < 2k."""

    kind = "small_cut"
    cut: frozenset[int]


@dataclass(frozen=True)
class ForbiddenInduced:
    """Claimed induced one-edge-plus-k-isolated-vertices pattern."""

    kind = "forbidden_induced"
    edge: tuple[int, int]
    independent: frozenset[int]


@dataclass(frozen=True)
class ToughnessWitness:
    """Claimed cut refuting toughness > 1: removing ``cut`` isolates
    the independent set ``independent`` = V(G) \\ cut."""

    kind = "toughness_witness"
    cut: frozenset[int]
    independent: frozenset[int]


@dataclass(frozen=True)
class Stalled:
    """The engine could neither extend nor certify; off-hypothesis only."""

    kind = "stalled"
    diagnostic: str


Outcome = HamiltonPath | SmallCut | ForbiddenInduced | ToughnessWitness | Stalled

CERTIFICATE_KINDS = ("small_cut", "forbidden_induced", "toughness_witness")


def outcome_to_dict(outcome: Outcome, k: int, u: int, v: int) -> dict:
    d: dict = {"kind": outcome.kind, "k": k, "u": u, "v": v}
    if isinstance(outcome, HamiltonPath):
        d["path"] = list(outcome.path)
    elif isinstance(outcome, SmallCut):
        d["cut"] = sorted(outcome.cut)
    elif isinstance(outcome, ForbiddenInduced):
        d["edge"] = list(outcome.edge)
        d["independent"] = sorted(outcome.independent)
    elif isinstance(outcome, ToughnessWitness):
        d["cut"] = sorted(outcome.cut)
        d["independent"] = sorted(outcome.independent)
    elif isinstance(outcome, Stalled):
        d["diagnostic"] = outcome.diagnostic
    return d


def outcome_to_json(outcome: Outcome, k: int, u: int, v: int) -> str:
    return json.dumps(outcome_to_dict(outcome, k, u, v), sort_keys=True)


def outcome_from_dict(d: dict) -> tuple[Outcome, int, int, int]:
    """Inverse of outcome_to_dict; returns (outcome, k, u, v)."""
    try:
        kind = d["kind"]
        k, u, v = int(d["k"]), int(d["u"]), int(d["v"])
        if kind == "hamilton_path":
            return HamiltonPath(tuple(d["path"])), k, u, v
        if kind == "small_cut":
            return SmallCut(frozenset(d["cut"])), k, u, v
        if kind == "forbidden_induced":
            z, w = d["edge"]
            return ForbiddenInduced((z, w), frozenset(d["independent"])), k, u, v
        if kind == "toughness_witness":
            return (
                ToughnessWitness(frozenset(d["cut"]), frozenset(d["independent"])),
                k,
                u,
                v,
            )
        if kind == "stalled":
            return Stalled(str(d.get("diagnostic", ""))), k, u, v
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"malformed outcome record: {exc}") from exc
    raise GraphInputError(f"unknown outcome kind {kind!r}")


def outcome_from_json(text: str) -> tuple[Outcome, int, int, int]:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"outcome record is not valid JSON: {exc}") from exc
    return outcome_from_dict(d)
