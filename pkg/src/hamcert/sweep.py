"""Batch sweeps over graph families: hypothesis evaluation, certified
extraction, validation, and JSONL reporting.

A sweep with an output sink records one line per (graph, k) with exact
invariant values. Without a sink it runs in a light mode that evaluates
the hypotheses by early-exit boolean scans, which keeps exhaustive
7-vertex runs tractable on one core; light and full mode agree exactly
(both are subset-enumeration based) and the oracle-equivalence tests
pin that down.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Callable, Iterator

from .certify import validate_outcome
from .engine import extract
from .errors import CapacityError
from .graph import (
    EXHAUSTIVE_CEILING,
    FamilySpec,
    Graph,
    components_masks,
    gnp_graph,
    graph_from_code,
    generate,
    mask_of,
)
from .graph6 import write_graph6
from .invariants import (
    cut_scan,
    find_induced_p2_plus_kp1,
    is_hamiltonian_connected,
)
from .outcomes import CERTIFICATE_KINDS, outcome_to_dict

PairPolicy = tuple[str, int]  # ("all", 0) | ("sample", m) | ("none", 0)


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[FamilySpec, ...]
    ks: tuple[int, ...]
    pair_policy: PairPolicy = ("sample", 2)
    samples: int = 1  # per gnp family
    seed: int = 0
    jobs: int = 1
    keep_records: bool = True
    input_graphs: tuple[tuple[int, tuple[int, ...]], ...] = ()  # (n, adj) pairs


@dataclass
class SweepSummary:
    graphs: int = 0
    records: int = 0
    satisfying: dict[int, int] = field(default_factory=dict)
    outcome_tally: dict[str, int] = field(default_factory=dict)
    certificates: int = 0
    validation_failures: int = 0
    violations: list[str] = field(default_factory=list)
    max_extension_overshoot: int = 0  # >0 would break the progress bound
    elapsed_s: float = 0.0

    def merge_violation(self, text: str) -> None:
        if len(self.violations) < 100:
            self.violations.append(text)

    @property
    def clean(self) -> bool:
        return not self.violations and self.validation_failures == 0


def parse_pair_policy(text: str) -> PairPolicy:
    if text == "all":
        return ("all", 0)
    if text == "none":
        return ("none", 0)
    if text.startswith("sample:"):
        return ("sample", int(text.split(":", 1)[1]))
    raise ValueError(f"bad pair policy {text!r}; use all, none, or sample:N")


# --- task stream ------------------------------------------------------------


def _task_stream(cfg: SweepConfig) -> Iterator[tuple]:
    idx = 0
    for n, adj in cfg.input_graphs:
        yield (idx, "graph", n, adj)
        idx += 1
    for fam in cfg.families:
        if fam.kind == "exhaustive":
            if fam.n > EXHAUSTIVE_CEILING:
                raise CapacityError(
                    f"exhaustive sweep capped at n={EXHAUSTIVE_CEILING}, got {fam.n}"
                )
            for code in range(1 << (fam.n * (fam.n - 1) // 2)):
                yield (idx, "code", fam.n, code)
                idx += 1
        elif fam.kind == "gnp":
            for i in range(cfg.samples):
                yield (idx, "gnp", fam.n, fam.p.numerator, fam.p.denominator, cfg.seed, i)
                idx += 1
        else:
            for G in generate(fam):
                yield (idx, "graph", G.n, G.adj)
                idx += 1


def _materialize(task: tuple) -> Graph:
    kind = task[1]
    if kind == "code":
        return graph_from_code(task[2], task[3])
    if kind == "gnp":
        _, _, n, num, den, seed, i = task
        return gnp_graph(n, Fraction(num, den), seed, i)
    return Graph(task[2], task[3])


# --- light-mode hypothesis scan ---------------------------------------------


def quick_hypotheses(G: Graph, ks: tuple[int, ...]) -> dict[int, tuple[bool, bool, bool]]:
    """(is_2k_connected, forbidden_free, toughness_exceeds_one) per k,
    by early-exit boolean scans; exact, no approximation.
    """
    n = G.n
    adj = G.adj
    full = G.full_mask
    complete = G.is_complete()
    if complete:
        tough_gt1 = True
    else:
        tough_gt1 = True
        verts = range(n)
        for size in range(0, n // 2 + 1):
            for sub in combinations(verts, size):
                rm = mask_of(sub)
                c = len(components_masks(adj, full & ~rm))
                if c >= 2 and size <= c:
                    tough_gt1 = False
                    break
            if not tough_gt1:
                break
    mindeg = min(m.bit_count() for m in adj) if n > 1 else 0
    out = {}
    for k in ks:
        if complete:
            is2k = n - 1 >= 2 * k
        elif mindeg < 2 * k:
            is2k = False
        else:
            is2k = True
            for size in range(0, min(2 * k, n - 1)):
                for sub in combinations(range(n), size):
                    rm = mask_of(sub)
                    if len(components_masks(adj, full & ~rm)) >= 2:
                        is2k = False
                        break
                if not is2k:
                    break
        if is2k and tough_gt1:
            free = find_induced_p2_plus_kp1(G, k) is None
        else:
            free = None  # not needed for the light verdict
        out[k] = (is2k, free, tough_gt1)
    return out


# --- per-graph processing ---------------------------------------------------


def _select_pairs(n: int, policy: PairPolicy, seed: int, idx: int, k: int) -> list[tuple[int, int]]:
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    kind, m = policy
    if kind == "all":
        return all_pairs
    if kind == "none":
        return []
    rng = Random(f"hamcert-pairs:{seed}:{idx}:{k}")
    m = min(m, len(all_pairs))
    return sorted(rng.sample(all_pairs, m))


def process_task(task: tuple, cfg: SweepConfig) -> tuple[list[dict], dict]:
    """Run one graph through every k: hypothesis evaluation, extraction
    on the selected pairs, validation. Returns (records, summary delta)."""
    idx = task[0]
    G = _materialize(task)
    n = G.n
    started = time.perf_counter()
    records: list[dict] = []
    delta: dict = {
        "graphs": 1,
        "satisfying": {},
        "tally": {},
        "certificates": 0,
        "validation_failures": 0,
        "violations": [],
        "max_overshoot": 0,
    }
    word: str | None = None

    if cfg.keep_records:
        kappa, tough = cut_scan(G)
        word = write_graph6(G)
        hyp = {
            k: (kappa >= 2 * k, None, tough.is_infinite or tough.value > 1)
            for k in cfg.ks
        }
    else:
        kappa, tough = None, None
        hyp = quick_hypotheses(G, cfg.ks)

    for k in cfg.ks:
        is2k, free, tough_gt1 = hyp[k]
        if free is None and (cfg.keep_records or (is2k and tough_gt1)):
            free = find_induced_p2_plus_kp1(G, k) is None
        all_hyp = bool(is2k and free and tough_gt1)
        if all_hyp:
            delta["satisfying"][k] = delta["satisfying"].get(k, 0) + 1

        if n >= 3:
            pairs = (
                [(u, v) for u in range(n) for v in range(u + 1, n)]
                if all_hyp
                else _select_pairs(n, cfg.pair_policy, cfg.seed, idx, k)
            )
        else:
            pairs = []
        tally: dict[str, int] = {}
        valid = 0
        for (u, v) in pairs:
            res = extract(G, k, u, v)
            kind = res.outcome.kind
            tally[kind] = tally.get(kind, 0) + 1
            overshoot = res.extended_steps - max(0, n - 2)
            if overshoot > delta["max_overshoot"]:
                delta["max_overshoot"] = overshoot
            if kind == "stalled":
                if all_hyp:
                    word = word or write_graph6(G)
                    delta["violations"].append(
                        f"stalled on hypothesis-satisfying graph {word} k={k} pair=({u},{v})"
                    )
            else:
                report = validate_outcome(G, k, u, v, res.outcome)
                if kind in CERTIFICATE_KINDS:
                    delta["certificates"] += 1
                if not report.accepted:
                    word = word or write_graph6(G)
                    delta["validation_failures"] += 1
                    delta["violations"].append(
                        f"invalid {kind} on {word} k={k} pair=({u},{v}): {report.code}"
                    )
                else:
                    valid += 1
                if all_hyp and kind != "hamilton_path":
                    word = word or write_graph6(G)
                    delta["violations"].append(
                        f"certificate {kind} on hypothesis-satisfying graph {word} "
                        f"k={k} pair=({u},{v})"
                    )
        for kind, c in tally.items():
            delta["tally"][kind] = delta["tally"].get(kind, 0) + c

        ham_connected: bool | None = None
        if all_hyp and n >= 3:
            ham_connected = is_hamiltonian_connected(G).is_hamiltonian_connected
            if not ham_connected:
                word = word or write_graph6(G)
                delta["violations"].append(
                    f"hypothesis-satisfying graph {word} (k={k}) is not "
                    "hamiltonian-connected"
                )

        if cfg.keep_records:
            records.append(
                {
                    "graph6": word,
                    "n": n,
                    "k": k,
                    "kappa": kappa,
                    "toughness": tough.describe(),
                    "forbidden_free": free,
                    "all_hypotheses": all_hyp,
                    "hamiltonian_connected": ham_connected,
                    "pairs": tally,
                    "pairs_attempted": len(pairs),
                    "validation_passes": valid,
                    "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
                }
            )
    return records, delta


def _merge(summary: SweepSummary, records: list[dict], delta: dict) -> None:
    summary.graphs += delta["graphs"]
    summary.records += len(records)
    for k, c in delta["satisfying"].items():
        summary.satisfying[k] = summary.satisfying.get(k, 0) + c
    for kind, c in delta["tally"].items():
        summary.outcome_tally[kind] = summary.outcome_tally.get(kind, 0) + c
    summary.certificates += delta["certificates"]
    summary.validation_failures += delta["validation_failures"]
    for v in delta["violations"]:
        summary.merge_violation(v)
    summary.max_extension_overshoot = max(
        summary.max_extension_overshoot, delta["max_overshoot"]
    )


def run_sweep(
    cfg: SweepConfig,
    sink: Callable[[str], None] | None = None,
    progress: Callable[[int], None] | None = None,
) -> SweepSummary:
    """Drive the sweep; ``sink`` receives one JSON line per record."""
    summary = SweepSummary()
    started = time.perf_counter()
    tasks = _task_stream(cfg)
    if cfg.jobs > 1:
        import multiprocessing as mp

        with mp.Pool(cfg.jobs) as pool:
            for records, delta in pool.imap(
                _pool_worker, ((t, cfg) for t in tasks), chunksize=256
            ):
                _merge(summary, records, delta)
                _emit(records, sink)
                if progress and summary.graphs % 50000 == 0:
                    progress(summary.graphs)
    else:
        for task in tasks:
            records, delta = process_task(task, cfg)
            _merge(summary, records, delta)
            _emit(records, sink)
            if progress and summary.graphs % 50000 == 0:
                progress(summary.graphs)
    summary.elapsed_s = time.perf_counter() - started
    return summary


def _emit(records: list[dict], sink) -> None:
    if sink is not None:
        for rec in records:
            sink(json.dumps(rec, sort_keys=True))


def _pool_worker(args):
    task, cfg = args
    return process_task(task, cfg)


def extraction_record(G: Graph, k: int, u: int, v: int) -> dict:
    """Single extraction with validation, as a serializable report."""
    res = extract(G, k, u, v)
    d = outcome_to_dict(res.outcome, k, u, v)
    report = validate_outcome(G, k, u, v, res.outcome)
    return {
        "outcome": d,
        "trace": list(res.trace),
        "validated": report.accepted,
        "validation_code": report.code,
    }
