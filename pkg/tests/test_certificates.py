import json

import pytest

from hamcert import (
    ForbiddenInduced,
    GraphInputError,
    HamiltonPath,
    SmallCut,
    Stalled,
    ToughnessWitness,
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    outcome_from_json,
    outcome_to_json,
    path_graph,
    validate_outcome,
)


class TestHamiltonValidation:
    def test_accepts_valid(self):
        G = cycle_graph(5)
        out = HamiltonPath((0, 4, 3, 2, 1))
        assert validate_outcome(G, 1, 0, 1, out).accepted

    def test_rejects_missing_edge(self):
        G = path_graph(4)
        out = HamiltonPath((0, 1, 3, 2))
        rep = validate_outcome(G, 1, 0, 2, out)
        assert not rep.accepted and rep.code == "missing-edge"

    def test_rejects_wrong_endpoints(self):
        G = complete_graph(4)
        out = HamiltonPath((1, 0, 2, 3))
        rep = validate_outcome(G, 1, 0, 3, out)
        assert not rep.accepted and rep.code == "endpoints"

    def test_rejects_not_spanning(self):
        G = complete_graph(4)
        rep = validate_outcome(G, 1, 0, 2, HamiltonPath((0, 1, 2)))
        assert not rep.accepted and rep.code == "not-spanning"
        rep = validate_outcome(G, 1, 0, 1, HamiltonPath((0, 2, 2, 1)))
        assert not rep.accepted


class TestSmallCutValidation:
    def test_accepts_valid(self):
        G = path_graph(5)
        assert validate_outcome(G, 1, 0, 4, SmallCut(frozenset({2}))).accepted

    def test_accepts_empty_cut_of_disconnected(self):
        G = build_graph(4, [(0, 1), (2, 3)])
        assert validate_outcome(G, 1, 0, 1, SmallCut(frozenset())).accepted

    def test_rejects_oversized(self):
        G = path_graph(5)
        rep = validate_outcome(G, 1, 0, 4, SmallCut(frozenset({1, 3})))
        assert not rep.accepted and rep.code == "too-large"

    def test_rejects_non_cut(self):
        G = complete_graph(5)
        rep = validate_outcome(G, 2, 0, 4, SmallCut(frozenset({1})))
        assert not rep.accepted and rep.code == "not-a-cut"

    def test_rejects_out_of_range(self):
        G = path_graph(4)
        rep = validate_outcome(G, 1, 0, 3, SmallCut(frozenset({9})))
        assert not rep.accepted and rep.code == "range"


class TestForbiddenValidation:
    def test_accepts_valid(self):
        G = cycle_graph(6)
        out = ForbiddenInduced(edge=(0, 1), independent=frozenset({3}))
        assert validate_outcome(G, 1, 0, 5, out).accepted

    def test_rejects_absent_edge(self):
        G = cycle_graph(6)
        out = ForbiddenInduced(edge=(0, 2), independent=frozenset({4}))
        rep = validate_outcome(G, 1, 0, 5, out)
        assert not rep.accepted and rep.code == "no-edge"

    def test_rejects_adjacent_member(self):
        G = cycle_graph(6)
        out = ForbiddenInduced(edge=(0, 1), independent=frozenset({2}))
        rep = validate_outcome(G, 1, 0, 5, out)
        assert not rep.accepted and rep.code == "edge-adjacent"

    def test_rejects_wrong_size(self):
        G = cycle_graph(6)
        out = ForbiddenInduced(edge=(0, 1), independent=frozenset({3, 4}))
        rep = validate_outcome(G, 1, 0, 5, out)
        assert not rep.accepted and rep.code == "size"

    def test_rejects_dependent_set(self):
        G = path_graph(7)
        out = ForbiddenInduced(edge=(0, 1), independent=frozenset({3, 4}))
        rep = validate_outcome(G, 2, 0, 6, out)
        assert not rep.accepted and rep.code == "not-independent"

    def test_rejects_overlap(self):
        G = cycle_graph(6)
        out = ForbiddenInduced(edge=(0, 1), independent=frozenset({0}))
        rep = validate_outcome(G, 1, 0, 5, out)
        assert not rep.accepted and rep.code == "distinct"


class TestToughnessValidation:
    def test_accepts_valid(self):
        G = complete_bipartite(3, 3)
        out = ToughnessWitness(
            cut=frozenset({0, 1, 2}), independent=frozenset({3, 4, 5})
        )
        assert validate_outcome(G, 1, 0, 1, out).accepted

    def test_rejects_bad_partition(self):
        G = complete_bipartite(3, 3)
        out = ToughnessWitness(cut=frozenset({0, 1}), independent=frozenset({3, 4}))
        rep = validate_outcome(G, 1, 0, 1, out)
        assert not rep.accepted and rep.code == "partition"

    def test_rejects_dependent_witness(self):
        G = cycle_graph(6)
        out = ToughnessWitness(
            cut=frozenset({0, 3}), independent=frozenset({1, 2, 4, 5})
        )
        rep = validate_outcome(G, 1, 0, 1, out)
        assert not rep.accepted and rep.code == "not-independent"

    def test_rejects_bad_ratio(self):
        # removing 3 vertices of the 7-cycle leaves at most 3 components,
        # but this cut leaves only 2: ratio 3/2 > 1 proves nothing
        G = cycle_graph(7)
        out = ToughnessWitness(
            cut=frozenset({0, 1, 3}), independent=frozenset({2, 4, 5, 6})
        )
        rep = validate_outcome(G, 1, 0, 1, out)
        assert not rep.accepted
        assert rep.code in ("ratio", "not-independent")

    def test_rejects_empty_cut(self):
        G = build_graph(2, [])
        out = ToughnessWitness(cut=frozenset(), independent=frozenset({0, 1}))
        rep = validate_outcome(G, 1, 0, 1, out)
        assert not rep.accepted


class TestStalledAndUnknown:
    def test_stalled_never_validates(self):
        rep = validate_outcome(complete_graph(4), 1, 0, 1, Stalled("x"))
        assert not rep.accepted and rep.code == "unknown-kind"


class TestSerialization:
    def test_roundtrip_all_kinds(self):
        cases = [
            HamiltonPath((0, 1, 2)),
            SmallCut(frozenset({1, 2})),
            ForbiddenInduced(edge=(0, 1), independent=frozenset({3})),
            ToughnessWitness(cut=frozenset({0}), independent=frozenset({1, 2})),
            Stalled("why"),
        ]
        for out in cases:
            line = outcome_to_json(out, 2, 0, 1)
            back, k, u, v = outcome_from_json(line)
            assert (back, k, u, v) == (out, 2, 0, 1)

    def test_lines_are_single_json_objects(self):
        line = outcome_to_json(SmallCut(frozenset({2, 0})), 1, 0, 3)
        d = json.loads(line)
        assert d["kind"] == "small_cut" and d["cut"] == [0, 2]
        assert (d["k"], d["u"], d["v"]) == (1, 0, 3)

    def test_malformed_records_rejected(self):
        with pytest.raises(GraphInputError):
            outcome_from_json("not json")
        with pytest.raises(GraphInputError):
            outcome_from_json('{"kind": "mystery", "k": 1, "u": 0, "v": 1}')
        with pytest.raises(GraphInputError):
            outcome_from_json('{"kind": "small_cut"}')


class TestValidatorIndependence:
    def test_validator_does_not_import_the_engine(self):
        """The validator must stay an independent check: its module may
        depend on the graph primitives and outcome types only."""
        import hamcert.certify as certify

        with open(certify.__file__) as fh:
            imports = [
                line.strip()
                for line in fh
                if line.strip().startswith(("import ", "from "))
            ]
        for line in imports:
            assert "engine" not in line, line
            assert "invariants" not in line, line
            assert "sweep" not in line, line
