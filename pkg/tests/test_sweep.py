from __future__ import annotations

import pytest

from loopspec import SizeLimit, complete, new_digraph
from loopspec.sweep import (CheckOutcome, THEOREM_CHECKS, digraph_from_bits,
                            iterate_all, random_digraph, resolve_theorems,
                            sweep)


class TestIterateAll:
    def test_counts(self):
        assert sum(1 for _ in iterate_all(1)) == 2
        assert sum(1 for _ in iterate_all(2)) == 16
        assert sum(1 for _ in iterate_all(3)) == 512

    def test_distinct(self):
        graphs = list(iterate_all(2))
        assert len(set(graphs)) == 16

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            next(iterate_all(6))

    def test_bit_layout(self):
        # mask 1 sets entry (0, 0): a loop at vertex 0
        assert digraph_from_bits(2, 1) == new_digraph(2, [], [0])
        # bit for entry (0, 1)
        assert digraph_from_bits(2, 2) == new_digraph(2, [(0, 1)], [])


class TestRandomDigraph:
    def test_deterministic(self):
        a = random_digraph(6, 0.4, 0.6, seed=123)
        b = random_digraph(6, 0.4, 0.6, seed=123)
        assert a == b

    def test_extremes(self):
        assert random_digraph(4, 0.0, 0.0, 7) == new_digraph(4)
        assert random_digraph(3, 1.0, 1.0, 7) == complete(3, [0, 1, 2])

    def test_bad_probability(self):
        with pytest.raises(ValueError):
            random_digraph(3, 1.5, 0.0, 0)


class TestResolveTheorems:
    def test_all(self):
        assert resolve_theorems("all") == list(THEOREM_CHECKS)

    def test_subset(self):
        assert resolve_theorems(["mcclelland", "perron"]) == ["mcclelland", "perron"]

    def test_unknown(self):
        with pytest.raises(ValueError):
            resolve_theorems(["nope"])


class TestSweep:
    def test_n2_mcclelland_census(self):
        report = sweep(2, ["mcclelland"])
        assert report.graphs_checked == 16
        assert report.checks["mcclelland"].failed == 0
        census = report.equality_census["mcclelland"]
        witnesses = sorted(entry["witness"] for entry in census)
        assert witnesses == [
            "family: digon-matching",
            "family: digon-matching-one-loop",
            "family: digon-matching-two-loops",
            "family: isolated-vertices",
            "family: isolated-vertices-all-loops",
            "family: isolated-vertices-half-loops",
        ]
        assert not report.census_findings

    def test_n3_trace_identities(self):
        report = sweep(3, ["trace_identities"])
        assert report.checks["trace_identities"].passed == 512

    def test_n1_all(self):
        report = sweep(1, "all")
        assert report.graphs_checked == 2
        assert report.checks["rho_upper"].na == 2
        assert report.ok

    def test_tallies_partition(self):
        report = sweep(2, "all")
        for tally in report.checks.values():
            assert tally.passed + tally.failed + tally.na == report.graphs_checked

    def test_deterministic_modulo_wall_time(self):
        a = sweep(2, "all").to_json_dict()
        b = sweep(2, "all").to_json_dict()
        a["wall_time"] = b["wall_time"] = 0.0
        assert a == b

    def test_sampled_mode_deterministic(self):
        a = sweep(5, ["trace_identities"], exhaustive=False, samples=20,
                  seed=9).to_json_dict()
        b = sweep(5, ["trace_identities"], exhaustive=False, samples=20,
                  seed=9).to_json_dict()
        a["wall_time"] = b["wall_time"] = 0.0
        assert a == b

    def test_parallel_matches_serial(self):
        serial = sweep(2, "all", jobs=1).to_json_dict()
        parallel = sweep(2, "all", jobs=2).to_json_dict()
        serial["wall_time"] = parallel["wall_time"] = 0.0
        assert serial == parallel

    def test_exhaustive_size_limit(self):
        with pytest.raises(SizeLimit):
            sweep(6, ["perron"])

    def test_counterexample_aborts(self, monkeypatch):
        calls = []

        def always_fail(facts):
            calls.append(facts.d)
            return CheckOutcome("fail", "synthetic")

        monkeypatch.setitem(THEOREM_CHECKS, "synthetic_fail", always_fail)
        report = sweep(2, ["synthetic_fail"])
        assert report.graphs_checked == 1
        assert len(report.counterexamples) == 1
        assert report.counterexamples[0]["check"] == "synthetic_fail"
        assert not report.ok
        assert len(calls) == 1


class TestCensusFindings:
    def test_none_below_order_four(self):
        report = sweep(3, ["mcclelland", "rho_lower"])
        assert report.census_findings == []

    def test_directed_triangle_plus_looped_vertex_found(self):
        # The one known gap in the published McClelland equality family
        # list: a directed triangle with a looped isolated vertex attains
        # the bound exactly (E = 3 = sqrt(9)) yet is none of the families.
        report = sweep(4, ["mcclelland"])
        assert report.checks["mcclelland"].failed == 0  # the bound itself holds
        assert len(report.census_findings) == 1
        finding = report.census_findings[0]
        assert finding["bound_id"] == "mcclelland"
        graph = finding["graph"]
        assert graph["n"] == 4
        assert len(graph["arcs"]) == 3 and len(graph["loops"]) == 1
        assert not report.ok
