import math

import networkx as nx
import pytest

from core.bounds.formulas import bound_gen, bound_upper_bogdnrv
from core.coloring.solver import chromatic_number, local_chromatic
from core.graphs.generators import complete, cycle, grotzsch, path
from core.graphs.model import Graph
from core.oracle.enumerate import (
    canonical_form,
    count_graphs,
    edge_pairs,
    enumerate_graphs,
    graph_from_code,
    graph_from_mask,
    representatives,
)
from core.oracle.model import OracleResult, describe_graph
from core.oracle.search import f_oracle, is_counterexample
from tests.conftest import small_random_graphs, to_networkx


class TestEnumeration:
    def test_labeled_counts(self):
        assert count_graphs(1) == 1
        assert count_graphs(3) == 8
        assert count_graphs(4) == 64

    @pytest.mark.parametrize("v, classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
    def test_isomorphism_class_counts(self, v, classes):
        assert count_graphs(v, prune=True) == classes

    def test_edge_mask_order(self):
        graphs = list(enumerate_graphs(3))
        assert graphs[0] == Graph.empty(3)
        assert list(graphs[1].edges()) == [(0, 1)]
        assert list(graphs[4].edges()) == [(1, 2)]
        assert graphs[-1] == complete(3)
        assert len(set(graphs)) == 8

    def test_ranges_partition_the_enumeration(self):
        whole = list(enumerate_graphs(4))
        pieces = [list(enumerate_graphs(4, start=s, stop=s + 10)) for s in range(0, 64, 10)]
        assert [G for piece in pieces for G in piece] == whole

    def test_order_out_of_range(self):
        with pytest.raises(ValueError):
            list(enumerate_graphs(0))
        with pytest.raises(ValueError):
            list(enumerate_graphs(9))

    def test_mask_and_code_decoders(self):
        assert len(edge_pairs(4)) == 6
        assert list(graph_from_mask(4, 0b100000).edges()) == [(2, 3)]
        assert list(graph_from_code(4, 0b100000).edges()) == [(0, 1)]


class TestCanonicalForm:
    def test_isomorphic_graphs_share_a_code(self):
        relabeled = Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
        assert canonical_form(relabeled) == canonical_form(cycle(5))

    def test_distinguishes_non_isomorphic(self):
        assert canonical_form(path(4)) != canonical_form(
            Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        )

    def test_code_reproduces_an_isomorphic_graph(self):
        for G in small_random_graphs(60, max_n=7, seed=11):
            canon = graph_from_code(G.n, canonical_form(G))
            assert nx.is_isomorphic(to_networkx(canon), to_networkx(G))
            assert canonical_form(canon) == canonical_form(G)

    def test_agrees_with_networkx_isomorphism(self):
        sample = small_random_graphs(40, max_n=6, seed=3)
        for G in sample:
            for H in sample:
                if G.n != H.n:
                    continue
                same = canonical_form(G) == canonical_form(H)
                assert same == nx.is_isomorphic(to_networkx(G), to_networkx(H))

    def test_representatives_are_canonical(self):
        for code in representatives(5):
            assert canonical_form(graph_from_code(5, code)) == code


class TestOracleResult:
    def test_exact_needs_matching_witness(self):
        with pytest.raises(ValueError):
            OracleResult(mode="EXACT", value=4, witness=None, graphs_examined=1, n=2, r=1, c=2, vmax=5)
        with pytest.raises(ValueError):
            OracleResult(
                mode="EXACT", value=3, witness=cycle(5), graphs_examined=1, n=2, r=1, c=2, vmax=5
            )

    def test_describe(self):
        assert describe_graph(cycle(5)) == "5-cycle"
        assert describe_graph(complete(4)) == "K_4"
        assert describe_graph(path(3)) == "3 vertices, 2 edges"


class TestOracle:
    def test_c5_is_the_first_counterexample(self):
        result = f_oracle(2, 1, 2, 5)
        assert result.mode == "EXACT"
        assert result.value == 4
        assert result.witness.n == 5
        assert canonical_form(result.witness) == canonical_form(cycle(5))
        assert result.summary() == "EXACT f=4, witness: 5-cycle"
        assert result.value >= math.ceil(bound_gen(2, 1, 2).value) - 1

    def test_witness_is_independently_valid(self):
        witness = f_oracle(2, 1, 2, 5).witness
        assert local_chromatic(witness, 1) <= 2
        assert chromatic_number(witness) > 2

    def test_single_color_never_fails_early(self):
        result = f_oracle(1, 1, 1, 2)
        assert result.mode == "LOWER_BOUND"
        assert result.value == 2
        assert result.witness is None

    @pytest.mark.slow
    def test_no_counterexample_up_to_six(self):
        result = f_oracle(5, 1, 2, 6)
        assert result.mode == "LOWER_BOUND"
        assert result.value == 6

    @pytest.mark.parametrize("n, r, c, vmax", [(2, 1, 2, 5), (1, 1, 2, 4), (2, 2, 2, 5), (3, 1, 3, 5)])
    def test_pruning_does_not_change_the_answer(self, n, r, c, vmax):
        plain = f_oracle(n, r, c, vmax, prune=False)
        pruned = f_oracle(n, r, c, vmax, prune=True)
        assert (plain.mode, plain.value, plain.witness) == (
            pruned.mode,
            pruned.value,
            pruned.witness,
        )
        assert pruned.graphs_examined <= plain.graphs_examined

    @pytest.mark.slow
    def test_orders_above_six_are_always_pruned(self):
        result = f_oracle(6, 1, 1, 7, prune=False)
        assert result.mode == "LOWER_BOUND"
        assert result.graphs_examined == count_graphs(7, prune=True) == 1044

    def test_single_edge_is_smallest_for_one_color_two_local(self):
        result = f_oracle(1, 1, 2, 4)
        assert result.mode == "EXACT"
        assert result.value == 1
        assert canonical_form(result.witness) == canonical_form(complete(2))

    def test_exact_values_respect_known_bounds(self):
        for n, r, c in [(1, 1, 2), (2, 1, 2), (2, 2, 2), (1, 2, 3)]:
            result = f_oracle(n, r, c, 5)
            if result.mode == "EXACT":
                assert result.value >= math.ceil(bound_gen(n, r, c).value) - 1
        # n = k(c - 1) with k = 2, c = 2.
        exact = f_oracle(2, 1, 2, 5)
        assert exact.value < bound_upper_bogdnrv(2, 2, 1).value

    def test_counterexample_predicate(self):
        assert is_counterexample(cycle(5), 2, 1, 2)
        assert not is_counterexample(cycle(5), 2, 2, 2)
        assert is_counterexample(grotzsch(), 3, 1, 2)
        assert not is_counterexample(complete(3), 2, 1, 2)

    def test_argument_checks(self):
        with pytest.raises(ValueError):
            f_oracle(0, 1, 2, 3)
        with pytest.raises(ValueError):
            f_oracle(2, 1, 2, 9)
