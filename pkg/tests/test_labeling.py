"""Induced edge labels and the three gracefulness checks."""

import pytest
from hypothesis import given, strategies as st

from roughgrace import (
    DomainError,
    ParameterError,
    VertexLabeling,
    edge_sum,
    induce,
    induced_edge_label,
    make_cycle,
    make_path,
    verify,
)

from conftest import graph_on


class TestInducedEdgeLabel:
    def test_even_sum_halves(self):
        assert induced_edge_label(2, 4, 2) == 4

    def test_odd_sum_rounds_up(self):
        assert induced_edge_label(2, 4, 3) == 5  # ceil(9/2)

    def test_single_edge(self):
        assert induced_edge_label(2, 4, 1) == 4  # ceil(7/2)

    def test_symmetry(self):
        assert induced_edge_label(6, 2, 5) == induced_edge_label(2, 6, 5)

    def test_rejects_nonpositive_m(self):
        with pytest.raises(ParameterError):
            induced_edge_label(2, 4, 0)

    def test_rejects_negative_labels(self):
        with pytest.raises(ParameterError):
            induced_edge_label(-2, 4, 3)

    @given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(1, 10**6))
    def test_equals_ceiling_of_half_sum(self, a, b, m):
        label = induced_edge_label(a, b, m)
        s = edge_sum(a, b, m)
        assert label == -(-s // 2)
        assert induced_edge_label(b, a, m) == label

    @given(st.integers(0, 1000), st.integers(0, 1000), st.integers(1, 1000))
    def test_monotone_in_vertex_sum(self, a, b, m):
        assert induced_edge_label(a + 2, b, m) > induced_edge_label(a, b, m)


class TestVertexLabeling:
    def test_lookup(self):
        f = VertexLabeling({"a": 2, "b": 4})
        assert f.label("a") == 2
        assert len(f) == 2

    def test_missing_vertex(self):
        with pytest.raises(DomainError):
            VertexLabeling({"a": 2}).label("zz")

    def test_non_integer_rejected(self):
        with pytest.raises(ParameterError):
            VertexLabeling({"a": 2.5})

    def test_odd_and_negative_admitted(self):
        # ill-formed labelings must be representable; verify() reports them
        f = VertexLabeling({"a": 3, "b": -2})
        assert f.label("a") == 3


class TestInduce:
    def test_path_example(self):
        g = make_path(4).graph
        el = induce(g, VertexLabeling({"v1": 2, "v2": 4, "v3": 6, "v4": 8}))
        assert el.as_dict() == {
            ("v1", "v2"): 5,
            ("v2", "v3"): 7,
            ("v3", "v4"): 9,
        }
        assert el.graceful

    def test_triangle_example(self):
        g = make_cycle(3).graph
        el = induce(g, VertexLabeling({"v1": 2, "v2": 4, "v3": 6}))
        assert sorted(el.labels) == [5, 6, 7]

    def test_unlabeled_vertex_rejected(self):
        g = make_path(3).graph
        with pytest.raises(DomainError):
            induce(g, VertexLabeling({"v1": 2, "v2": 4}))

    def test_label_for_unknown_vertex_rejected(self):
        g = make_path(2).graph
        with pytest.raises(DomainError):
            induce(g, VertexLabeling({"v1": 2, "v2": 4, "zz": 6}))

    def test_edgeless_graph(self):
        g = graph_on(2, [])
        el = induce(g, VertexLabeling({"x0": 0, "x1": 2}))
        assert el.m == 0
        assert el.graceful  # vacuously: no pair of edges collides

    def test_collision_detected(self):
        # star K_{1,2} with equal-sum leaves: both edges induce the same label
        g = graph_on(3, [(0, 1), (0, 2)])
        el = induce(g, VertexLabeling({"x0": 2, "x1": 0, "x2": 0}))
        assert el.labels[0] == el.labels[1]
        assert not el.graceful


class TestVerify:
    def test_pass(self):
        g = make_path(4).graph
        report = verify(g, VertexLabeling({"v1": 2, "v2": 4, "v3": 6, "v4": 8}))
        assert report.passed
        assert report.labels_even_ok
        assert report.injective_ok
        assert report.edges_distinct_ok

    def test_odd_label_fails_evenness(self):
        g = make_path(2).graph
        report = verify(g, VertexLabeling({"v1": 2, "v2": 3}))
        assert not report.labels_even_ok
        assert report.bad_labels == (("v2", 3),)
        assert not report.passed

    def test_negative_label_fails_evenness(self):
        g = make_path(2).graph
        report = verify(g, VertexLabeling({"v1": -2, "v2": 4}))
        assert report.bad_labels == (("v1", -2),)

    def test_duplicate_labels_reported_pairwise(self):
        g = graph_on(3, [(0, 1), (1, 2)])
        report = verify(g, VertexLabeling({"x0": 2, "x1": 2, "x2": 2}))
        assert not report.injective_ok
        assert len(report.duplicate_pairs) == 3  # all pairs among the triple

    def test_collision_lists_edge_pair(self):
        g = graph_on(3, [(0, 1), (0, 2)])
        report = verify(g, VertexLabeling({"x0": 2, "x1": 0, "x2": 0}))
        assert not report.injective_ok  # x1 and x2 share label 0
        assert not report.edges_distinct_ok
        assert report.colliding_edge_pairs == ((("x0", "x1"), ("x0", "x2")),)

    def test_zero_label_allowed(self):
        g = graph_on(2, [(0, 1)])
        report = verify(g, VertexLabeling({"x0": 0, "x1": 2}))
        assert report.passed


even_labels = st.integers(0, 100).map(lambda k: 2 * k)


@given(st.lists(even_labels, min_size=2, max_size=8, unique=True))
def test_parity_branch_constant_per_graph(labels):
    # with all-even vertex labels, every edge sum has the parity of m, so
    # one rounding branch serves the whole graph
    k = len(labels)
    edges = [(i, i + 1) for i in range(k - 1)]
    g = graph_on(k, edges)
    f = VertexLabeling({f"x{i}": lab for i, lab in enumerate(labels)})
    sums = [edge_sum(f.label(u), f.label(v), g.m) for u, v in g.edges]
    assert len({s % 2 for s in sums}) == 1
    assert sums[0] % 2 == g.m % 2


@given(st.lists(even_labels, min_size=2, max_size=8, unique=True))
def test_verify_pass_iff_injective_and_distinct(labels):
    k = len(labels)
    g = graph_on(k, [(i, (i + 1) % k) for i in range(k)] if k > 2 else [(0, 1)])
    f = VertexLabeling({f"x{i}": lab for i, lab in enumerate(labels)})
    report = verify(g, f)
    el = induce(g, f)
    assert report.passed == (len(set(el.labels)) == len(el.labels))
