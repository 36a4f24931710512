import pytest

from oracles import leaf_deleted_order, naive_rc_valid
from rainbowconn.bounds import lemma1_upper
from rainbowconn.canonical import canonical_form
from rainbowconn.constructions import (
    binary_code_matrix,
    bipartite_code_coloring,
    coloring_from_matrix,
    lemma1_family,
    lemma1_k,
    minimal_rvc_tree,
    tree_rvc_coloring,
)
from rainbowconn.coloring import verify_rc_coloring, verify_rvc_coloring
from rainbowconn.enumerate import enumerate_trees
from rainbowconn.errors import InfeasibleError, InvalidInputError
from rainbowconn.graph import build_graph, complete_bipartite, complete_graph, path_graph, star_graph
from rainbowconn.solver import rc_exact, rvc_exact


@pytest.mark.parametrize("n,k,m", [(8, 3, 15), (4, 2, 4), (20, 4, 64), (3, 1, 2), (7, 3, 12)])
def test_lemma1_examples(n, k, m):
    fam = lemma1_family(n)
    assert fam.k == k
    assert fam.edge_count == m == fam.graph.edge_count
    assert fam.graph == complete_bipartite(k, n - k)
    assert verify_rc_coloring(fam.graph, fam.coloring)


def test_lemma1_20_under_upper_bound():
    assert lemma1_family(20).edge_count == 64 <= lemma1_upper(20) == 91


@pytest.mark.parametrize("n", [0, 1, 2])
def test_lemma1_infeasible(n):
    with pytest.raises(InfeasibleError):
        lemma1_family(n)


def test_lemma1_chain_3_to_60():
    for n in range(3, 61):
        fam = lemma1_family(n)
        k = fam.k
        assert k + 2 ** (k - 1) <= n <= k + 2 ** k
        assert all(not (j + 2 ** (j - 1) <= n <= j + 2 ** j) for j in range(1, k))
        assert verify_rc_coloring(fam.graph, fam.coloring)
        assert fam.coloring.palette_size == 2
        assert fam.edge_count <= lemma1_upper(n)


def test_lemma1_graphs_have_rc_exactly_2():
    for n in range(3, 13):
        assert rc_exact(lemma1_family(n).graph).value == 2


@pytest.mark.parametrize("s,t", [(2, 2), (3, 5), (3, 8), (1, 2), (4, 9)])
def test_code_coloring_verifies(s, t):
    g = complete_bipartite(s, t)
    c = bipartite_code_coloring(s, t)
    assert c.color(0, s) == 0  # column 0 encodes 0
    assert verify_rc_coloring(g, c)


@pytest.mark.parametrize("s,t", [(2, 5), (3, 2), (2, 1)])
def test_code_coloring_refused(s, t):
    with pytest.raises(InvalidInputError):
        bipartite_code_coloring(s, t)


def test_code_criterion_distinct_rows_and_columns():
    # verifies iff rows distinct and columns distinct, for every s <= 3, t <= 8
    for s in range(1, 4):
        for t in range(1, 9):
            if s == t == 1:
                continue  # K_2: a single edge, trivially rainbow
            m = binary_code_matrix(s, t)
            rows_ok = len({tuple(r) for r in m}) == s
            cols_ok = len({tuple(col) for col in zip(*m)}) == t
            g = complete_bipartite(s, t)
            c = coloring_from_matrix(s, m)
            assert verify_rc_coloring(g, c) == (rows_ok and cols_ok) == naive_rc_valid(g, c.assignment), (s, t)


def test_tree_coloring_examples():
    c = tree_rvc_coloring(path_graph(4))
    assert c.palette_size == 2 and c.colors[1] != c.colors[2]
    assert tree_rvc_coloring(star_graph(4)).palette_size == 1
    spider = build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    c = tree_rvc_coloring(spider)
    assert c.palette_size == 4 and verify_rvc_coloring(spider, c)


@pytest.mark.parametrize("g", [complete_graph(2), build_graph(1, []), complete_graph(3)])
def test_tree_coloring_rejects(g):
    with pytest.raises(InvalidInputError):
        tree_rvc_coloring(g)


def test_tree_coloring_all_trees_3_to_9():
    for n in range(3, 10):
        for t in enumerate_trees(n):
            c = tree_rvc_coloring(t)
            assert c.palette_size == leaf_deleted_order(t) == c.colors_used()
            assert verify_rvc_coloring(t, c)


def test_minimal_rvc_tree_examples():
    w = minimal_rvc_tree(5, 3)
    assert canonical_form(w.tree) == canonical_form(path_graph(5))
    w = minimal_rvc_tree(6, 2)
    double_star = build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    assert canonical_form(w.tree) == canonical_form(double_star)
    with pytest.raises(InfeasibleError):
        minimal_rvc_tree(4, 3)


def test_minimal_rvc_tree_values():
    for n in range(4, 10):
        for d in range(2, n - 1):
            w = minimal_rvc_tree(n, d)
            assert w.tree.edge_count == n - 1
            assert verify_rvc_coloring(w.tree, w.coloring) and w.coloring.palette_size == d
            assert rvc_exact(w.tree).value == d
