from itertools import product

import pytest
from hypothesis import given, settings

from chromcurl.graph import make_graph
from chromcurl.oracle import BudgetExceeded, oracle_chromatic

from .test_graph import cycle, graphs, path


def labelled_lexmax(g):
    """Lex-max labelled class-size vector over all proper colourings, no sorting."""
    for k in range(1, g.n + 1):
        vecs = [tuple(c.count(i) for i in range(k))
                for c in product(range(k), repeat=g.n)
                if len(set(c)) == k and all(c[u] != c[v] for u, v in g.edges)]
        if vecs:
            return k, max(vecs)


def test_c5_by_enumeration():
    # C_5 3-colourings up to label permutation: one vertex alone, the rest
    # alternating, five rotations
    r = oracle_chromatic(cycle(5))
    assert (r.chi, r.lex_max_theta, r.count) == (3, (2, 2, 1), 5)
    assert labelled_lexmax(cycle(5)) == (3, (2, 2, 1))


def test_p4():
    r = oracle_chromatic(path(4))
    assert (r.chi, r.lex_max_theta, r.count) == (2, (2, 2), 1)


def test_k1():
    r = oracle_chromatic(make_graph(1))
    assert (r.chi, r.lex_max_theta) == (1, (1,))


def test_budget():
    with pytest.raises(BudgetExceeded):
        oracle_chromatic(cycle(15))
    assert oracle_chromatic(cycle(15), budget=15).chi == 3


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_matches_labelled_enumeration(g):
    r = oracle_chromatic(g)
    assert (r.chi, r.lex_max_theta) == labelled_lexmax(g)
