from collections import Counter
from math import prod

import pytest
from hypothesis import given, strategies as st

from chromcurl.curling import curling_number
from chromcurl.graph import make_graph

from .test_graph import cycle, graphs, path


@pytest.mark.parametrize("g, cn, cnc", [
    (cycle(7), 7, 7),
    (path(4), 2, 4),
    (make_graph(4, [(0, 1), (0, 2), (0, 3)]), 3, 3),
    (make_graph(1), 1, 1),
])
def test_examples(g, cn, cnc):
    r = curling_number(g)
    assert (r.cn, r.cn_compound) == (cn, cnc)


@given(graphs())
def test_against_direct_count(g):
    counts = Counter(len(g.neighbours(v)) for v in range(g.n)).values()
    r = curling_number(g)
    assert r.cn == max(counts)
    assert r.cn_compound == prod(counts)
    assert r.cn <= g.n
    assert r.cn_compound <= r.cn ** r.runs.distinct_count


@given(graphs())
def test_cn_equals_n_iff_regular(g):
    assert (curling_number(g).cn == g.n) == g.is_regular()


@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert curling_number(g.relabel(perm)) == curling_number(g)
