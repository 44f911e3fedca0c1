import pytest

from chromcurl.families import Family, FamilySpec, ParameterTooSmall, generate, vertex_layout
from chromcurl.graph import degree_sequence, is_connected

ALL = list(Family)
CYCLIC = [f for f in Family if f is not Family.PATH]


def prose_edges(family: Family, n: int) -> set[frozenset]:
    """Edge set built from the family definitions over named vertices:
    ('v', i) rim, ('u', i) outer, 'c' centre. Independent of the generator."""
    v = [("v", i) for i in range(n)]
    u = [("u", i) for i in range(n)]
    E = set()

    def add(a, b):
        E.add(frozenset((a, b)))

    def ring(vs):
        for i in range(len(vs)):
            add(vs[i], vs[(i + 1) % len(vs)])

    if family is Family.PATH:
        for i in range(n - 1):
            add(v[i], v[i + 1])
        return E
    ring(v)
    if family is Family.WHEEL:
        for x in v:
            add(x, "c")
    elif family is Family.DOUBLE_WHEEL:
        ring(u)
        for x in v + u:
            add(x, "c")
    elif family in (Family.HELM, Family.CLOSED_HELM, Family.FLOWER):
        for i in range(n):
            add(v[i], "c")
            add(v[i], u[i])  # pendant
        if family is Family.CLOSED_HELM:
            ring(u)
        if family is Family.FLOWER:
            for x in u:
                add(x, "c")
    elif family is Family.DJEMBE:
        ring(u)
        for i in range(n):
            add(v[i], u[i])
        for x in v + u:
            add(x, "c")
    elif family in (Family.SUNFLOWER, Family.CLOSED_SUNFLOWER, Family.BLOSSOM):
        for i in range(n):
            add(v[i], "c")
            # triangle on rim edge v_i v_{i+1}
            add(u[i], v[i])
            add(u[i], v[(i + 1) % n])
        if family is not Family.SUNFLOWER:
            ring(u)
        if family is Family.BLOSSOM:
            for x in u:
                add(x, "c")
    elif family is Family.ANTIPRISM:
        ring(u)
        for i in range(n):
            add(u[i], v[i])
            add(u[i], v[(i + 1) % n])
    return E


def named(family, n, layout):
    names = {}
    for i, x in enumerate(layout["rim"]):
        names[x] = ("v", i)
    for i, x in enumerate(layout.get("outer", ())):
        names[x] = ("u", i)
    for x in layout.get("centre", ()):
        names[x] = "c"
    return names


@pytest.mark.parametrize("family", ALL)
@pytest.mark.parametrize("n", range(3, 13))
def test_generator_matches_definition(family, n):
    spec = FamilySpec(family, n)
    g = generate(spec)
    names = named(family, n, vertex_layout(spec))
    assert len(names) == g.n
    got = {frozenset((names[a], names[b])) for a, b in g.edges}
    assert got == prose_edges(family, n)


# edge counts per unit of n, checked against prose_edges below before being frozen
EDGES_PER_N = {
    Family.WHEEL: 2, Family.DOUBLE_WHEEL: 4, Family.HELM: 3, Family.CLOSED_HELM: 4,
    Family.FLOWER: 4, Family.DJEMBE: 5, Family.SUNFLOWER: 4, Family.CLOSED_SUNFLOWER: 5,
    Family.ANTIPRISM: 4, Family.BLOSSOM: 6, Family.CYCLE: 1,
}


@pytest.mark.parametrize("family", CYCLIC)
def test_edge_count_formulas(family):
    for n in range(3, 31):
        g = generate(FamilySpec(family, n))
        assert len(g.edges) == EDGES_PER_N[family] * n == len(prose_edges(family, n))


@pytest.mark.parametrize("spec, order, size", [
    (FamilySpec(Family.WHEEL, 5), 6, 10),
    (FamilySpec(Family.HELM, 4), 9, 12),
    (FamilySpec(Family.ANTIPRISM, 4), 8, 16),
    (FamilySpec(Family.BLOSSOM, 4), 9, 24),
])
def test_spot_sizes(spec, order, size):
    g = generate(spec)
    assert (g.n, len(g.edges)) == (order, size)


@pytest.mark.parametrize("family", ALL)
@pytest.mark.parametrize("n", range(3, 31))
def test_connected_and_simple(family, n):
    g = generate(FamilySpec(family, n))
    assert is_connected(g)
    assert all(u < v for u, v in g.edges)
    assert len(set(g.edges)) == len(g.edges)


def test_regularity():
    for n in range(3, 15):
        assert degree_sequence(generate(FamilySpec(Family.ANTIPRISM, n))).runs == ((4, 2 * n),)
        assert degree_sequence(generate(FamilySpec(Family.CYCLE, n))).runs == ((2, n),)


def test_layouts():
    assert vertex_layout(FamilySpec(Family.CYCLE, 5)) == {"rim": range(5)}
    assert vertex_layout(FamilySpec(Family.WHEEL, 5)) == {"rim": range(5), "centre": range(5, 6)}
    assert vertex_layout(FamilySpec(Family.SUNFLOWER, 4)) == {
        "rim": range(4), "outer": range(4, 8), "centre": range(8, 9)}


@pytest.mark.parametrize("family", ALL)
def test_layout_partitions_vertices(family):
    spec = FamilySpec(family, 7)
    covered = sorted(v for group in vertex_layout(spec).values() for v in group)
    assert covered == list(range(generate(spec).n))


def test_sunflower_outer_vertices_avoid_centre():
    g = generate(FamilySpec(Family.SUNFLOWER, 6))
    centre = 12
    assert all(not g.has_edge(u, centre) for u in range(6, 12))
    flower = generate(FamilySpec(Family.FLOWER, 6))
    assert all(flower.has_edge(u, centre) for u in range(6, 12))


def test_parameter_too_small():
    with pytest.raises(ParameterTooSmall):
        FamilySpec(Family.CYCLE, 2)
    with pytest.raises(ParameterTooSmall):
        FamilySpec(Family.PATH, 0)
    assert generate(FamilySpec(Family.PATH, 1)).n == 1


def test_family_parse():
    assert Family.parse("Closed_Sunflower") is Family.CLOSED_SUNFLOWER
    with pytest.raises(ValueError):
        Family.parse("hypercube")


def test_wheel_label():
    assert FamilySpec(Family.WHEEL, 9).label == "W_10"
