import pytest
from hypothesis import given, strategies as st

from iwasawa_towers.cayley import (Multigraph, bouquet, build_cayley_serre, is_connected,
                                   laplacian, read_edge_list, reduce_seed, write_edge_list)
from iwasawa_towers.seeds import SeedSpec, SqrtSeed, parse_seed

EX1 = SeedSpec(2, ("1/3", "3/5"))
EX2 = SeedSpec(3, ("1/2", "1/5", "1/7"))
EX3 = SeedSpec(13, ("sqrt(3)@4", "sqrt(10)@6"))


def test_bouquet():
    assert bouquet(2).edges == {(0, 0): 2}
    assert bouquet(3).vertex_count == 1 and bouquet(3).edge_count() == 3
    assert bouquet(1).edges == {(0, 0): 1}
    with pytest.raises(ValueError):
        bouquet(0)


def test_reduce_seed():
    assert reduce_seed(parse_seed("1/3"), 2, 2) == 3
    assert reduce_seed(parse_seed("3/5"), 2, 1) == 1
    assert reduce_seed(SqrtSeed(3, 4), 13, 1) == 4
    assert reduce_seed(parse_seed("1/3"), 2, 3) == 3
    assert reduce_seed(parse_seed("3/5"), 2, 3) == 7


def test_level_one_graphs():
    g1 = build_cayley_serre(EX1, 1)
    assert g1.vertex_count == 2 and g1.edges == {(0, 1): 4}
    g2 = build_cayley_serre(EX2, 1)
    assert g2.edges == {(0, 1): 3, (0, 2): 3, (1, 2): 3}
    assert build_cayley_serre(EX1, 0) == bouquet(2)
    # figure for l = 13: generators 4 and 6
    g3 = build_cayley_serre(EX3, 1)
    assert all(m == 1 for m in g3.edges.values()) and g3.edge_count() == 26
    assert g3.multiplicity(0, 4) == 1 and g3.multiplicity(0, 6) == 1


def test_level_three_chords():
    # 8-gon with chords v -> v+3 and v -> v+7
    g = build_cayley_serre(EX1, 3)
    expected = {}
    for v in range(8):
        for c in (3, 7):
            key = tuple(sorted((v, (v + c) % 8)))
            expected[key] = expected.get(key, 0) + 1
    assert g.edges == expected


def test_laplacian_examples():
    assert laplacian(Multigraph(2, {(0, 1): 4})) == [[4, -4], [-4, 4]]
    assert laplacian(bouquet(5)) == [[0]]
    L = laplacian(build_cayley_serre(EX2, 1))
    assert all(L[i][i] == 6 for i in range(3))
    assert all(L[i][j] == -3 for i in range(3) for j in range(3) if i != j)


def test_connectivity_examples():
    assert is_connected(build_cayley_serre(EX1, 4))
    assert not is_connected(Multigraph(2, {}))
    assert not is_connected(build_cayley_serre(SeedSpec(2, (2,)), 2))


@st.composite
def specs(draw):
    ell = draw(st.sampled_from([2, 3, 5]))
    pool = [s for s in ["1", "2", "3", "1/3", "2/7", "5/11", "6", "-4", "3/2"]
            if int(s.partition("/")[2] or 1) % ell]
    return SeedSpec(ell, tuple(draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4))))


@given(specs(), st.integers(0, 3))
def test_structure_invariants(spec, n):
    g = build_cayley_serre(spec, n)
    size = spec.prime ** n
    assert g.vertex_count == size
    assert g.edge_count() == spec.t * size
    assert g.degrees() == [2 * spec.t] * size
    L = laplacian(g)
    assert all(L[i][j] == L[j][i] for i in range(size) for j in range(size))
    assert all(sum(row) == 0 for row in L)
    # commutes with the cyclic shift v -> v+1
    assert all(L[i][j] == L[(i + 1) % size][(j + 1) % size]
               for i in range(size) for j in range(size))
    if n >= 1:
        assert is_connected(g) == spec.has_unit_seed()


@given(specs(), st.integers(0, 3))
def test_edge_list_round_trip(spec, n):
    g = build_cayley_serre(spec, n)
    assert read_edge_list(write_edge_list(g)) == g


def test_edge_list_format():
    text = write_edge_list(build_cayley_serre(EX1, 1))
    assert text == "vertices 2\n0 1 4\n"
    assert write_edge_list(bouquet(2)) == "vertices 1\n0 0 2\n"
