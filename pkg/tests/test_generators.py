from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bratteli.characters import ThomaParameter
from bratteli.errors import InputError, ResourceError
from bratteli.generators import (
    OrbitLabel,
    canonical,
    function_to_path,
    ideal_to_partition,
    multidim_young_graph,
    orbit_of,
    pascal_graph,
    path_to_function,
    row_frequencies,
    shape_sequence,
    solvable_group_graph,
    solvable_multiplicity,
    young_graph,
)
from bratteli.graph import iter_paths
from bratteli.partitions import addable_rows

from oracles import count_orbits_burnside, int_partitions, orbits_by_enumeration, restriction_multiplicity


def test_young_small_levels():
    g = young_graph(1)
    assert g.labels(0) == ((),) and g.labels(1) == ((1,),)
    assert young_graph(4).size(4) == 5


def test_young_out_edges():
    g = young_graph(4)
    i = g.vertex(3, (2, 1)).index
    targets = {g.labels(4)[j] for j, _ in g.children(3, i)}
    assert targets == {(3, 1), (2, 2), (2, 1, 1)}


def test_young_edge_counts_match_cell_addition():
    g = young_graph(12)
    for n in range(12):
        assert g.labels(n) == tuple(int_partitions(n))
        for i, lam in enumerate(g.labels(n)):
            assert len(g.children(n, i)) == len(set(lam)) + 1 == len(addable_rows(lam))
        assert len(g.edge_table(n)) == sum(len(set(lam)) + 1 for lam in int_partitions(n))


def test_pascal():
    g = pascal_graph(4)
    assert g.size(0) == 1 and g.size(3) == 4
    assert g.dims(4)[g.vertex(4, (2, 2)).index] == 6
    for n in range(4):
        assert all(len(g.children(n, i)) == 2 for i in range(n + 1))


def test_multidim_counts():
    for d in (2, 3, 4):
        assert multidim_young_graph(d, 1).size(1) == 1
    assert multidim_young_graph(3, 3).size(3) == 6
    g2 = multidim_young_graph(2, 8)
    assert [g2.size(n) for n in range(9)] == [len(int_partitions(n)) for n in range(9)]


def test_multidim_two_is_young():
    g2, y = multidim_young_graph(2, 8), young_graph(8)
    for n in range(9):
        relabel = {j: y.vertex(n, ideal_to_partition(ideal)).index for j, ideal in enumerate(g2.labels(n))}
        assert sorted(relabel.values()) == list(range(y.size(n)))
        if n < 8:
            up = {j: y.vertex(n + 1, ideal_to_partition(ideal)).index for j, ideal in enumerate(g2.labels(n + 1))}
            mapped = {(relabel[i], up[j]): m for (i, j), m in g2.edge_table(n).items()}
            assert mapped == dict(y.edge_table(n))


def test_multidim_budget(monkeypatch):
    monkeypatch.setenv("BRATTELI_MAX_CELLS", "5")
    with pytest.raises(ResourceError):
        multidim_young_graph(3, 4)


# -- solvable group ----------------------------------------------------------


def test_solvable_level_one():
    g = solvable_group_graph(1)
    assert [lab.bits for lab in g.labels(1)] == [(0, 0), (0, 1), (1, 1)]
    assert list(g.dims(1)) == [1, 2, 1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_solvable_counts_burnside(n):
    g = solvable_group_graph(n)
    assert g.size(n) == count_orbits_burnside(n) == len(orbits_by_enumeration(n))
    assert sum(g.dims(n)) == 2 ** (2**n)


def test_solvable_level_two_count():
    assert solvable_group_graph(2).size(2) == 7 == (16 + 4 + 4 + 4) // 4


def test_solvable_dimension_is_orbit_size():
    g = solvable_group_graph(3)
    for n in range(1, 4):
        for lab, d in zip(g.labels(n), g.dims(n)):
            assert d == len(orbit_of(lab.bits))


@pytest.mark.parametrize("n", [1, 2])
def test_multiplicity_matches_restriction(n):
    g = solvable_group_graph(n + 1)
    lower = {min(o): o for o in orbits_by_enumeration(n)}
    upper = {min(o): o for o in orbits_by_enumeration(n + 1)}
    for i, a in enumerate(g.labels(n)):
        for j, b in enumerate(g.labels(n + 1)):
            assert g.multiplicity(n, i, j) == restriction_multiplicity(lower[a.bits], upper[b.bits])


def test_multiplicity_support_and_diagonal_follow_pair_rule():
    # nonzero exactly when the lower orbit is one of the two halves; 1 when the halves agree
    g = solvable_group_graph(3)
    for n in (1, 2):
        for j, up in enumerate(g.labels(n + 1)):
            half = len(up.bits) // 2
            pair = {canonical(up.bits[:half]), canonical(up.bits[half:])}
            for i, low in enumerate(g.labels(n)):
                m = g.multiplicity(n, i, j)
                assert (m > 0) == (low.bits in pair)
                if len(pair) == 1 and m:
                    assert m == 1


def test_multiplicity_can_exceed_two():
    # f0 = 0000 is fixed by all of G_2, f1 = 0001 only by 0: index 4
    low = OrbitLabel(2, (0, 0, 0, 0))
    up = OrbitLabel(3, canonical((0, 0, 0, 0, 0, 0, 0, 1)))
    assert solvable_multiplicity(low, up) == 4


def test_solvable_cap():
    with pytest.raises(ResourceError):
        solvable_group_graph(5)


def test_function_path_bijection_level3():
    g = solvable_group_graph(3)
    seen = set()
    for path in iter_paths(g, 3):
        f = path_to_function(g, path)
        assert function_to_path(g, f) == path
        assert g.labels(3)[path.endpoint_index].bits == canonical(f)
        seen.add(f)
    assert len(seen) == 256


def test_function_path_prefixes_are_restrictions():
    g = solvable_group_graph(3)
    f = (0, 1, 1, 0, 1, 1, 1, 0)
    path = function_to_path(g, f)
    assert path_to_function(g, path.prefix(2)) == f[:4]
    assert path_to_function(g, path.prefix(1)) == f[:2]


def test_orbit_label_hex():
    assert OrbitLabel(1, (0, 1)).hex == "1"
    assert OrbitLabel(2, (0, 1, 1, 1)).hex == "7"
    assert OrbitLabel(3, (0, 0, 0, 1, 0, 1, 1, 1)).hex == "17"


# -- frequencies -------------------------------------------------------------


def test_row_frequencies():
    assert row_frequencies((4, 4), 1) == Fraction(1, 2)
    assert row_frequencies((4, 4), -1) == Fraction(1, 4)
    assert row_frequencies((7,), 1) == 1
    assert row_frequencies((4, 4), 3) == 0
    with pytest.raises(InputError):
        row_frequencies((4, 4), 0)


def test_shape_sequence_examples():
    assert shape_sequence(ThomaParameter((1,)), 9) == (9,)
    assert shape_sequence(ThomaParameter((Fraction(1, 2), Fraction(1, 2))), 8) == (4, 4)
    assert shape_sequence(ThomaParameter(), 4) == (4,)
    assert shape_sequence(ThomaParameter((Fraction(1, 2),), (Fraction(1, 2),)), 8) == (4, 1, 1, 1, 1)
    assert shape_sequence(ThomaParameter((Fraction(1, 4),), (Fraction(1, 4),) * 3), 11) == (5, 3, 3)


@st.composite
def full_thoma(draw):
    """Thoma parameters with alpha and beta summing to exactly 1."""
    k = draw(st.integers(min_value=1, max_value=4))
    weights = draw(st.lists(st.integers(min_value=1, max_value=6), min_size=k, max_size=k))
    split = draw(st.integers(min_value=0, max_value=k))
    total = sum(weights)
    parts = [Fraction(w, total) for w in weights]
    return ThomaParameter(tuple(parts[:split]), tuple(parts[split:]))


@settings(max_examples=150, deadline=None)
@given(full_thoma(), st.integers(min_value=1, max_value=200))
def test_shape_sequence_frequency_bound(theta, n):
    lam = shape_sequence(theta, n)
    assert sum(lam) == n
    nparts = len(theta.alpha) + len(theta.beta)
    bound = Fraction(1 + nparts, n)
    for k, a in enumerate(theta.alpha, start=1):
        assert abs(row_frequencies(lam, k) - a) <= bound
    for k, b in enumerate(theta.beta, start=1):
        assert abs(row_frequencies(lam, -k) - b) <= bound
