import math
import random

import pytest

from stickydisc.configuration import (
    Configuration,
    StructureError,
    boundary_polygon,
    boundary_sites,
    is_connected,
    is_simply_connected,
    max_bond_formula,
)
from stickydisc.constructors import (
    DegenerateParams,
    HexCorners,
    corner_components,
    degenerate,
    enclosing_hexagon,
    hexagon,
    hexagon_sites,
    normalize,
    spiral,
)
from stickydisc.lattice import Site, canonical_form, neighbors


def test_hexagon_small():
    assert hexagon(0).sites == frozenset({Site(0, 0)})
    h1 = hexagon(1)
    assert h1.sites == frozenset({Site(0, 0)}) | neighbors(Site(0, 0))
    assert h1.bond_count == 12
    h4 = hexagon(4)
    assert h4.n == 61
    assert h4.bond_count == 156
    with pytest.raises(ValueError):
        hexagon(-1)


def test_hexagon_counts_and_bonds():
    for k in list(range(0, 33)) + [64, 128]:
        config = hexagon(k)
        n = 3 * k * (k + 1) + 1
        assert config.n == n
        assert config.bond_count == max_bond_formula(n)


def test_hexagon_matches_corner_hull():
    for k in (1, 2, 5):
        corners = HexCorners(k).corners
        hull = enclosing_hexagon(hexagon(k))
        assert tuple(hull.corners) == corners
        assert hull.side_lengths == (k,) * 6
        assert hull.lattice_sites() == hexagon_sites(k)


def test_spiral_examples():
    assert spiral(61).sites == hexagon(4).sites
    s62 = spiral(62)
    assert s62.sites == hexagon(4).sites | {Site(5, -4)}
    assert s62.bond_count == 158
    assert spiral(5).bond_count == 7
    with pytest.raises(ValueError):
        spiral(0)


def test_spiral_bond_counts_dense_and_random():
    for n in range(1, 260):
        assert spiral(n).bond_count == max_bond_formula(n)
    rng = random.Random(9)
    for n in rng.sample(range(260, 100_000), 25):
        assert spiral(n).bond_count == max_bond_formula(n)


def test_spiral_outputs_are_connected_and_hole_free():
    for n in (1, 2, 5, 12, 40, 100, 200):
        config = spiral(n)
        assert is_connected(config)
        assert is_simply_connected(config)


def test_degenerate_examples():
    d4 = degenerate(4)
    assert d4.n == 62 and d4.bond_count == 158
    assert canonical_form(d4.sites) != canonical_form(spiral(62).sites)
    d8 = degenerate(8)
    assert d8.n == 218 and d8.bond_count == 602
    d2 = degenerate(2)
    assert d2.n == 20 and d2.bond_count == 44
    with pytest.raises(ValueError):
        degenerate(1)


def test_degenerate_params():
    p = DegenerateParams.for_hexagon_side(8)
    assert (p.k, p.n, p.m) == (8, 218, 2)
    assert DegenerateParams.for_hexagon_side(2).m == 1
    assert DegenerateParams.for_hexagon_side(32).m == 4
    assert DegenerateParams.for_hexagon_side(128).m == 8


def test_degenerate_matches_spiral_bond_count():
    for k in range(2, 33):
        d = degenerate(k)
        n = 3 * k * (k + 1) + 2
        assert d.n == n
        assert d.bond_count == spiral(n).bond_count == max_bond_formula(n)


def test_degenerate_distinct_canonical_forms_from_k4():
    for k in (4, 5, 6, 8, 12):
        d = degenerate(k)
        s = spiral(d.n)
        assert canonical_form(d.sites) != canonical_form(s.sites)


def test_normalize_hexagon_is_a_fixed_point():
    result = normalize(hexagon(4))
    assert result.moved_atoms == 0
    assert result.configuration.sites == hexagon(4).sites


def test_normalize_spiral_62():
    result = normalize(spiral(62))
    out = result.configuration
    assert out.n == 62 and out.bond_count == 158
    assert result.moved_atoms <= 6 * math.sqrt(62)
    # Exactly one corner component remains, at the bottom-right corner, and
    # it is a single partial row of the enclosing hexagon.
    decomp = corner_components(out)
    nonempty = [i for i, c in enumerate(decomp.components) if c]
    assert nonempty == [0]
    missing = decomp.components[0]
    assert len({s.n for s in missing}) == 1


def test_normalize_replay_preserves_bonds_at_every_move():
    for config in (spiral(62), spiral(100), degenerate(8)):
        result = normalize(config)
        cur = set(config.sites)
        for u, w in result.moves:
            cur.discard(u)
            cur.add(w)
            assert Configuration(cur).bond_count == config.bond_count
        assert frozenset(cur) == result.configuration.sites


def test_normalize_move_bound_on_families():
    rng = random.Random(77)
    ns = list(range(3, 80)) + rng.sample(range(80, 3000), 15)
    for n in ns:
        result = normalize(spiral(n))
        assert result.moved_atoms <= 6 * math.sqrt(n)
    for k in (2, 3, 4, 8, 16, 32):
        d = degenerate(k)
        result = normalize(d)
        assert result.moved_atoms <= 6 * math.sqrt(d.n)
        assert result.configuration.bond_count == d.bond_count


def test_normalize_rejects_non_ground_states():
    row = Configuration([Site(i, 0) for i in range(5)])
    with pytest.raises(ValueError):
        normalize(row)


def test_enclosing_hexagon_spiral_62():
    hull = enclosing_hexagon(spiral(62))
    assert sorted(hull.side_lengths) == [3, 4, 4, 4, 5, 5]


def test_enclosing_hexagon_single_row():
    for j in (1, 4):
        hull = enclosing_hexagon([Site(i, 0) for i in range(j + 1)])
        assert sorted(hull.side_lengths) == [0, 0, 0, 0, j, j]


def test_enclosing_hexagon_empty_raises():
    with pytest.raises(ValueError):
        enclosing_hexagon(Configuration())


def test_corner_components_hexagon_all_empty():
    for k in (1, 3, 6):
        decomp = corner_components(hexagon(k))
        assert all(not c for c in decomp.components)
        # Every side is fully occupied from corner to corner.
        hull = decomp.hull
        for i, interval in enumerate(decomp.side_intervals):
            assert interval == (hull.corners[i], hull.corners[(i + 1) % 6])


def test_corner_components_degenerate_sizes():
    d = degenerate(8)
    decomp = corner_components(d)
    assert decomp.total_deficiency <= min(decomp.hull.side_lengths)
    for comp in decomp.components:
        if comp:
            assert len(comp) <= max(decomp.hull.side_lengths)


def test_constructor_outputs_pass_boundary_extraction():
    for config in (hexagon(3), spiral(40), degenerate(5), normalize(spiral(90)).configuration):
        poly = boundary_polygon(config)
        assert len(poly) == len(boundary_sites(config))
