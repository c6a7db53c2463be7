import os

import pytest

import polygb

FIXTURES = os.environ.get("POLYGB_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def fixture(name):
    return polygb.Polyomino.load(os.path.join(FIXTURES, "paper", name))


def test_parse_and_roundtrip():
    p = polygb.Polyomino.parse("##\n#.\n", "stair")
    assert p.rank == 3
    assert p.name == "stair"
    assert (p.width, p.height) == (2, 2)
    assert set(p.cells) == {(0, 0), (0, 1), (1, 1)}
    assert polygb.Polyomino.parse(p.ascii()) == p
    assert polygb.Polyomino.parse(p.json()) == p
    assert p.has_cell((0, 1)) and not p.has_cell((1, 0))


def test_constructor_and_geometry():
    ring = polygb.Polyomino([(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)])
    assert ring.rank == 8
    assert polygb.is_thin(ring)
    assert not polygb.is_simple(ring)
    assert polygb.is_thin_cycle(ring)
    assert len(polygb.holes(ring)) == 1
    assert len(ring.vertices) == 16
    ivs = polygb.inner_intervals(ring)
    assert ((0, 0), (1, 1)) in ivs
    assert ((0, 0), (2, 2)) not in ivs


def test_conditions_and_profile():
    stair = polygb.Polyomino.parse("##\n#.\n")
    assert polygb.prop21(stair, True)
    assert polygb.pi(stair, (0, 1), 1)
    assert not polygb.pi(stair, (0, 0), 1)
    rep = polygb.conditions_report(stair)
    profile = {v: ks for v, ks in rep["pi_profile"].items() if ks}
    assert profile == {(0, 1): {1}, (1, 1): {2, 6}, (1, 2): {7}}
    assert rep["certificate"]["sufficient"]
    assert rep["certificate"]["parity"] == "O"
    assert len(rep["quadratic_prediction"]) == 8


def test_engine_agrees_with_pair_condition():
    for name in ["figQ", "fig7_i", "fig8a", "fig8c"]:
        p = fixture(name)
        for order in (1, 2):
            assert polygb.is_quadratic_gb(p, order) == polygb.prop21(p, order % 2 == 1)


def test_reduced_basis_strings():
    cell = polygb.Polyomino([(0, 0)])
    assert polygb.reduced_basis(cell) == ["x_0_0*x_1_1 - x_0_1*x_1_0"]
    u = polygb.Polyomino.parse(".##\n#.#\n###\n")
    assert not polygb.is_quadratic_gb(u, 1)
    assert polygb.is_quadratic_gb(u, 2)
    assert any("*" in line and line.count("*") >= 2 for line in polygb.reduced_basis(u, 1))


def test_primality():
    assert polygb.is_prime(fixture("fig8a"))["prime"]
    verdict = polygb.is_prime(fixture("fig8b"))
    assert not verdict["prime"]
    assert verdict["witness"] == "x_0_1*x_1_5*x_4_0*x_5_4 - x_0_4*x_1_0*x_4_5*x_5_1"
    assert verdict["witness_in_lattice"]
    assert verdict["saturation_passes"] == 2
    found = polygb.find_witness(fixture("fig8b"), 4)
    assert found == (verdict["witness"], 4)
    assert polygb.find_witness(fixture("figQ"), 3) is None


def test_families():
    ring, min_run = polygb.make_thin_cycle("E3,N3,W3,S3")
    assert min_run == 3
    assert ring == polygb.make_grid(4, 4, [(2, 3)], [(2, 3)])
    p1, p2 = polygb.split_p1_p2(ring)
    assert len(p1) + len(p2) == ring.rank
    child = polygb.make_subgrid(ring, [p1[0]])
    assert child.rank == ring.rank - 1
    assert [len(polygb.enumerate_fixed(r)) for r in range(1, 6)] == [1, 2, 6, 19, 63]
    gallery = polygb.gallery()
    assert len(gallery) == 10 and "fig8a" in gallery
    for name, ascii_art in gallery.items():
        assert polygb.gallery_shape(name) == polygb.Polyomino.parse(ascii_art)


def test_thin_obstructions():
    a = fixture("fig8a")
    odd = dict(polygb.thin_obstructions(a, True))
    assert odd == {"skew-i": (0, 2), "skew-ii": (0, 1)}
    assert polygb.thin_obstructions(fixture("fig8c"), True) == []


def test_error_mapping():
    with pytest.raises(polygb.Error, match="ParseError"):
        polygb.Polyomino.parse("")
    with pytest.raises(polygb.Error, match="BadIndex"):
        polygb.pi(polygb.Polyomino([(0, 0)]), (0, 0), 9)
    with pytest.raises(polygb.Error, match="DoesNotClose"):
        polygb.make_thin_cycle("E3,N3,W3,S2")
    with pytest.raises(polygb.Error, match="NotConnected"):
        polygb.Polyomino([(0, 0), (2, 2)])
