"""Invariants of colored planar graphs: values, doubling, duality."""

import math

import pytest

from skeinvol.planar import (
    PlanarGraph,
    double_at,
    square_pyramid,
    tetrahedron,
    theta,
    triangle,
    triangular_prism,
    wheel,
)
from skeinvol.qnum import circle_weight, kirby_norm, quantum_integer, sixj
from skeinvol.yokota import (
    desingularize,
    fourier_dual,
    hopf_pairing,
    maximizing_color,
    tv_graph,
    yokota,
    yokota_ext,
    yokota_kirby,
    yokota_table,
)

TET_SLOTS = (0, 1, 2, 5, 4, 3)


def test_tetrahedron_all_two():
    got = yokota(tetrahedron(), (2,) * 6, 5)
    assert abs(got - 6.854102) < 1e-4
    want = sixj(2, 2, 2, 2, 2, 2, 5).to_complex().real ** 2
    assert abs(got - want) < 1e-10


def test_vertexless_graph_is_one():
    g = PlanarGraph(1, (), ((),))
    assert yokota(g, (), 5) == 1.0


def test_triangle_closed_form():
    # the invariant of a constant-colored triangle is the reciprocal circle weight
    for c, want in [(0, 1.0), (2, 1.8019377358048383), (4, -0.8019377358048383)]:
        got = yokota(triangle(), (c, c, c), 7)
        assert abs(got - want) < 1e-12
        assert abs(got - 1.0 / circle_weight(c, 7)) < 1e-12


def test_negative_value_is_signed_square():
    col = (0, 0, 0, 4, 4, 4)
    got = yokota(tetrahedron(), col, 7)
    assert abs(got - (-0.8019377358048385)) < 1e-10
    from skeinvol.bracket import bracket

    b = bracket(tetrahedron(), col, 7).to_complex()
    assert abs(got - b * b) < 1e-10  # the square keeps the phase


def test_prism_power_identity():
    got = yokota(triangular_prism(), (2,) * 9, 7)
    want = sixj(2, 2, 2, 2, 2, 2, 7).to_complex().real ** 4
    assert abs(got - want) < 1e-9 * max(1.0, abs(want))


def test_tet_symbol_squares():
    for col in [(2, 2, 2, 4, 4, 4), (4, 4, 4, 4, 4, 4), (6, 4, 2, 4, 2, 6)]:
        got = yokota(tetrahedron(), col, 9)
        s = sixj(*(col[s] for s in TET_SLOTS), 9).to_complex()
        want = (s * s).real
        assert abs(got - want) < 1e-9 * max(1.0, abs(want))


def test_desingularize_counts():
    g, col, added = desingularize(tetrahedron(), (2,) * 6)
    assert added == [] or added == ()
    assert g.ne == 6 and len(col) == 6

    pyr = square_pyramid()
    g, col, added = desingularize(pyr, (2,) * 8)
    assert len(added) == 1
    assert g.nv == pyr.nv + 1
    assert col[added[0]] is None

    w = wheel(6)
    g, col, added = desingularize(w, (2,) * 12)
    assert len(added) == 3
    assert g.nv == 10
    assert all(col[e] is None for e in added)
    assert all(c == 2 for c in col[: w.ne])


def test_doubling_squares_the_invariant():
    pyr = square_pyramid()
    col = (2,) * pyr.ne
    g2, col2, _, _ = double_at(pyr, 0, col)
    single = yokota_ext(pyr, col, 5)
    doubled = yokota_ext(g2, col2, 5)
    lhs = (single * single).to_complex()
    rhs = doubled.to_complex()
    assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(lhs))


def test_kirby_colored_theta():
    got = yokota_kirby(theta(), 5).to_complex()
    want = kirby_norm(5) ** 2  # first betti number of the theta graph is 2
    assert abs(got - want) < 1e-9
    assert abs(got - 1.9098300562505266) < 1e-6


def test_tv_sums_magnitudes():
    tab = yokota_table(tetrahedron(), 5)
    assert len(tab) == 15
    brute = sum(abs(v.to_complex()) for v in tab.values())
    got = tv_graph(tetrahedron(), 5).to_complex()
    assert abs(got - brute) < 1e-9
    assert got.imag == 0 or abs(got.imag) < 1e-12


def test_hopf_pairing_values():
    assert hopf_pairing(0, 0, 7) == 1.0
    for i, j, r in [(2, 2, 7), (2, 4, 7), (4, 4, 11), (6, 2, 11)]:
        want = (-1) ** (i + j) * math.sin(2 * math.pi * (i + 1) * (j + 1) / r) / math.sin(
            2 * math.pi / r
        )
        assert abs(hopf_pairing(i, j, r) - want) < 1e-12
        assert hopf_pairing(i, j, r) == hopf_pairing(j, i, r)


def test_fourier_on_self_dual_graph():
    got = fourier_dual(tetrahedron(), 5, (2,) * 6).to_complex()
    assert abs(got - 6.854101966249685) < 1e-6


def test_fourier_consistent_with_table():
    tab = yokota_table(theta(), 7)
    with_table = fourier_dual(theta(), 7, (2, 2, 2), table=tab).to_complex()
    without = fourier_dual(theta(), 7, (2, 2, 2)).to_complex()
    assert abs(with_table - without) < 1e-12 * max(1.0, abs(without))


def test_maximizing_color_pins():
    assert [maximizing_color(r) for r in (5, 7, 9, 11, 13)] == [2, 2, 4, 4, 6]
