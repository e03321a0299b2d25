"""Vectorized level scans: batch symbols, bounds, and record builders."""

import itertools
import math

import numpy as np
import pytest

from skeinvol.errors import BudgetExceeded
from skeinvol.hypvol import V8
from skeinvol.planar import tetrahedron, wheel
from skeinvol.qnum import Level, is_admissible_sixtuple, sixj
from skeinvol.scans import (
    LevelTables,
    ScanRecord,
    appendix_colors,
    appendix_record,
    batch_sixj,
    bound_record,
    family_record,
    maximizer_record,
    round_even_color,
    run_levels,
    sixtuple_chunks,
    tv_tet_record,
    wheel_log_invariant,
    wheel_log_invariant_mp,
)
from skeinvol.yokota import tv_graph, yokota

COLUMN_PAIRS = ((0, 3), (1, 4), (2, 5))


def all_admissible_sixtuples(r):
    lv = Level(r)
    return [t for t in itertools.product(lv.colors, repeat=6) if is_admissible_sixtuple(t, r)]


def symbol_images(t):
    """The symmetry orbit: permute columns, flip an even number of them."""
    out = set()
    cols = [(t[i], t[j]) for i, j in COLUMN_PAIRS]
    for perm in itertools.permutations(range(3)):
        pc = [cols[p] for p in perm]
        for flips in ((0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)):
            cc = [(c[::-1] if f else c) for c, f in zip(pc, flips)]
            out.add((cc[0][0], cc[1][0], cc[2][0], cc[0][1], cc[1][1], cc[2][1]))
    return out


def test_batch_matches_scalar_engine():
    r = 9
    tuples = all_admissible_sixtuples(r)
    tab = LevelTables(r)
    cols = [np.array([t[k] for t in tuples]) for k in range(6)]
    d = batch_sixj(tab, *cols)
    worst = 0.0
    for i, t in enumerate(tuples):
        got = d["sign"][i] * math.exp(d["log"][i]) * (-1j) ** (int(d["quad"][i]) % 4)
        want = sixj(*t, r).to_complex()
        worst = max(worst, abs(got - want) / max(1.0, abs(want)))
    assert worst < 1e-10


def test_chunks_enumerate_all_tuples():
    r = 9
    tab = LevelTables(r)
    seen = set()
    for block in sixtuple_chunks(tab, restrict=False):
        for row in zip(*[np.asarray(x).tolist() for x in block]):
            seen.add(tuple(row))
    assert seen == set(all_admissible_sixtuples(r))
    assert len(seen) == 414


def test_restricted_chunks_cover_all_classes():
    r = 9
    tab = LevelTables(r)
    restricted = set()
    for block in sixtuple_chunks(tab, restrict=True):
        for row in zip(*[np.asarray(x).tolist() for x in block]):
            restricted.add(tuple(row))
    full = set(all_admissible_sixtuples(r))
    assert restricted <= full
    assert len(restricted) < len(full)
    canon = lambda t: min(symbol_images(t))
    assert {canon(t) for t in restricted} == {canon(t) for t in full}


def test_bound_record():
    rec, diag = bound_record(25)
    assert rec.kind == "sixj-bound"
    assert diag["bound_ok"]
    assert diag["tuples"] > 0
    assert rec.slope == pytest.approx((2 * math.pi / 25) * rec.log_value)
    assert rec.target == pytest.approx(V8)


def test_maximizer_record():
    rec = maximizer_record(7)
    c = 2
    want_log = math.log(abs(sixj(c, c, c, c, c, c, 7).to_complex()))
    assert rec.log_value == pytest.approx(want_log, rel=1e-12)
    assert rec.slope == pytest.approx((2 * math.pi / 7) * want_log, rel=1e-12)
    assert rec.color_policy == "maximizer[c=2]"
    assert rec.target == pytest.approx(V8)


def test_round_even_color():
    assert round_even_color(3.0, 11) == 2  # ties break toward zero
    assert round_even_color(5.0, 11) == 4
    assert round_even_color(3.9, 11) == 4
    assert round_even_color(0.4, 11) == 0
    assert round_even_color(-1.0, 11) == 0  # clamped at the bottom
    assert round_even_color(25.0, 11) == 8  # clamped at r - 3


def test_appendix_colors():
    assert appendix_colors("sq-ideal", 101) == (26, 38)
    r = 101
    assert appendix_colors("pent-ideal", r) == (
        round_even_color(r / 5, r),
        round_even_color(2 * r / 5, r),
    )
    s, b = appendix_colors("sq-zero", r)
    assert s == b == round_even_color(r / 2, r)
    with pytest.raises(Exception):
        appendix_colors("no-such-kind", r)


def test_wheel_closed_form_against_engine():
    for n, s, b, r in [(4, 2, 4, 7), (5, 2, 2, 7), (4, 4, 4, 9)]:
        logv, sign, cancel = wheel_log_invariant(r, n, s, b)
        w = wheel(n)
        col = [s] * n + [b] * n  # spokes first, then the rim
        got = yokota(w, col, r)
        want = sign * math.exp(logv)
        assert abs(got - want) < 1e-9 * max(1.0, abs(want))
        assert cancel >= 0.0


def test_wheel_float_vs_highprec():
    for r, n, s, b in [(11, 4, 2, 4), (31, 4, 8, 12), (31, 5, 6, 12)]:
        lf, sf, _ = wheel_log_invariant(r, n, s, b)
        lm, sm, _ = wheel_log_invariant_mp(r, n, s, b)
        assert sf == sm
        assert abs(lf - lm) < 1e-9 * max(1.0, abs(lm))


def test_tv_record_matches_engine():
    rec = tv_tet_record(7)
    want = tv_graph(tetrahedron(), 7).to_complex().real
    assert rec.log_value == pytest.approx(math.log(want), rel=1e-12)
    assert rec.slope == pytest.approx((math.pi / 7) * rec.log_value, rel=1e-12)
    assert rec.kind == "tv-tet"


def test_family_record_prism_identity():
    # the first family member past the base realizes four copies of the symbol
    rec = family_record(7, 1)
    assert rec.log_value == pytest.approx(4 * maximizer_record(7).log_value, rel=1e-10)
    assert rec.target == pytest.approx(2 * V8)
    assert rec.kind == "family-m1"


def test_run_levels_deterministic_and_marks_budget():
    rs = [5, 7, 9, 11]
    one = run_levels(tv_tet_record, rs, threads=1)
    four = run_levels(tv_tet_record, rs, threads=4)
    assert [
        (a.r, a.log_value, a.slope) for a in one
    ] == [(b.r, b.log_value, b.slope) for b in four]

    def boom(r):
        raise BudgetExceeded("over budget")

    recs = run_levels(boom, [7, 9], mark=("tet", "fixed"))
    assert [rec.color_policy for rec in recs] == ["fixed!budget", "fixed!budget"]
    assert all(math.isnan(rec.log_value) for rec in recs)
    assert all(rec.target is None and rec.rel_gap is None for rec in recs)


def test_run_levels_timings():
    recs = run_levels(tv_tet_record, [5, 7], timings=True)
    assert all(rec.wall_ms is not None and rec.wall_ms >= 0 for rec in recs)
    plain = run_levels(tv_tet_record, [5, 7])
    assert all(rec.wall_ms is None for rec in plain)


def test_appendix_record_fields():
    rec = appendix_record("sq-ideal", 101)
    assert rec.r == 101 and rec.kind == "sq-ideal"
    assert rec.color_policy == "sq-ideal[spoke=26 rim=38]"
    assert rec.slope == pytest.approx((math.pi / 101) * rec.log_value, rel=1e-12)
    assert rec.rel_gap == pytest.approx(rec.slope / rec.target - 1.0, rel=1e-12)
    assert abs(rec.rel_gap) < 0.5  # coarse at r=101; the acceptance run tightens this
