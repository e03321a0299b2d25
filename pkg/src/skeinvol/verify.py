"""Cross-checks that pin the engine against independent evaluation routes.

Every convention in the package (vertex normalization, bigon collapse,
fusion coefficients, the Kirby color, the Fourier pairing) is locked by
at least one identity that can be computed two ways.  This module
gathers those identities into named suites; each suite returns a list of
CheckResult records so the command-line ``verify`` subcommand and the
test suite can share one implementation.

Suites
------
oracle         6j values against exact cyclotomic-field arithmetic
bigon          circle/theta pinning and bigon collapse via full reduction
axiom3         tetrahedron bracket equals the 6j-symbol, exhaustively
axiom7         zero-colored edge removal with its square-root branch
desing         invariant independence from the fan-tree anchor choice
doubling       invariant of a doubled graph is the square
vertexsum      multiplicativity under vertex sums
fusion         termwise fusion-rule consistency and order independence
kirby          Kirby-colored invariant equals N^betti
nidentity      sum of squared circle weights equals r/(4 sin^2(2pi/r))
fourier        the dual-graph Fourier identity, both sides computed
sixj-symmetry  tetrahedral symmetries of the 6j-symbol
hopf           Hopf pairing forms, symmetry, and the constant-sign row
volumes        hyperbolic volume constants and the Lobachevsky oracle
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import mpmath as mp

from .bracket import bracket, fusion_at
from .errors import BudgetExceeded
from .hypvol import V8, antiprism_volume, lobachevsky, named_volumes
from .planar import (
    PlanarGraph,
    betti,
    circle,
    cube,
    double_at,
    dual,
    octahedron,
    pentagonal_pyramid,
    square_pyramid,
    tetrahedron,
    theta,
    triangle,
    triangular_prism,
    vertex_sum_with_maps,
)
from .qnum import (
    MP_LOCK,
    Level,
    circle_weight,
    fusion_colors,
    is_admissible_triple,
    kirby_norm,
    sixj,
)
from .yokota import (
    admissible_colorings,
    fourier_dual,
    hopf_pairing,
    maximizing_color,
    yokota_ext,
    yokota_kirby,
    yokota_table,
)

__all__ = [
    "CheckResult",
    "FIXTURES",
    "SUITES",
    "run_suite",
    "suite_names",
]

# The tetrahedron fixture lists its edges as (0,1),(0,2),(0,3),(1,2),
# (1,3),(2,3); the 6j-symbol pairs opposite edges across its columns, so
# the fixture coloring (c0,...,c5) feeds the symbol as (c0,c1,c2,c5,c4,c3).
TET_SLOTS = (0, 1, 2, 5, 4, 3)

FIXTURES: Dict[str, Callable[[], PlanarGraph]] = {
    "circle": circle,
    "theta": theta,
    "triangle": triangle,
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "square-pyramid": square_pyramid,
    "pentagonal-pyramid": pentagonal_pyramid,
    "triangular-prism": triangular_prism,
}


@dataclass
class CheckResult:
    """Outcome of one named identity check."""

    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "ok  " if self.passed else "FAIL"
        tail = f" — {self.detail}" if self.detail else ""
        return f"{mark} [{self.suite}] {self.name}{tail}"


def _rel(want: complex, got: complex, scale: float = 0.0) -> float:
    return abs(want - got) / max(1e-300, scale, abs(want))


def _admissible_triples(r: int):
    cols = range(0, r - 2, 2)
    for a, b, c in itertools.product(cols, repeat=3):
        if is_admissible_triple(a, b, c, r):
            yield (a, b, c)


def _admissible_sixtuples(r: int):
    cols = range(0, r - 2, 2)
    for a, b, c in itertools.product(cols, repeat=3):
        if not is_admissible_triple(a, b, c, r):
            continue
        for d, e, f in itertools.product(cols, repeat=3):
            if (
                is_admissible_triple(a, e, f, r)
                and is_admissible_triple(b, d, f, r)
                and is_admissible_triple(c, d, e, r)
            ):
                yield (a, b, c, d, e, f)


def _tet_slot_args(col):
    return tuple(col[i] for i in TET_SLOTS)


# ---------------------------------------------------------------- suites


def suite_oracle(*, rmax: int = 13, **_) -> List[CheckResult]:
    """Float 6j engine against exact arithmetic in the cyclotomic field."""
    from .cyclo import sixj_exact_square

    out = []
    for r in range(5, rmax + 1, 2):
        try:
            worst = 0.0
            n = 0
            for t in _admissible_sixtuples(r):
                exact = sixj_exact_square(*t, r)
                v = sixj(*t, r).to_complex()
                worst = max(worst, _rel(exact, v * v, abs(exact)))
                n += 1
            out.append(
                CheckResult(
                    "oracle",
                    f"6j^2 vs cyclotomic field, r={r}",
                    worst <= 1e-10,
                    f"{n} sixtuples, worst rel {worst:.2e}",
                )
            )
        except BudgetExceeded as exc:
            out.append(CheckResult("oracle", f"6j^2 vs cyclotomic field, r={r}", False, str(exc)))
    return out


def suite_bigon(*, r: int = 7, **_) -> List[CheckResult]:
    """Pin the loop, theta, and bigon-collapse normalizations."""
    out = []

    worst = 0.0
    for n in range(0, r - 2, 2):
        got = bracket(circle(), [n], r).to_complex()
        worst = max(worst, abs(got - circle_weight(n, r)))
    out.append(
        CheckResult(
            "bigon",
            f"circle colored n evaluates to its loop weight, r={r}",
            worst <= 1e-12,
            f"worst abs {worst:.2e}",
        )
    )

    worst = 0.0
    cnt = 0
    for abc in _admissible_triples(r):
        got = bracket(theta(), list(abc), r).to_complex()
        worst = max(worst, abs(got - 1.0))
        cnt += 1
    out.append(
        CheckResult(
            "bigon",
            f"theta graph evaluates to 1, all {cnt} admissible triples, r={r}",
            worst <= 1e-12,
            f"worst abs {worst:.2e}",
        )
    )

    # The prism forces the generic reduction through bigon collapses when
    # the tetrahedron shortcut is disabled; its value is pinned by the
    # triangle contraction to the squared 6j-symbol.
    worst = 0.0
    cases = 0
    for c in range(0, r - 2, 2):
        if not is_admissible_triple(c, c, c, r):
            continue
        want = sixj(c, c, c, c, c, c, r).to_complex() ** 2
        got = bracket(triangular_prism(), [c] * 9, r, base_tet=False).to_complex()
        also = bracket(triangular_prism(), [c] * 9, r).to_complex()
        worst = max(worst, _rel(want, got, abs(want)), _rel(got, also, abs(want)))
        cases += 1
    out.append(
        CheckResult(
            "bigon",
            f"prism reduces through bigons to the squared 6j, r={r}",
            worst <= 1e-10,
            f"{cases} constant colorings, worst rel {worst:.2e}",
        )
    )
    return out


def suite_axiom3(*, r: int = 7, **_) -> List[CheckResult]:
    """Full reduction of the tetrahedron reproduces the 6j-symbol."""
    worst = 0.0
    cnt = 0
    for col in admissible_colorings(tetrahedron(), r):
        want = sixj(*_tet_slot_args(col), r).to_complex()
        got = bracket(tetrahedron(), col, r, base_tet=False).to_complex()
        worst = max(worst, _rel(want, got, abs(want)))
        cnt += 1
    return [
        CheckResult(
            "axiom3",
            f"tetrahedron bracket equals the 6j-symbol, r={r}",
            worst <= 1e-10,
            f"{cnt} colorings via full reduction, worst rel {worst:.2e}",
        )
    ]


def suite_axiom7(*, r: int = 7, **_) -> List[CheckResult]:
    """A zero-colored edge drops out with the (circle weights)^{-1/2} factor.

    Each square-root factor of a negative circle weight takes the -i
    branch, matching the vertex normalization.
    """
    g = tetrahedron()
    inc = [[] for _ in range(g.nv)]
    for ei, (u, v) in enumerate(g.edges):
        inc[u].append(ei)
        inc[v].append(ei)
    worst = 0.0
    cnt = 0
    for e0, (u, v) in enumerate(g.edges):
        iu = [e for e in inc[u] if e != e0]
        iv = [e for e in inc[v] if e != e0]
        (k,) = [e for e in range(g.ne) if e != e0 and e not in iu and e not in iv]
        for a, b, c in _admissible_triples(r):
            col = [0] * 6
            col[e0] = 0
            col[iu[0]] = col[iu[1]] = a
            col[iv[0]] = col[iv[1]] = b
            col[k] = c
            da, db = circle_weight(a, r), circle_weight(b, r)
            neg = (da < 0) + (db < 0)
            want = (-1j) ** neg / math.sqrt(abs(da) * abs(db))
            got = bracket(g, col, r, base_tet=False).to_complex()
            worst = max(worst, _rel(want, got, abs(want)))
            cnt += 1
    return [
        CheckResult(
            "axiom7",
            f"zero-colored tetrahedron edge reduces to the theta value, r={r}",
            worst <= 1e-10,
            f"{cnt} cases over all 6 edge positions, worst rel {worst:.2e}",
        )
    ]


def suite_desing(*, r: int = 7, **_) -> List[CheckResult]:
    """The invariant does not depend on the fan-tree anchor choice."""
    out = []

    g = square_pyramid()
    cols = list(admissible_colorings(g, r))
    base = {col: yokota_ext(g, col, r).to_complex() for col in cols}
    scale = max(abs(v) for v in base.values())
    worst = 0.0
    for k in (1, 2, 3):
        for col in cols:
            got = yokota_ext(g, col, r, anchors={0: k}).to_complex()
            worst = max(worst, _rel(base[col], got, scale))
    out.append(
        CheckResult(
            "desing",
            f"square pyramid: all 4 apex anchors agree, r={r}",
            worst <= 1e-9,
            f"{len(cols)} colorings, worst scaled residual {worst:.2e}",
        )
    )

    g = octahedron()
    sample = list(itertools.islice(admissible_colorings(g, r), 48))
    for c in range(0, r - 2, 2):
        const = tuple([c] * g.ne)
        if const not in sample:
            sample.append(const)
    base_vals = [yokota_ext(g, col, r).to_complex() for col in sample]
    scale = max(max(abs(v) for v in base_vals), 1e-300)
    worst = 0.0
    for k in (1, 2, 3):
        anchors = {v: k for v in range(g.nv)}
        for col, want in zip(sample, base_vals):
            got = yokota_ext(g, col, r, anchors=anchors).to_complex()
            worst = max(worst, _rel(want, got, scale))
    out.append(
        CheckResult(
            "desing",
            f"octahedron: rotated anchors at every vertex agree, r={r}",
            worst <= 1e-9,
            f"{len(sample)} colorings, worst scaled residual {worst:.2e}",
        )
    )
    return out


def suite_doubling(*, r: int = 5, **_) -> List[CheckResult]:
    """Doubling a graph at a vertex squares its invariant."""
    g = square_pyramid()
    cols = list(admissible_colorings(g, r))
    vals = {col: yokota_ext(g, col, r).to_complex() for col in cols}
    scale = max(abs(v) ** 2 for v in vals.values())
    worst = 0.0
    for col in cols:
        g2, col2, _, _ = double_at(g, 0, col)
        got = yokota_ext(g2, col2, r).to_complex()
        worst = max(worst, _rel(vals[col] ** 2, got, scale))
    return [
        CheckResult(
            "doubling",
            f"square pyramid doubled at its apex squares the invariant, r={r}",
            worst <= 1e-9,
            f"{len(cols)} colorings, worst scaled residual {worst:.2e}",
        )
    ]


def suite_vertexsum(*, r: int = 7, **_) -> List[CheckResult]:
    """The invariant is multiplicative under vertex sums."""
    g1 = tetrahedron()
    g2 = tetrahedron()
    gsum, m1, m2 = vertex_sum_with_maps(g1, 0, g2, 0)
    spliced = [(e1, e2) for e1 in range(g1.ne) for e2 in range(g2.ne) if m1[e1] == m2[e2]]
    cols1 = list(admissible_colorings(g1, r))
    by_key: Dict[tuple, list] = {}
    for col2 in admissible_colorings(g2, r):
        by_key.setdefault(tuple(col2[e2] for _, e2 in spliced), []).append(col2)
    vals1 = {col: yokota_ext(g1, col, r).to_complex() for col in cols1}
    scale = max(abs(v) for v in vals1.values()) ** 2
    worst = 0.0
    cnt = 0
    for col1 in cols1:
        key = tuple(col1[e1] for e1, _ in spliced)
        for col2 in by_key.get(key, ()):
            colnew = [0] * gsum.ne
            for e, enew in m1.items():
                colnew[enew] = col1[e]
            for e, enew in m2.items():
                colnew[enew] = col2[e]
            want = vals1[col1] * yokota_ext(g2, col2, r).to_complex()
            got = yokota_ext(gsum, colnew, r).to_complex()
            worst = max(worst, _rel(want, got, scale))
            cnt += 1
    return [
        CheckResult(
            "vertexsum",
            f"tetrahedron + tetrahedron is the product of invariants, r={r}",
            worst <= 1e-9,
            f"{cnt} compatible coloring pairs, worst scaled residual {worst:.2e}",
        )
    ]


def suite_fusion(*, r: Optional[int] = None, **_) -> List[CheckResult]:
    """Termwise fusion-rule expansion and reduction-order independence."""
    out = []
    levels = (r,) if r else (5, 7, 9)

    for lvl in levels:
        g = theta()
        face = next(f for f in g.faces() if len(f) == 2 and (f[0] >> 1) != (f[1] >> 1))
        p, q = face
        worst = 0.0
        cnt = 0
        for abc in _admissible_triples(lvl):
            col = list(abc)
            total = 0j
            for i in fusion_colors(col[p >> 1], col[q >> 1], lvl):
                tg, tc = fusion_at(g, col, p, q, i)
                total += circle_weight(i, lvl) * bracket(tg, tc, lvl).to_complex()
            worst = max(worst, abs(total - 1.0))
            cnt += 1
        out.append(
            CheckResult(
                "fusion",
                f"fusion across a theta face resums to 1, r={lvl}",
                worst <= 1e-9,
                f"{cnt} triples, worst abs {worst:.2e}",
            )
        )

    for lvl in levels:
        worst = 0.0
        for g in (triangular_prism(), cube()):
            col = [2] * g.ne
            want = bracket(g, col, lvl, base_tet=False).to_complex()
            for seed in (1, 2, 3):
                got = bracket(g, col, lvl, base_tet=False, seed=seed).to_complex()
                worst = max(worst, _rel(want, got, abs(want)))
        out.append(
            CheckResult(
                "fusion",
                f"randomized face order leaves values unchanged, r={lvl}",
                worst <= 1e-9,
                f"prism and cube, worst rel {worst:.2e}",
            )
        )
    return out


def suite_kirby(*, r: Optional[int] = None, graph: Optional[str] = None, **_) -> List[CheckResult]:
    """The Kirby-colored invariant equals N^betti."""
    if graph:
        cases = [(graph, r or 5)]
    else:
        cases = [
            (name, lvl)
            for name in ("theta", "tetrahedron", "triangular-prism")
            for lvl in ((r,) if r else (5, 7))
        ]
    out = []
    for name, lvl in cases:
        g = FIXTURES[name]()
        want = kirby_norm(lvl) ** betti(g)
        got = yokota_kirby(g, lvl).to_complex()
        rel = _rel(want, got, abs(want))
        out.append(
            CheckResult(
                "kirby",
                f"{name} at r={lvl}: Kirby-colored invariant vs N^{betti(g)}",
                rel <= 1e-9,
                f"rel {rel:.2e}",
            )
        )
    return out


def suite_nidentity(*, rmax: int = 2001, **_) -> List[CheckResult]:
    """Sum of squared circle weights against the closed form."""
    worst = 0.0
    worst_r = 0
    for r in range(5, rmax + 1, 2):
        x = 2.0 * math.pi / r
        s = math.sin(x)
        total = math.fsum((math.sin((i + 1) * x) / s) ** 2 for i in range(0, r - 2, 2))
        want = r / (4.0 * s * s)
        rel = abs(total - want) / want
        if rel > worst:
            worst, worst_r = rel, r
    return [
        CheckResult(
            "nidentity",
            f"sum of squared circle weights equals r/(4 sin^2(2pi/r)), odd r <= {rmax}",
            worst <= 1e-12,
            f"worst rel {worst:.2e} at r={worst_r}",
        )
    ]


def suite_fourier(*, r: Optional[int] = None, graph: Optional[str] = None, **_) -> List[CheckResult]:
    """Both sides of the dual-graph Fourier identity, exhaustively."""
    if graph:
        cases = [(graph, r or 7)]
    else:
        cases = [("theta", 7), ("tetrahedron", 5), ("tetrahedron", 7), ("cube", 5)]
    out = []
    for name, lvl in cases:
        g = FIXTURES[name]()
        d = dual(g)
        tab = yokota_table(g, lvl)
        dtab = yokota_table(d, lvl)
        scale = max(abs(v.to_complex()) for v in dtab.values())
        worst = 0.0
        for dcol in sorted(dtab):
            want = dtab[dcol].to_complex()
            got = fourier_dual(g, lvl, dcol, table=tab).to_complex()
            worst = max(worst, _rel(want, got, scale))
        out.append(
            CheckResult(
                "fourier",
                f"{name} vs its dual at r={lvl}",
                worst <= 1e-8,
                f"{len(dtab)} dual colorings, worst scaled residual {worst:.2e}",
            )
        )
    return out


def suite_sixj_symmetry(*, r: int = 9, **_) -> List[CheckResult]:
    """All 24 tetrahedral relabelings leave the 6j-symbol unchanged."""
    import numpy as np

    from .scans import LevelTables, batch_sixj

    tuples = list(_admissible_sixtuples(r))
    arr = np.array(tuples, dtype=np.int64)
    ref = np.array([sixj(*t, r).to_complex() for t in tuples])
    tab = LevelTables(r)
    worst = 0.0
    # Columns pair opposite slots; the symmetry group permutes the three
    # columns and flips the entries of an even number of them.
    columns = ((0, 3), (1, 4), (2, 5))
    flips = ((0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1))
    for perm in itertools.permutations(range(3)):
        for flip in flips:
            slots = [None] * 6
            for j, (srci, fl) in enumerate(zip(perm, flip)):
                top, bot = columns[srci]
                if fl:
                    top, bot = bot, top
                slots[columns[j][0]] = arr[:, top]
                slots[columns[j][1]] = arr[:, bot]
            res = batch_sixj(tab, *slots)
            vals = res["sign"] * np.exp(res["log"]) * (-1j) ** res["quad"]
            worst = max(worst, float(np.max(np.abs(vals - ref) / np.abs(ref))))
    return [
        CheckResult(
            "sixj-symmetry",
            f"24 relabelings agree on all {len(tuples)} admissible sixtuples, r={r}",
            worst <= 1e-10,
            f"worst rel {worst:.2e}",
        )
    ]


def suite_hopf(*, r: int = 31, **_) -> List[CheckResult]:
    """Hopf pairing: closed forms, symmetry, and the constant-sign row."""
    out = []
    cols = list(range(0, r - 2, 2))
    s = math.sin(2.0 * math.pi / r)
    worst_f = 0.0
    worst_s = 0.0
    for i in cols:
        for j in cols:
            h = hopf_pairing(i, j, r)
            direct = (-1.0) ** (i + j) * math.sin(2.0 * math.pi * (i + 1) * (j + 1) / r) / s
            worst_f = max(worst_f, abs(h - direct))
            worst_s = max(worst_s, abs(h - hopf_pairing(j, i, r)))
    out.append(
        CheckResult(
            "hopf",
            f"pairing matches the signed sine form, all pairs at r={r}",
            worst_f <= 1e-12 and abs(hopf_pairing(0, 0, r) - 1.0) <= 1e-15,
            f"worst abs {worst_f:.2e}",
        )
    )
    out.append(
        CheckResult(
            "hopf",
            f"pairing is symmetric, all pairs at r={r}",
            worst_s == 0.0,
            f"worst abs {worst_s:.2e}",
        )
    )

    for lvl in (7, 11):
        c = maximizing_color(lvl)
        sl = math.sin(2.0 * math.pi / lvl)
        vals = [hopf_pairing(c, j, lvl) for j in range(0, lvl - 2, 2)]
        signs = {v > 0 for v in vals}
        worst = max(
            abs(abs(v) - math.sin(math.pi * (j + 1) / lvl) / sl)
            for v, j in zip(vals, range(0, lvl - 2, 2))
        )
        out.append(
            CheckResult(
                "hopf",
                f"maximizing row has one sign and sine-ratio magnitude, r={lvl}",
                len(signs) == 1 and worst <= 1e-12,
                f"color {c}, sign {'+' if vals[0] > 0 else '-'}, worst abs {worst:.2e}",
            )
        )
    return out


def suite_volumes(**_) -> List[CheckResult]:
    """Volume constants and the Lobachevsky function against an oracle."""
    out = []
    pins = {
        "ideal-octahedron": 3.663862,
        "ideal-square-pyramid": 1.831931,
        "square-antiprism": 6.023046,
        "ideal-pentagonal-pyramid": 2.493387,
        "pentagonal-antiprism": 8.137885,
    }
    vols = named_volumes()
    worst = max(abs(vols[k] - v) / v for k, v in pins.items())
    out.append(
        CheckResult(
            "volumes",
            "five named volumes match their constants to 5 significant digits",
            worst <= 1e-6,
            f"worst rel {worst:.2e}",
        )
    )

    with MP_LOCK, mp.workprec(80):
        worst = 0.0
        for k in range(-40, 41):
            t = k * math.pi / 37.0
            want = float(mp.clsin(2, 2.0 * t)) / 2.0
            worst = max(worst, abs(lobachevsky(t) - want))
    odd = max(abs(lobachevsky(t) + lobachevsky(-t)) for t in (0.3, 1.1, 2.7))
    per = max(abs(lobachevsky(t + math.pi) - lobachevsky(t)) for t in (0.3, 1.1, 2.7))
    out.append(
        CheckResult(
            "volumes",
            "Lobachevsky function matches the Clausen-series oracle",
            worst <= 1e-13 and odd <= 1e-15 and per <= 1e-14,
            f"worst abs {worst:.2e}; odd {odd:.1e}; periodic {per:.1e}",
        )
    )

    peak = lobachevsky(math.pi / 6.0)
    ok = abs(peak - 0.5074708) <= 1e-6 and abs(antiprism_volume(3) - V8) <= 1e-12
    out.append(
        CheckResult(
            "volumes",
            "maximum value at pi/6 and the octahedron as a 3-antiprism",
            ok,
            f"peak {peak:.7f}; antiprism(3)-V8 {abs(antiprism_volume(3) - V8):.1e}",
        )
    )
    return out


SUITES: Dict[str, Callable[..., List[CheckResult]]] = {
    "oracle": suite_oracle,
    "bigon": suite_bigon,
    "axiom3": suite_axiom3,
    "axiom7": suite_axiom7,
    "desing": suite_desing,
    "doubling": suite_doubling,
    "vertexsum": suite_vertexsum,
    "fusion": suite_fusion,
    "kirby": suite_kirby,
    "nidentity": suite_nidentity,
    "fourier": suite_fourier,
    "sixj-symmetry": suite_sixj_symmetry,
    "hopf": suite_hopf,
    "volumes": suite_volumes,
}


def suite_names() -> List[str]:
    return list(SUITES)


def run_suite(
    name: str,
    *,
    r: Optional[int] = None,
    rmax: Optional[int] = None,
    graph: Optional[str] = None,
) -> List[CheckResult]:
    """Run one named suite (or ``all``) and return its check results."""
    kwargs = {}
    if r is not None:
        kwargs["r"] = r
    if rmax is not None:
        kwargs["rmax"] = rmax
    if graph is not None:
        kwargs["graph"] = graph
    if name == "all":
        out: List[CheckResult] = []
        for fn in SUITES.values():
            out.extend(fn(**kwargs))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
    return SUITES[name](**kwargs)
