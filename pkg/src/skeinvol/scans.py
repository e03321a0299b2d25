"""Large-level numerical scans of 6j and invariant growth rates.

The graph evaluator is exact but desk-scale; the conjectures ask how
(pi/r) log |invariant| behaves as the level r grows.  This module keeps
those scans feasible with per-level numpy tables and a batched
log-domain 6j evaluator:

* the exhaustive 6j bound sweep enumerates admissible 6-tuples up to a
  symmetry restriction, screens them with a cancellation-free upper
  bound, and re-evaluates only the near-maximal ones exactly;
* the wheel-graph fast paths evaluate the closed forms for the square
  and pentagonal pyramids (one- and two-index sums of 6j products), so
  the published experiments reproduce in seconds at r = 321;
* the family fast path uses Y(prism, all-max) = sixj(max,...)^4 (one
  6j per level), checked against the graph engine at small levels in
  the test suite.

Per-level work is pure and independent, so scans parallelize over r
with a thread pool and are reassembled in level order; the emitted
records are bit-equal for any worker count.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence

import numpy as np

import mpmath as mp

from .errors import BudgetExceeded
from .hypvol import V8, ScanRecord, named_volumes
from .qnum import MP_LOCK, Level, is_admissible_triple, sixj_info
from .yokota import maximizing_color

__all__ = [
    "LevelTables",
    "appendix_colors",
    "appendix_record",
    "batch_sixj",
    "bound_record",
    "family_record",
    "maximizer_record",
    "round_even_color",
    "run_levels",
    "sixtuple_chunks",
    "tv_tet_record",
    "wheel_log_invariant",
    "wheel_log_invariant_mp",
]


class LevelTables:
    """Per-level lookup tables for vectorized quantum arithmetic.

    lf[k] = log |[k]!| and sf[k] = sign([k]!) for 0 <= k <= r-1; dlog and
    dsign give the circle weights Delta_i over the color set.  [k] is
    negative exactly for r/2 < k < r, so the sign of [k]! alternates
    with max(0, k - (r-1)/2).
    """

    def __init__(self, r: int):
        if r < 5 or r % 2 == 0:
            raise ValueError("level must be odd and >= 5")
        self.r = r
        self.colors = np.arange(0, r - 2, 2, dtype=np.int64)
        self.m = len(self.colors)
        k = np.arange(r, dtype=np.int64)
        mag = np.abs(np.sin(2 * np.pi * k / r)) / math.sin(2 * math.pi / r)
        lg = np.zeros(r)
        lg[1:] = np.log(mag[1:])
        self.lf = np.concatenate([[0.0], np.cumsum(lg[1:])])
        neg = np.maximum(0, k - (r - 1) // 2)
        self.sf = np.where(neg % 2 == 0, 1, -1).astype(np.int64)
        i = self.colors
        self.dlog = np.log(np.abs(np.sin(2 * np.pi * (i + 1) / r))) - math.log(
            math.sin(2 * math.pi / r)
        )
        # Delta_i = (-1)^i [i+1]; colors are even, and [i+1] < 0 once
        # i+1 passes r/2
        self.dsign = np.where(i + 1 <= (r - 1) // 2, 1, -1).astype(np.int64)

    def admissible3(self, a, b, c):
        """Vectorized admissibility of (even) color triples."""
        return (
            (c >= np.abs(a - b))
            & (c <= a + b)
            & (a + b + c <= 2 * (self.r - 2))
        )

    def theta_logsign(self, a, b, c):
        """log|Theta| and sign(Theta) of admissible triples, vectorized."""
        s = (a + b + c) >> 1
        lg = self.lf[s + 1] - self.lf[s - a] - self.lf[s - b] - self.lf[s - c]
        sg = self.sf[s + 1] * self.sf[s - a] * self.sf[s - b] * self.sf[s - c]
        sg = np.where(s % 2 == 0, sg, -sg)
        return lg, sg


def _sixj_indices(a, b, c, d, e, f):
    # vertex triples (a,b,c), (a,e,f), (b,d,f), (c,d,e) -- the same
    # convention as the scalar evaluator
    t = (
        (a + b + c) >> 1,
        (a + e + f) >> 1,
        (b + d + f) >> 1,
        (c + d + e) >> 1,
    )
    q = (
        (a + b + d + e) >> 1,
        (a + c + d + f) >> 1,
        (b + c + e + f) >> 1,
    )
    return t, q


def batch_sixj(tab: LevelTables, a, b, c, d, e, f) -> dict:
    """Batched 6j evaluation in the log domain.

    The six inputs are equal-length integer arrays of even colors that
    form admissible 6-tuples.  Returns a dict of arrays:

      log     log |6j|            (-inf where the z-sum vanished)
      sign    sign of the real z-sum
      quad    number of negative vertex thetas (the 6j is i^quad * real)
      cancel  decimal digits lost to cancellation in the z-sum
      log_ub  cancellation-free upper bound on log |6j|

    The alternating z-sum runs twice: a first pass finds each tuple's
    maximum term log-magnitude, the second accumulates sign * exp(term -
    max).  log_ub replaces the signed sum by the sum of absolute values,
    which cannot cancel, so it bounds the true magnitude from above
    regardless of how badly the signed sum cancels.
    """
    a, b, c, d, e, f = (np.asarray(x, dtype=np.int64) for x in (a, b, c, d, e, f))
    n = a.shape[0]
    if n == 0:
        z = np.zeros(0)
        return {"log": z, "sign": z.copy(), "quad": z.astype(np.int64),
                "cancel": z.copy(), "log_ub": z.copy()}
    t, q = _sixj_indices(a, b, c, d, e, f)
    zlo = np.maximum.reduce(t)
    zhi = np.minimum(np.minimum.reduce(q), tab.r - 2)
    nz = zhi - zlo  # >= 0 on admissible tuples
    lf, sf = tab.lf, tab.sf

    def term_log(z):
        out = lf[z + 1].copy()
        for ti in t:
            out -= lf[z - ti]
        for qj in q:
            out -= lf[qj - z]
        return out

    kmax = int(nz.max())
    mlog = np.full(n, -np.inf)
    for k in range(kmax + 1):
        z = np.minimum(zlo + k, zhi)
        tl = term_log(z)
        np.maximum(mlog, np.where(k <= nz, tl, -np.inf), out=mlog)

    acc = np.zeros(n)
    absacc = np.zeros(n)
    for k in range(kmax + 1):
        z = np.minimum(zlo + k, zhi)
        tl = term_log(z)
        sg = sf[z + 1] * np.where(z % 2 == 0, 1, -1)
        for ti in t:
            sg = sg * sf[z - ti]
        for qj in q:
            sg = sg * sf[qj - z]
        mag = np.where(k <= nz, np.exp(tl - mlog), 0.0)
        acc += sg * mag
        absacc += mag

    preflog = np.zeros(n)
    quad = np.zeros(n, dtype=np.int64)
    for tri in ((a, b, c), (a, e, f), (b, d, f), (c, d, e)):
        lg, sg = tab.theta_logsign(*tri)
        preflog -= 0.5 * lg
        quad += sg < 0

    with np.errstate(divide="ignore", invalid="ignore"):
        log = np.where(acc == 0.0, -np.inf, preflog + mlog + np.log(np.abs(acc)))
        log_ub = preflog + mlog + np.log(absacc)
        cancel = np.where(
            acc != 0.0,
            np.log10(np.maximum(absacc / np.abs(np.where(acc == 0.0, 1.0, acc)), 1.0)),
            np.inf,
        )
    return {"log": log, "sign": np.sign(acc), "quad": quad, "cancel": cancel,
            "log_ub": log_ub}


# ---------------------------------------------------------------------------
# admissible 6-tuple enumeration


def _adm_stack(tab: LevelTables):
    """adm[ta, tb, tc] over color indices (color = 2 * index)."""
    idx = np.arange(tab.m)
    return tab.admissible3(
        2 * idx[:, None, None], 2 * idx[None, :, None], 2 * idx[None, None, :]
    )


def sixtuple_chunks(tab: LevelTables, *, restrict: bool = True,
                    chunk: int = 200_000, budget: Optional[int] = None):
    """Yield admissible 6-tuples (a,b,c,d,e,f) as arrays of colors.

    All four vertex triples (a,b,c), (a,e,f), (b,d,f), (c,d,e) are
    admissible.  With restrict=True only a symmetry-reduced cover is
    produced: a must be the minimal color, and (b,c) lexicographically
    minimal among its images (c,b), (e,f), (f,e) under the symmetries
    that fix the a slot.  Every tetrahedral symmetry class keeps at
    least one representative (ties may keep several), which is all the
    max-scan needs, at roughly 1/24 of the full enumeration cost.

    budget caps the number of tuples yielded (BudgetExceeded beyond).
    """
    adm = _adm_stack(tab)
    m = tab.m
    total = 0
    buf = []
    buffered = 0

    def _flush():
        nonlocal buf, buffered
        if not buf:
            return None
        out = tuple(
            np.concatenate([blk[k] for blk in buf]) for k in range(6)
        )
        buf = []
        buffered = 0
        return out

    for ta in range(m):
        lo = ta if restrict else 0
        tb_i, tc_i = np.nonzero(adm[ta, lo:, lo:])
        if tb_i.size == 0:
            continue
        tb_i = tb_i + lo
        tc_i = tc_i + lo
        kpairs = tb_i.size
        # row blocks keep the K x K boolean mask under ~8M entries
        rows = max(1, 8_000_000 // max(kpairs, 1))
        for td in range(lo, m):
            admd = adm[td]
            for r0 in range(0, kpairs, rows):
                r1 = min(r0 + rows, kpairs)
                tb_r = tb_i[r0:r1]
                tc_r = tc_i[r0:r1]
                mask = admd[tb_r[:, None], tc_i[None, :]]
                mask &= admd[tc_r[:, None], tb_i[None, :]]
                # rows are (b,c) pairs, columns are (e,f) pairs drawn
                # from the same admissible list: (b,d,f) needs
                # admd[b, f] and (c,d,e) needs admd[c, e]; f is the
                # second pair member (tc_i), e the first (tb_i)
                i1, i2 = np.nonzero(mask)
                if i1.size == 0:
                    continue
                tb = tb_r[i1]
                tc = tc_r[i1]
                te = tb_i[i2]
                tf = tc_i[i2]
                if restrict:
                    keep = tb <= tc
                    keep &= (tb < te) | ((tb == te) & (tc <= tf))
                    keep &= (tb < tf) | ((tb == tf) & (tc <= te))
                    tb, tc, te, tf = tb[keep], tc[keep], te[keep], tf[keep]
                    if tb.size == 0:
                        continue
                cnt = tb.size
                total += cnt
                if budget is not None and total > budget:
                    raise BudgetExceeded(
                        f"6-tuple enumeration passed {budget} tuples at r={tab.r}"
                    )
                blk = (
                    np.full(cnt, 2 * ta, dtype=np.int64),
                    2 * tb, 2 * tc,
                    np.full(cnt, 2 * td, dtype=np.int64),
                    2 * te, 2 * tf,
                )
                buf.append(blk)
                buffered += cnt
                if buffered >= chunk:
                    yield _flush()
    out = _flush()
    if out is not None:
        yield out


# ---------------------------------------------------------------------------
# per-level scan records


def bound_record(r: int, *, margin: float = 4.0, chunk: int = 200_000,
                 budget: Optional[int] = None):
    """Exhaustive 6j max at one level, with the growth-bound check.

    Returns (record, diagnostics).  The record's log_value is the level
    maximum of log|6j| and slope its (2 pi / r) normalization; the
    diagnostics report how many tuples were enumerated, how many were
    re-evaluated exactly, and whether every exact value stayed at or
    under the bound v8 + margin * log(r)/r.

    Screening: a tuple can only threaten the bound if even its
    cancellation-free upper bound comes within 1.0 (in log units) of the
    threshold; those are recomputed with the scalar evaluator, which
    escalates to high precision on its own when doubles cancel away.
    """
    tab = LevelTables(r)
    lv = Level.of(r)
    thr_slope = V8 + margin * math.log(r) / r
    thr_log = thr_slope * r / (2 * math.pi)
    ntuples = 0
    safe_max = -math.inf
    worst_cancel = 0.0
    cand: list[tuple] = []
    for tup in sixtuple_chunks(tab, restrict=True, chunk=chunk, budget=budget):
        res = batch_sixj(tab, *tup)
        ntuples += tup[0].size
        hot = res["log_ub"] >= thr_log - 1.0
        if hot.any():
            idx = np.nonzero(hot)[0]
            for i in idx:
                cand.append(tuple(int(x[i]) for x in tup))
        cold = ~hot
        if cold.any():
            safe_max = max(safe_max, float(res["log"][cold].max()))
            fin = res["cancel"][cold]
            fin = fin[np.isfinite(fin)]
            if fin.size:
                worst_cancel = max(worst_cancel, float(fin.max()))
    exact_max = -math.inf
    excess = -math.inf
    for tup in sorted(set(cand)):
        info = sixj_info(*tup, lv)
        lgv = info["value"].log_abs()
        exact_max = max(exact_max, lgv)
        excess = max(excess, lgv - thr_log)
        worst_cancel = max(worst_cancel, float(info["cancel_digits"]))
    level_max = max(safe_max, exact_max)
    slope = (2 * math.pi / r) * level_max
    rec = ScanRecord(
        r=r, kind="sixj-bound", color_policy="exhaustive",
        log_value=level_max, slope=slope, target=V8,
        rel_gap=(slope - V8) / V8, cancel_digits=worst_cancel,
    )
    diag = {
        "tuples": ntuples,
        "rechecked": len(cand),
        "bound_ok": excess <= 1e-9,
        "excess": excess,
        "threshold_log": thr_log,
    }
    return rec, diag


def maximizer_record(r: int) -> ScanRecord:
    """The all-maximizing-color 6j at one level ((2 pi / r) log scale)."""
    c = maximizing_color(r)
    info = sixj_info(c, c, c, c, c, c, Level.of(r))
    lg = info["value"].log_abs()
    slope = (2 * math.pi / r) * lg
    return ScanRecord(
        r=r, kind="sixj-max", color_policy=f"maximizer[c={c}]",
        log_value=lg, slope=slope, target=V8, rel_gap=(slope - V8) / V8,
        cancel_digits=float(info["cancel_digits"]),
    )


def round_even_color(x: float, r: int) -> int:
    """Nearest even integer in the color set, ties toward zero."""
    lo = 2 * math.floor(x / 2)
    hi = lo + 2
    if x - lo < hi - x:
        c = lo
    elif hi - x < x - lo:
        c = hi
    else:
        c = lo if abs(lo) <= abs(hi) else hi
    return int(min(max(c, 0), r - 3))


# kind -> (volume target, spoke count, (spoke, rim) fractions of r).
# A dihedral angle alpha corresponds to the color r (pi - alpha)/(2 pi):
# the ideal square pyramid has lateral angles pi/2 and base angles pi/4
# (colors r/4 and 3r/8), the ideal pentagonal pyramid 3pi/5 and pi/5
# (colors r/5 and 2r/5), and the zero-angled pyramids put every edge at
# r/2.  Fraction tables published alongside the experiments quote half
# these values (spin rather than color units); the colors below are the
# ones that actually reproduce the stated volume limits.
_APPENDIX = {
    "sq-ideal": ("ideal-square-pyramid", 4, (1 / 4, 3 / 8)),
    "sq-zero": ("square-antiprism", 4, (1 / 2, 1 / 2)),
    "pent-ideal": ("ideal-pentagonal-pyramid", 5, (1 / 5, 2 / 5)),
    "pent-zero": ("pentagonal-antiprism", 5, (1 / 2, 1 / 2)),
}


def appendix_colors(kind: str, r: int) -> tuple[int, int]:
    """(spoke, rim) colors for one of the published wheel experiments."""
    _, _, (fs, fb) = _APPENDIX[kind]
    return round_even_color(fs * r, r), round_even_color(fb * r, r)


def wheel_log_invariant(r: int, n_spokes: int, s: int, b: int):
    """log |Y|, sign, and worst cancellation of a colored wheel.

    Spokes carry color s and the rim color b.  The closed forms, with
    u_i = sixj(s,s,i,b,b,b) and w_ij = sixj(s,i,j,b,b,b), are

        4 spokes   Y = sum_i Delta_i u_i^4
        5 spokes   Y = sum_ij Delta_i Delta_j (u_i u_j w_ij)^2

    evaluated in the log domain.  Fourth powers are nonnegative real
    whatever the i^quad phase; squares contribute (-1)^quad, which the
    sign accumulation tracks.  Raises ValueError when the coloring is
    inadmissible or the sum vanishes outright.
    """
    if n_spokes not in (4, 5):
        raise ValueError("closed forms cover 4- and 5-spoke wheels")
    tab = LevelTables(r)
    if not is_admissible_triple(s, b, b, r):
        raise ValueError(f"rim triple ({s},{b},{b}) inadmissible at r={r}")
    i = tab.colors
    i = i[np.asarray(tab.admissible3(s, s, i) & tab.admissible3(i, b, b))]
    if i.size == 0:
        raise ValueError(f"no admissible fan colors for wheel at r={r}")
    const = np.full(i.size, s, dtype=np.int64)
    rimc = np.full(i.size, b, dtype=np.int64)
    u = batch_sixj(tab, const, const, i, rimc, rimc, rimc)
    dlog = tab.dlog[i >> 1]
    dsign = tab.dsign[i >> 1]
    fin = u["cancel"][np.isfinite(u["cancel"])]
    worst_cancel = float(fin.max()) if fin.size else 0.0

    if n_spokes == 4:
        tl = dlog + 4.0 * u["log"]
        ts = dsign.astype(float)
    else:
        ii, jj = np.meshgrid(np.arange(i.size), np.arange(i.size), indexing="ij")
        ii, jj = ii.ravel(), jj.ravel()
        wmask = np.asarray(tab.admissible3(s, i[ii], i[jj]))
        ii, jj = ii[wmask], jj[wmask]
        cs = np.full(ii.size, s, dtype=np.int64)
        cb = np.full(ii.size, b, dtype=np.int64)
        w = batch_sixj(tab, cs, i[ii], i[jj], cb, cb, cb)
        fin = w["cancel"][np.isfinite(w["cancel"])]
        if fin.size:
            worst_cancel = max(worst_cancel, float(fin.max()))
        tl = (
            dlog[ii] + dlog[jj]
            + 2.0 * (u["log"][ii] + u["log"][jj] + w["log"])
        )
        quad = u["quad"][ii] + u["quad"][jj] + w["quad"]
        ts = (dsign[ii] * dsign[jj] * np.where(quad % 2 == 0, 1, -1)).astype(float)

    good = np.isfinite(tl)
    tl, ts = tl[good], ts[good]
    if tl.size == 0:
        raise ValueError(f"wheel invariant vanished at r={r}")
    mx = float(tl.max())
    acc = float(np.sum(ts * np.exp(tl - mx)))
    absacc = float(np.sum(np.exp(tl - mx)))
    if acc == 0.0:
        raise ValueError(f"wheel invariant vanished at r={r}")
    log_y = mx + math.log(abs(acc))
    worst_cancel = max(worst_cancel, math.log10(max(absacc / abs(acc), 1.0)))
    return log_y, (1.0 if acc > 0 else -1.0), worst_cancel


def _mp_zsum(t, facts, r):
    """Signed z-sum of the 6j (no vertex normalization), in mp floats."""
    tvals, qvals = _sixj_indices(*(np.int64(x) for x in t))
    zlo = int(max(tvals))
    zhi = int(min(min(qvals), r - 2))
    total = mp.mpf(0)
    for z in range(zlo, zhi + 1):
        term = facts[z + 1]
        for ti in tvals:
            term /= facts[z - int(ti)]
        for qj in qvals:
            term /= facts[int(qj) - z]
        total += -term if z % 2 else term
    return total


def _mp_theta(a, b, c, facts):
    """Signed Theta(a,b,c) in mp floats."""
    s = (a + b + c) // 2
    th = facts[s + 1] / (facts[s - a] * facts[s - b] * facts[s - c])
    return -th if s % 2 else th


def wheel_log_invariant_mp(r: int, n_spokes: int, s: int, b: int,
                           prec: Optional[int] = None):
    """High-precision wheel closed form; same contract as the float twin.

    The vertex normalizations enter only as Theta^(-2) (fourth powers)
    or Theta^(-1) (squares), so no square-root branches appear and the
    whole sum is carried in signed mp floats.  Precision starts at
    2r + 256 bits (or SKEIN_PRECISION_BITS if larger) and doubles until
    the observed cancellation leaves at least 50 trusted bits.
    """
    lv = Level.of(r)
    if not is_admissible_triple(s, b, b, r):
        raise ValueError(f"rim triple ({s},{b},{b}) inadmissible at r={r}")
    ilist = [i for i in lv.colors
             if is_admissible_triple(s, s, i, lv) and is_admissible_triple(i, b, b, lv)]
    if not ilist:
        raise ValueError(f"no admissible fan colors for wheel at r={r}")
    if prec is None:
        prec = max(2 * r + 256, int(os.environ.get("SKEIN_PRECISION_BITS", "0") or 0))
    for _ in range(5):
        with MP_LOCK, mp.workprec(prec):
            facts = lv._mp_facts(prec)
            s0 = mp.sin(2 * mp.pi / r)
            deltas = {i: mp.sin(2 * mp.pi * (i + 1) / r) / s0 for i in ilist}
            upart = {}
            for i in ilist:
                zs = _mp_zsum((s, s, i, b, b, b), facts, r)
                th = (
                    _mp_theta(s, s, i, facts)
                    * _mp_theta(s, b, b, facts) ** 2
                    * _mp_theta(i, b, b, facts)
                )
                upart[i] = (zs, th)
            total = mp.mpf(0)
            abstot = mp.mpf(0)
            if n_spokes == 4:
                for i in ilist:
                    zs, th = upart[i]
                    term = deltas[i] * zs ** 4 / th ** 2
                    total += term
                    abstot += abs(term)
            else:
                for ix, i in enumerate(ilist):
                    zi, thi = upart[i]
                    for j in ilist[ix:]:
                        if not is_admissible_triple(s, i, j, lv):
                            continue
                        zj, thj = upart[j]
                        zw = _mp_zsum((s, i, j, b, b, b), facts, r)
                        thw = (
                            _mp_theta(s, i, j, facts)
                            * _mp_theta(s, b, b, facts)
                            * _mp_theta(i, b, b, facts)
                            * _mp_theta(j, b, b, facts)
                        )
                        term = (
                            deltas[i] * deltas[j]
                            * (zi * zj * zw) ** 2 / (thi * thj * thw)
                        )
                        if j != i:
                            term *= 2
                        total += term
                        abstot += abs(term)
            if total == 0:
                raise ValueError(f"wheel invariant vanished at r={r}")
            cancel_bits = float(mp.log(abstot / abs(total), 2))
            if cancel_bits <= prec - 50:
                log_y = float(mp.log(abs(total)))
                sign = 1.0 if total > 0 else -1.0
                return log_y, sign, cancel_bits * math.log10(2.0)
        prec *= 2
    raise ValueError(f"wheel sum at r={r} cancels beyond {prec} bits")


def appendix_record(kind: str, r: int) -> ScanRecord:
    """One level of a published wheel-graph experiment.

    kind is sq-ideal, sq-zero, pent-ideal or pent-zero; the spoke and
    rim colors come from the dihedral angles of the target polyhedron
    (see appendix_colors), and the actual colors used are recorded in
    the color_policy field.  The zero-angled colorings sit at the
    maximal-growth color where the closed forms cancel catastrophically
    in doubles, so the evaluation escalates to the mp twin whenever the
    double pass loses more than 8 digits.
    """
    target_name, n_spokes, _ = _APPENDIX[kind]
    s, b = appendix_colors(kind, r)
    target = named_volumes()[target_name]
    try:
        log_y, _, worst_cancel = wheel_log_invariant(r, n_spokes, s, b)
        need_mp = worst_cancel > 8.0
    except ValueError as err:
        if "vanished" not in str(err):
            raise
        need_mp = True
    if need_mp:
        log_y, _, worst_cancel = wheel_log_invariant_mp(r, n_spokes, s, b)
    slope = (math.pi / r) * log_y
    return ScanRecord(
        r=r, kind=kind, color_policy=f"{kind}[spoke={s} rim={b}]",
        log_value=log_y, slope=slope, target=target,
        rel_gap=(slope - target) / target, cancel_digits=worst_cancel,
    )


def tv_tet_record(r: int, *, budget: Optional[int] = None) -> ScanRecord:
    """Full state sum sum_col |Y(tet,col)| = sum |6j|^2 at one level."""
    tab = LevelTables(r)
    mx = -math.inf
    worst_cancel = 0.0
    shifted = 0.0
    # two passes over the enumeration keep memory flat: first the max,
    # then the stable accumulation
    logs = []
    for tup in sixtuple_chunks(tab, restrict=False, chunk=500_000, budget=budget):
        res = batch_sixj(tab, *tup)
        lg = res["log"][np.isfinite(res["log"])]
        if lg.size:
            logs.append(2.0 * lg)
            mx = max(mx, float(lg.max()) * 2.0)
        fin = res["cancel"][np.isfinite(res["cancel"])]
        if fin.size:
            worst_cancel = max(worst_cancel, float(fin.max()))
    for lg in logs:
        shifted += float(np.sum(np.exp(lg - mx)))
    log_tv = mx + math.log(shifted)
    slope = (math.pi / r) * log_tv
    return ScanRecord(
        r=r, kind="tv-tet", color_policy="full-TV-sweep", log_value=log_tv,
        slope=slope, target=V8, rel_gap=(slope - V8) / V8,
        cancel_digits=worst_cancel,
    )


def family_record(r: int, m: int = 1) -> ScanRecord:
    """Maximizing-color invariant of the m-move family graph (m = 0, 1).

    m = 0 is the tetrahedron, Y = sixj^2; m = 1 the blown-up tetrahedron
    (triangular prism), Y = sixj^4.  The prism identity is checked
    against the graph evaluator in the tests; here it keeps the series
    at one scalar 6j per level up to r = 301.
    """
    if m not in (0, 1):
        raise ValueError("fast path covers m = 0 and m = 1 only")
    c = maximizing_color(r)
    info = sixj_info(c, c, c, c, c, c, Level.of(r))
    lg = (2 + 2 * m) * info["value"].log_abs()
    slope = (math.pi / r) * lg
    target = (m + 1) * V8
    return ScanRecord(
        r=r, kind=f"family-m{m}", color_policy=f"maximizer[c={c}]",
        log_value=lg, slope=slope, target=target,
        rel_gap=(slope - target) / target,
        cancel_digits=float(info["cancel_digits"]),
    )


# ---------------------------------------------------------------------------
# level orchestration


def run_levels(fn: Callable[[int], ScanRecord], rs: Sequence[int], *,
               threads: int = 1, timings: bool = False,
               mark: Optional[tuple[str, str]] = None) -> list[ScanRecord]:
    """Evaluate fn(r) over levels, in parallel, assembled in r order.

    Each level is computed independently, so the result list (and any
    CSV built from it) is identical for every thread count.  With
    timings=True the per-level wall time is stored on the records --
    leave it off when byte-stable output matters.  mark=(kind, policy)
    converts a BudgetExceeded at one level into a placeholder record
    (policy suffixed with "!budget") instead of aborting the scan.
    """
    rs = sorted(set(int(r) for r in rs))

    def one(r: int) -> ScanRecord:
        t0 = time.perf_counter()
        try:
            rec = fn(r)
        except BudgetExceeded:
            if mark is None:
                raise
            kind, policy = mark
            rec = ScanRecord(
                r=r, kind=kind, color_policy=policy + "!budget",
                log_value=math.nan, slope=math.nan, target=None,
                rel_gap=None, cancel_digits=0.0,
            )
        if timings:
            rec.wall_ms = (time.perf_counter() - t0) * 1e3
        return rec

    if threads <= 1:
        return [one(r) for r in rs]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        futs = {r: ex.submit(one, r) for r in rs}
        return [futs[r].result() for r in rs]
