"""Quantum integers, admissibility, and tetrahedral 6j symbols at odd levels.

Everything here lives at a fixed odd integer level r >= 3, with
q = exp(2*pi*i/r).  The quantum integer is

    [n] = sin(2*pi*n/r) / sin(2*pi/r),

which is periodic mod r, vanishes exactly when r divides n, and is
negative for (r+1)/2 <= n mod r <= r-1.  Colors are the even integers
0, 2, ..., r-3; a triple of colors is admissible when it satisfies the
triangle inequalities and its sum is at most 2r-4.

Two sign conventions for the value of a closed colored loop circulate in
tables: (-1)^n [n+1] and (-1)^(n+1) [n+1].  They differ by a global sign.
The evaluation machinery in this package consistently uses the first one
(``circle_weight``): it is the one under which the fusion identity
sum_i circle_weight(i) = circle_weight(a) * circle_weight(b) over
admissible i, and the handle-slide identities, come out with the correct
signs.  ``loop_weight`` returns the second variant for comparison with
sources that use it.
"""

from __future__ import annotations

import math
import os
import threading

import mpmath as mp

from .errors import DegenerateTheta, Inadmissible
from .extscalar import ExtScalar, SignLogReal

_SIXJ_CACHE_MAX = 1 << 21

# mpmath's working precision is process-global state; every high-precision
# evaluation in the package serializes on this lock so parallel level scans
# stay deterministic.
MP_LOCK = threading.RLock()


class Level:
    """Fixed odd level r with cached quantum-number tables.

    Attributes:
        r: the level (odd, >= 3).
        m: number of colors, (r-1)/2.
        colors: the even integers 0, 2, ..., r-3.
    """

    _instances: dict[int, "Level"] = {}

    def __init__(self, r: int):
        if not isinstance(r, int) or r < 3 or r % 2 == 0:
            raise ValueError(f"level must be an odd integer >= 3, got {r!r}")
        self.r = r
        self.m = (r - 1) // 2
        self.colors = tuple(range(0, r - 2, 2))
        s0 = math.sin(2 * math.pi / r)
        # [k] for k = 0 .. r-1; extended periodically by qint().
        self._qint = [math.sin(2 * math.pi * k / r) / s0 for k in range(r)]
        self._qint[0] = 0.0
        # [k]! for k = 0 .. r-1 in sign-log form.
        facts = [SignLogReal(1, 0.0)]
        for k in range(1, r):
            facts.append(facts[-1] * SignLogReal.from_float(self._qint[k]))
        self._qfact = facts
        self._sixj_cache: dict[tuple, tuple[ExtScalar, dict]] = {}
        self._mp_fact: dict[int, list] = {}

    @classmethod
    def of(cls, r) -> "Level":
        if isinstance(r, Level):
            return r
        lv = cls._instances.get(r)
        if lv is None:
            lv = cls(r)
            cls._instances[r] = lv
        return lv

    def qint(self, n: int) -> float:
        return self._qint[n % self.r]

    def qfact(self, n: int) -> SignLogReal:
        if n < 0:
            raise ValueError(f"[n]! needs n >= 0, got {n}")
        if n >= self.r:
            # the product picks up the factor [r] = 0
            return SignLogReal(0)
        return self._qfact[n]

    def _mp_facts(self, prec: int) -> list:
        """[k]! for k = 0 .. r-1 as signed mpf at the given precision."""
        cached = self._mp_fact.get(prec)
        if cached is not None:
            return cached
        with MP_LOCK, mp.workprec(prec):
            two_pi = 2 * mp.pi
            s0 = mp.sin(two_pi / self.r)
            facts = [mp.mpf(1)]
            for k in range(1, self.r):
                facts.append(facts[-1] * mp.sin(two_pi * k / self.r) / s0)
        self._mp_fact[prec] = facts
        return facts

    def __repr__(self):
        return f"Level(r={self.r})"


def _lv(level) -> Level:
    return Level.of(level)


def quantum_integer(n: int, level) -> float:
    """[n] = sin(2*pi*n/r) / sin(2*pi/r), periodic mod r."""
    return _lv(level).qint(n)


def quantum_factorial(n: int, level) -> SignLogReal:
    """[n]! = [1][2]...[n] in sign-log form; [0]! = 1, zero for n >= r."""
    return _lv(level).qfact(n)


def circle_weight(n: int, level) -> float:
    """Value of a closed loop colored n: (-1)^n [n+1].

    This is the convention used throughout the evaluation machinery (see
    the module docstring).  On even colors it equals [n+1], which is
    negative once n+1 passes (r-1)/2.
    """
    lv = _lv(level)
    w = lv.qint(n + 1)
    return -w if n % 2 else w


def loop_weight(n: int, level) -> float:
    """The opposite-sign loop convention: (-1)^(n+1) [n+1].

    Equal to -circle_weight(n, level) for every n.  Provided for
    comparison with tables that normalize the circle this way; nothing
    internal uses it.
    """
    return -circle_weight(n, level)


def is_admissible_triple(a: int, b: int, c: int, level) -> bool:
    """Admissibility of a color triple at level r.

    Requires even integers in [0, r-2] satisfying the triangle
    inequalities with a + b + c <= 2r - 4.
    """
    lv = _lv(level)
    for x in (a, b, c):
        if not isinstance(x, int) or x < 0 or x > lv.r - 2 or x % 2:
            return False
    if a + b + c > 2 * lv.r - 4:
        return False
    return abs(a - b) <= c <= a + b


def is_admissible_sixtuple(colors, level) -> bool:
    """Admissibility of the four vertex triples of a tetrahedral 6-tuple.

    The tuple (n1, ..., n6) is admissible when (n1,n2,n3), (n1,n5,n6),
    (n2,n4,n6) and (n3,n4,n5) all are.
    """
    n1, n2, n3, n4, n5, n6 = colors
    return (
        is_admissible_triple(n1, n2, n3, level)
        and is_admissible_triple(n1, n5, n6, level)
        and is_admissible_triple(n2, n4, n6, level)
        and is_admissible_triple(n3, n4, n5, level)
    )


def admissible_triples(level):
    """All admissible triples (a, b, c) at the level, lexicographic."""
    lv = _lv(level)
    out = []
    for a in lv.colors:
        for b in lv.colors:
            for c in lv.colors:
                if is_admissible_triple(a, b, c, lv):
                    out.append((a, b, c))
    return out


def fusion_colors(a: int, b: int, level):
    """Colors i with (a, b, i) admissible, ascending."""
    lv = _lv(level)
    return tuple(i for i in lv.colors if is_admissible_triple(a, b, i, lv))


def theta_signlog(a: int, b: int, c: int, level) -> SignLogReal:
    """Theta(a,b,c) in sign-log form; raises Inadmissible when undefined."""
    lv = _lv(level)
    if not is_admissible_triple(a, b, c, lv):
        raise Inadmissible(f"triple ({a},{b},{c}) not admissible at r={lv.r}")
    s = (a + b + c) // 2
    th = lv.qfact(s + 1) / (lv.qfact(s - a) * lv.qfact(s - b) * lv.qfact(s - c))
    if s % 2:
        th = SignLogReal(-th.sign, th.log)
    return th


def theta_weight(a: int, b: int, c: int, level) -> float:
    """Theta(a,b,c) = (-1)^S [S+1]! / ([S-a]! [S-b]! [S-c]!), S = (a+b+c)/2.

    Returned as a float, which is adequate at the small levels where one
    wants the number itself; large-level code works with theta_signlog.
    """
    return theta_signlog(a, b, c, level).to_float()


def vertex_weight(a: int, b: int, c: int, level) -> ExtScalar:
    """The vertex normalization Theta(a,b,c)^(-1/2).

    For Theta > 0 this is the positive real root; for Theta < 0 it is
    -i / sqrt(|Theta|), so that the square is 1/Theta in both cases.
    """
    th = theta_signlog(a, b, c, level)
    if th.sign == 0:
        # Cannot occur at odd r: Theta is a ratio of factorials whose
        # factors [k] all have 1 <= k <= r-1, and none of those vanish.
        raise DegenerateTheta(f"theta({a},{b},{c}) = 0 at r={_lv(level).r}")
    if th.sign > 0:
        return ExtScalar.from_log(-0.5 * th.log, sign=1, quadrant=0)
    return ExtScalar.from_log(-0.5 * th.log, sign=1, quadrant=1)


# The 6j symbol is invariant under the symmetries of the tetrahedron it
# labels: the color pairs (n1,n4), (n2,n5), (n3,n6) sit on opposite edge
# pairs, and the group (order 24) permutes the three pairs arbitrarily
# and swaps the two members of exactly two pairs at a time.
_COL_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
_COL_FLIPS = ((0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1))


def _canonical_sixtuple(t):
    cols = ((t[0], t[3]), (t[1], t[4]), (t[2], t[5]))
    best = None
    for p in _COL_PERMS:
        pc = (cols[p[0]], cols[p[1]], cols[p[2]])
        for f in _COL_FLIPS:
            img = (
                pc[0][f[0]], pc[1][f[1]], pc[2][f[2]],
                pc[0][1 - f[0]], pc[1][1 - f[1]], pc[2][1 - f[2]],
            )
            if best is None or img < best:
                best = img
    return best


def _sum_ranges(t):
    """Triple half-sums T_i, square half-sums Q_j, and the z range."""
    n1, n2, n3, n4, n5, n6 = t
    T = (
        (n1 + n2 + n3) // 2,
        (n1 + n5 + n6) // 2,
        (n2 + n4 + n6) // 2,
        (n3 + n4 + n5) // 2,
    )
    Q = (
        (n1 + n2 + n4 + n5) // 2,
        (n1 + n3 + n4 + n6) // 2,
        (n2 + n3 + n5 + n6) // 2,
    )
    return T, Q


def _sixj_double(t, lv):
    """Sum-over-z evaluation in doubles, with a cancellation estimate."""
    T, Q = _sum_ranges(t)
    zlo = max(T)
    zhi = min(min(Q), lv.r - 2)
    # Admissibility makes the range nonempty (Q_j >= T_i always); terms
    # with z >= r-1 would contain the factor [r] = 0 and are dropped by
    # the clamp.
    pos = neg = 0.0
    cpos = cneg = 0.0
    logs = []
    signs = []
    for z in range(zlo, zhi + 1):
        term = lv.qfact(z + 1)
        for ti in T:
            term = term / lv.qfact(z - ti)
        for qj in Q:
            term = term / lv.qfact(qj - z)
        sign = -term.sign if z % 2 else term.sign
        logs.append(term.log)
        signs.append(sign)
    lmax = max(logs)
    for lg, sg in zip(logs, signs):
        x = math.exp(lg - lmax)
        if sg > 0:
            y = x - cpos
            tt = pos + y
            cpos = (tt - pos) - y
            pos = tt
        else:
            y = x - cneg
            tt = neg + y
            cneg = (tt - neg) - y
            neg = tt
    s = pos - neg
    total = pos + neg
    nterms = len(logs)
    if s == 0.0:
        return None, math.inf, nterms  # full cancellation: defer to mp
    cond = total / abs(s)
    cancel = math.log10(cond) if cond > 1 else 0.0
    if cond * nterms * 2.0 ** -52 > 1e-8:
        return None, cancel, nterms
    sl = SignLogReal(1 if s > 0 else -1, lmax + math.log(abs(s)))
    return sl, cancel, nterms


def _sixj_mp(t, lv, prec):
    """Full recomputation of the symbol with mpmath at prec bits."""
    T, Q = _sum_ranges(t)
    zlo = max(T)
    zhi = min(min(Q), lv.r - 2)
    facts = lv._mp_facts(prec)
    with MP_LOCK, mp.workprec(prec):
        zsum = mp.mpf(0)
        for z in range(zlo, zhi + 1):
            term = facts[z + 1]
            for ti in T:
                term /= facts[z - ti]
            for qj in Q:
                term /= facts[qj - z]
            zsum += -term if z % 2 else term
        triples = _vertex_triples(t)
        quad = 0
        prefmag = mp.mpf(1)
        for (a, b, c) in triples:
            s = (a + b + c) // 2
            th = facts[s + 1] / (facts[s - a] * facts[s - b] * facts[s - c])
            if s % 2:
                th = -th
            if th < 0:
                quad += 1
            prefmag /= mp.sqrt(abs(th))
        mag = abs(zsum) * prefmag
        if mag == 0:
            return ExtScalar()
        lg = float(mp.log(mag))
        sign = 1 if zsum > 0 else -1
    return ExtScalar.from_log(lg, sign=sign, quadrant=quad)


def _vertex_triples(t):
    n1, n2, n3, n4, n5, n6 = t
    return ((n1, n2, n3), (n1, n5, n6), (n2, n4, n6), (n3, n4, n5))


def _mp_precision(lv):
    envbits = int(os.environ.get("SKEIN_PRECISION_BITS", "0") or 0)
    return max(lv.r + 64, envbits)


def sixj_info(n1, n2, n3, n4, n5, n6, level) -> dict:
    """The 6j symbol together with evaluation diagnostics.

    Returns a dict with keys ``value`` (ExtScalar), ``admissible``,
    ``terms`` (length of the z sum), ``cancel_digits`` (decimal digits
    lost to cancellation in the alternating sum, as estimated from the
    double-precision pass), ``used_mp`` and ``prec_bits``.
    """
    lv = _lv(level)
    t = (n1, n2, n3, n4, n5, n6)
    if not is_admissible_sixtuple(t, lv):
        return {
            "value": ExtScalar(),
            "admissible": False,
            "terms": 0,
            "cancel_digits": 0.0,
            "used_mp": False,
            "prec_bits": None,
        }
    key = _canonical_sixtuple(t)
    hit = lv._sixj_cache.get(key)
    if hit is not None:
        return {"value": hit[0], **hit[1]}
    sl, cancel, nterms = _sixj_double(key, lv)
    if sl is None:
        prec = _mp_precision(lv)
        value = _sixj_mp(key, lv, prec)
        info = {
            "admissible": True,
            "terms": nterms,
            "cancel_digits": cancel,
            "used_mp": True,
            "prec_bits": prec,
        }
    else:
        quad = 0
        preflog = 0.0
        for tri in _vertex_triples(key):
            th = theta_signlog(*tri, lv)
            if th.sign < 0:
                quad += 1
            preflog -= 0.5 * th.log
        value = ExtScalar.from_log(preflog + sl.log, sign=sl.sign, quadrant=quad)
        info = {
            "admissible": True,
            "terms": nterms,
            "cancel_digits": cancel,
            "used_mp": False,
            "prec_bits": None,
        }
    if len(lv._sixj_cache) >= _SIXJ_CACHE_MAX:
        lv._sixj_cache.clear()
    lv._sixj_cache[key] = (value, info)
    return {"value": value, **info}


def sixj(n1, n2, n3, n4, n5, n6, level) -> ExtScalar:
    """Tetrahedral 6j symbol at the level, as an ExtScalar.

    The six colors label the edges of a tetrahedron so that the vertex
    triples are (n1,n2,n3), (n1,n5,n6), (n2,n4,n6), (n3,n4,n5); the pairs
    (n1,n4), (n2,n5), (n3,n6) sit on opposite edges.  The value is

        prod_v Theta(v)^(-1/2) *
        sum_z (-1)^z [z+1]! / (prod_i [z-T_i]! * prod_j [Q_j-z]!)

    with z running from max_i T_i to min(min_j Q_j, r-2).  It is purely
    real when the number of negative vertex thetas is even and purely
    imaginary when odd.  Inadmissible tuples give zero.

    The alternating sum is evaluated in log-shifted double precision with
    compensated positive/negative accumulation; when the cancellation
    estimate says doubles cannot deliver ~8 significant digits the symbol
    is recomputed with mpmath (precision max(r+64, SKEIN_PRECISION_BITS)).
    Values are memoized per level under the 24 tetrahedral symmetries.
    """
    return sixj_info(n1, n2, n3, n4, n5, n6, level)["value"]


def kirby_norm(level) -> float:
    """N = r / (4 sin^2(2 pi / r)), the square norm of the Kirby color.

    Equals sum over colors i of circle_weight(i)^2 = sum [i+1]^2.
    """
    lv = _lv(level)
    s = math.sin(2 * math.pi / lv.r)
    return lv.r / (4 * s * s)
