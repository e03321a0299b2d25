"""Exact arithmetic in cyclotomic fields, used as an evaluation oracle.

The floating-point 6j engine in qnum is cross-checked against exact
computation in Q(zeta_r).  Square roots of thetas are not elements of the
field, so the oracle computes the *square* of the 6j symbol: with
Delta(v)^2 = 1/Theta(v) the square is a ratio of quantum factorials and
lives in the field.  Everything here is coefficient vectors of Fractions
over the basis 1, zeta, ..., zeta^(d-1) with d = phi(r), reduced modulo
the cyclotomic polynomial Phi_r; nothing is shared with the float path
beyond the statement of the formulas.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .errors import BudgetExceeded, Inadmissible

_EMBED_BITS = 120


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (little-endian coefficient lists)


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _int_poly_div_exact(num, den):
    """Exact division of integer polynomials; den must be monic and divide num."""
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dn]
        q[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    if any(num[:dn]):
        raise ArithmeticError("polynomial division left a remainder")
    return q


def cyclotomic_poly(r):
    """Phi_r as an integer coefficient list, via x^r - 1 = prod_{d|r} Phi_d."""
    polys = {}
    for d in _divisors(r):
        xd1 = [0] * d + [1]
        xd1[0] = -1
        p = xd1
        for e in _divisors(d)[:-1]:
            p = _int_poly_div_exact(p, polys[e])
        polys[d] = p
    return polys[r]


def _pdeg(p):
    d = len(p) - 1
    while d >= 0 and p[d] == 0:
        d -= 1
    return d


def _pdivmod(num, den):
    """divmod for Fraction polynomials (den nonzero, not necessarily monic)."""
    num = list(num)
    dd = _pdeg(den)
    lead = den[dd]
    q = [Fraction(0)] * max(len(num) - dd, 1)
    for k in range(_pdeg(num) - dd, -1, -1):
        c = num[k + dd] / lead
        q[k] = c
        if c:
            for i in range(dd + 1):
                num[k + i] -= c * den[i]
    return q, num[:dd] if dd > 0 else [Fraction(0)]


class CycloField:
    """Q(zeta_r) with precomputed reduction rows for zeta^k."""

    _instances: dict[int, "CycloField"] = {}

    def __init__(self, r: int):
        self.r = r
        self.phi = cyclotomic_poly(r)
        self.d = len(self.phi) - 1
        d = self.d
        # rows[k] = coefficients of x^k reduced mod Phi_r (integers, since
        # Phi_r is monic).  Needed up to max(r-1, 2d-2) for products.
        kmax = max(r - 1, 2 * d - 2)
        rows = []
        for k in range(min(d, kmax + 1)):
            row = [0] * d
            row[k] = 1
            rows.append(row)
        for k in range(d, kmax + 1):
            prev = rows[k - 1]
            over = prev[d - 1]
            row = [-over * self.phi[0]] + [prev[i - 1] - over * self.phi[i] for i in range(1, d)]
            rows.append(row)
        self.rows = rows

    @classmethod
    def of(cls, r) -> "CycloField":
        f = cls._instances.get(r)
        if f is None:
            f = cls(r)
            cls._instances[r] = f
        return f

    def zero(self):
        return CycloExact(self, (Fraction(0),) * self.d)

    def one(self):
        return CycloExact(self, (Fraction(1),) + (Fraction(0),) * (self.d - 1))

    def zeta(self, k: int = 1):
        row = self.rows[k % self.r]
        return CycloExact(self, tuple(Fraction(c) for c in row))


class CycloExact:
    """An element of Q(zeta_r) as a Fraction vector over 1, zeta, ..., zeta^(d-1)."""

    __slots__ = ("field", "vec")

    def __init__(self, field: CycloField, vec):
        self.field = field
        self.vec = tuple(vec)

    def is_zero(self):
        return all(c == 0 for c in self.vec)

    def __eq__(self, other):
        if isinstance(other, CycloExact):
            return self.field.r == other.field.r and self.vec == other.vec
        return NotImplemented

    def __hash__(self):
        return hash((self.field.r, self.vec))

    def __add__(self, other):
        return CycloExact(self.field, tuple(a + b for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other):
        return CycloExact(self.field, tuple(a - b for a, b in zip(self.vec, other.vec)))

    def __neg__(self):
        return CycloExact(self.field, tuple(-a for a in self.vec))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloExact(self.field, tuple(a * other for a in self.vec))
        d = self.field.d
        conv = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.vec):
            if a == 0:
                continue
            for j, b in enumerate(other.vec):
                if b:
                    conv[i + j] += a * b
        out = list(conv[:d]) + [Fraction(0)] * (d - len(conv[:d]))
        rows = self.field.rows
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c == 0:
                continue
            row = rows[k]
            for j in range(d):
                if row[j]:
                    out[j] += c * row[j]
        return CycloExact(self.field, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        phi = [Fraction(c) for c in self.field.phi]
        r0, r1 = phi, list(self.vec)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _pdeg(r1) > 0:
            q, rem = _pdivmod(r0, r1)
            r0, r1 = r1, rem
            qs = _pmul(q, s1)
            s0, s1 = s1, _psub(s0, qs)
        c = r1[0]
        if c == 0:
            raise ZeroDivisionError("element not invertible (degenerate input)")
        d = self.field.d
        inv = [x / c for x in s1] + [Fraction(0)] * d
        return CycloExact(self.field, inv[:d])

    def embed(self, prec_bits: int = _EMBED_BITS) -> complex:
        """Numeric value at zeta = exp(2*pi*i/r), via mpmath."""
        with mp.workprec(prec_bits):
            z = mp.e ** (2j * mp.pi / self.field.r)
            acc = mp.mpc(0)
            p = mp.mpc(1)
            for c in self.vec:
                if c:
                    acc += p * mp.mpf(c.numerator) / mp.mpf(c.denominator)
                p *= z
            return complex(acc)

    def __repr__(self):
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.vec) if c]
        return "CycloExact(" + (" + ".join(terms) if terms else "0") + ")"


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


class CycloOracle:
    """Exact evaluation of quantum-number expressions at one level.

    Independent of the floating-point path: quantum integers are built
    from the Laurent expansion [n] = sum_j zeta^(n-1-2j), factorials and
    their inverses are exact field elements, and the 6j square is a ratio
    of those.  The default budget refuses levels past 31, where the
    Fraction arithmetic stops being worth the wait.
    """

    _instances: dict[int, "CycloOracle"] = {}

    def __init__(self, r: int, budget: int = 31):
        if r > budget:
            raise BudgetExceeded(f"exact oracle capped at r <= {budget}, got r={r}")
        if r < 3 or r % 2 == 0:
            raise ValueError(f"level must be an odd integer >= 3, got {r}")
        self.r = r
        self.field = CycloField.of(r)
        f = self.field
        self.qint = [f.zero()]
        for n in range(1, r):
            acc = f.zero()
            for j in range(n):
                acc = acc + f.zeta((n - 1 - 2 * j) % r)
            self.qint.append(acc)
        self.qfact = [f.one()]
        for n in range(1, r):
            self.qfact.append(self.qfact[-1] * self.qint[n])
        # One Euclid for the top factorial, then walk down with
        # 1/[n-1]! = [n] / [n]!.
        inv = [None] * r
        inv[r - 1] = self.qfact[r - 1].inverse()
        for n in range(r - 1, 0, -1):
            inv[n - 1] = inv[n] * self.qint[n]
        self.qfact_inv = inv

    @classmethod
    def of(cls, r, budget: int = 31) -> "CycloOracle":
        o = cls._instances.get(r)
        if o is None:
            o = cls(r, budget=budget)
            cls._instances[r] = o
        return o

    def _admissible_triple(self, a, b, c):
        if any(x < 0 or x > self.r - 2 or x % 2 for x in (a, b, c)):
            return False
        return abs(a - b) <= c <= a + b and a + b + c <= 2 * self.r - 4

    def theta(self, a, b, c) -> CycloExact:
        if not self._admissible_triple(a, b, c):
            raise Inadmissible(f"triple ({a},{b},{c}) not admissible at r={self.r}")
        s = (a + b + c) // 2
        th = self.qfact[s + 1] * self.qfact_inv[s - a] * self.qfact_inv[s - b] * self.qfact_inv[s - c]
        return -th if s % 2 else th

    def theta_inverse(self, a, b, c) -> CycloExact:
        if not self._admissible_triple(a, b, c):
            raise Inadmissible(f"triple ({a},{b},{c}) not admissible at r={self.r}")
        s = (a + b + c) // 2
        th = self.qfact_inv[s + 1] * self.qfact[s - a] * self.qfact[s - b] * self.qfact[s - c]
        return -th if s % 2 else th

    def sixj_square(self, colors) -> CycloExact:
        """Exact square of the tetrahedral 6j symbol; zero when inadmissible."""
        n1, n2, n3, n4, n5, n6 = colors
        triples = ((n1, n2, n3), (n1, n5, n6), (n2, n4, n6), (n3, n4, n5))
        if not all(self._admissible_triple(*t) for t in triples):
            return self.field.zero()
        T = [sum(t) // 2 for t in triples]
        Q = (
            (n1 + n2 + n4 + n5) // 2,
            (n1 + n3 + n4 + n6) // 2,
            (n2 + n3 + n5 + n6) // 2,
        )
        zsum = self.field.zero()
        for z in range(max(T), min(min(Q), self.r - 2) + 1):
            term = self.qfact[z + 1]
            for ti in T:
                term = term * self.qfact_inv[z - ti]
            for qj in Q:
                term = term * self.qfact_inv[qj - z]
            zsum = (zsum - term) if z % 2 else (zsum + term)
        out = zsum * zsum
        for t in triples:
            out = out * self.theta_inverse(*t)
        return out


def sixj_exact_square(n1, n2, n3, n4, n5, n6, level, budget: int = 31) -> complex:
    """Numeric value of the exact 6j square at the level.

    The computation runs entirely in Q(zeta_r) and is embedded at the
    end; use it to validate the floating-point engine.  Raises
    BudgetExceeded for levels past the budget.
    """
    r = level.r if hasattr(level, "r") else int(level)
    oracle = CycloOracle.of(r, budget=budget)
    return oracle.sixj_square((n1, n2, n3, n4, n5, n6)).embed()
