"""Independent L-function oracle by counting points on fibers.

For every place v of F_p(y) of degree <= m/2+1 (m = 2d-4), including
infinity, the trace a_v comes from a quadratic-character sum over the
residue field.  The uniform formula a_v = q_v - #{(x,z): z^2 = Q(x,y_v)}
works at both good and multiplicative places (the projective smooth locus
has q_v + 1 - a_v resp. q_v - a_v points).  log L(T) = sum_k S_k T^k / k
with S_k the sum of fiber traces over P^1(F_{p^k}), so exponentiating the
truncated sum and completing with the functional equation recovers L
exactly.  When the sign is not visible at depth m/2+1 the place degree
escalates; a_0 = 1 pins it at depth m at the very latest.

Field arithmetic is table based in the multiplicative group: elements are
discrete logs of a fixed generator, addition goes through the Zech table
zech[n] = log(1 + g^n), and the quadratic character is log parity.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import fppoly as fp
from .errors import SignAmbiguity

__all__ = [
    "FieldTables", "PlaceData", "count_affine_fiber", "local_factor",
    "oracle_lfunction", "oracle_series_coefficients", "surface_point_count",
    "infinity_fiber_trace", "fiber_trace_ap",
]

_FIELD_CACHE = {}

LOG_ZERO = -1  # sentinel for the zero element in log representation


class FieldTables:
    """F_{p^j} via discrete-log tables: exp, log, Zech."""

    def __init__(self, p, j):
        self.p = p
        self.j = j
        self.q = q = p**j
        self.m = q - 1
        self.modulus = fp.first_irreducible(p, j)
        self.pows = p ** np.arange(j, dtype=np.int64)
        g = self._find_generator()
        exp = np.empty(q - 1, dtype=np.int64)
        cur = [1]
        for i in range(q - 1):
            exp[i] = _pack(cur, p)
            cur = fp.divmod_poly(fp.mul(cur, g, p), self.modulus, p)[1]
        if _pack(cur, p) != 1:
            raise AssertionError("generator walk did not close")
        log = np.full(q, LOG_ZERO, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        self.exp = exp
        self.log = log
        # zech[n] = log(1 + g^n), LOG_ZERO where 1 + g^n = 0
        digits = self._digits(exp)
        digits[:, 0] = (digits[:, 0] + 1) % p
        plus_one = digits @ self.pows
        self.zech = log[plus_one]
        self.log_minus_one = self.m // 2  # g^((q-1)/2) = -1, p odd

    def _digits(self, idx):
        out = np.empty((np.size(idx), self.j), dtype=np.int64)
        t = np.array(idx, dtype=np.int64, copy=True)
        for i in range(self.j):
            out[:, i] = t % self.p
            t //= self.p
        return out

    def _find_generator(self):
        q1 = self.q - 1
        factors = []
        n, d = q1, 2
        while d * d <= n:
            if n % d == 0:
                factors.append(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            factors.append(n)
        for cand in range(1, self.q):
            coeffs = fp.trim(
                [(cand // self.p**i) % self.p for i in range(self.j)]
            )
            if not coeffs:
                continue
            if all(
                fp.pow_mod(coeffs, q1 // f, self.modulus, self.p) != [1]
                for f in factors
            ):
                return coeffs
        raise AssertionError("no generator found (unreachable)")

    # -- log-domain vector helpers -------------------------------------------

    def zadd(self, la, lb):
        """Log of g^la + g^lb with LOG_ZERO sentinels, elementwise."""
        la = np.asarray(la, dtype=np.int64)
        lb = np.asarray(lb, dtype=np.int64)
        la, lb = np.broadcast_arrays(la, lb)
        out = np.where(la == LOG_ZERO, lb, la).copy()
        both = (la != LOG_ZERO) & (lb != LOG_ZERO)
        d = (la[both] - lb[both]) % self.m
        z = self.zech[d]
        res = np.where(z == LOG_ZERO, LOG_ZERO, (lb[both] + z) % self.m)
        out[both] = res
        return out

    def zadd_units(self, la, lb):
        """zadd for inputs known to contain no zeros (still may output zero)."""
        z = self.zech[(la - lb) % self.m]
        return np.where(z == LOG_ZERO, LOG_ZERO, (lb + z) % self.m)

    def zmul_const(self, lx, lc):
        """Log of c * g^lx (lc = LOG_ZERO kills everything)."""
        lx = np.asarray(lx, dtype=np.int64)
        if lc == LOG_ZERO:
            return np.full_like(lx, LOG_ZERO)
        return np.where(lx == LOG_ZERO, LOG_ZERO, (lx + lc) % self.m)

    def zneg(self, lx):
        return self.zmul_const(lx, self.log_minus_one)

    def chi_sum(self, logs):
        """Sum of the quadratic character over an array of log values."""
        nonzero = logs != LOG_ZERO
        n_units = int(nonzero.sum())
        n_odd = int((nonzero & (logs & 1).astype(bool)).sum())
        return n_units - 2 * n_odd

    def zeval_fp_poly(self, coeffs, lpoints):
        """Horner evaluation of an F_p[y] polynomial at log-domain points."""
        acc = np.full_like(np.asarray(lpoints, dtype=np.int64), LOG_ZERO)
        lpoints = np.asarray(lpoints, dtype=np.int64)
        for c in reversed(coeffs):
            # acc = acc * y + c
            prod = np.where(
                (acc == LOG_ZERO) | (lpoints == LOG_ZERO),
                LOG_ZERO,
                (acc + lpoints) % self.m,
            )
            lc = self.log_of_int(c)
            if lc == LOG_ZERO:
                acc = prod
            else:
                acc = self.zadd(prod, np.full_like(prod, lc))
        return acc

    def log_of_int(self, c):
        c %= self.p
        return LOG_ZERO if c == 0 else int(self.log[c])

    def scalar_zadd(self, la, lb):
        return int(self.zadd(np.array([la]), np.array([lb]))[0])

    def scalar_zmul(self, la, lb):
        if la == LOG_ZERO or lb == LOG_ZERO:
            return LOG_ZERO
        return (la + lb) % self.m

    def index_of_log(self, lx):
        return 0 if lx == LOG_ZERO else int(self.exp[lx])


def _pack(coeffs, p):
    return sum(int(c) * p**i for i, c in enumerate(coeffs))


def field_tables(p, j):
    key = (p, j)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldTables(p, j)
    return _FIELD_CACHE[key]


@dataclass
class PlaceData:
    degree: int
    reduction: str  # "good" or "multiplicative"
    a_v: int
    v: object = None  # monic irreducible coefficient list, or "infinity"


def count_affine_fiber(fam, y0):
    """#{(x,z) in F^2 : z^2 = x^3 + a(y0)x + b(y0)} for y0 an ExtElement."""
    field = y0.field
    a0 = _eval_at(fam.a, y0)
    b0 = _eval_at(fam.b, y0)
    count = 0
    for x in field.elements():
        val = x * x * x + a0 * x + b0
        count += 1 + val.chi()
    return count


def _eval_at(coeffs, y0):
    field = y0.field
    acc = field.zero()
    for c in reversed(coeffs):
        acc = acc * y0 + field(c)
    return acc


def _chi_cubic_sum(t, la, lb):
    """sum_x chi(x^3 + A x + B) over all x in the field, A = g^la, B = g^lb."""
    return int(_chi_cubic_sums_batch(t, np.array([la]), np.array([lb]))[0])


def _chi_cubic_sums_batch(t, las, lbs, chunk=32):
    """Vectorised sum_x chi(x^3 + A_i x + B_i) for arrays of A, B logs."""
    if not hasattr(t, "_ts"):
        t._ts = np.arange(t.m, dtype=np.int64)
        t._cubes = (3 * t._ts) % t.m
    ts, cubes, m = t._ts, t._cubes, t.m
    n = len(las)
    out = np.empty(n, dtype=np.int64)
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        la = np.asarray(las[lo:hi], dtype=np.int64)[:, None]
        lb = np.asarray(lbs[lo:hi], dtype=np.int64)[:, None]
        # x^3 + A x over units: rows with A = 0 fall back to x^3 alone
        ax = (ts[None, :] + la) % m
        z = t.zech[(cubes[None, :] - ax) % m]
        s = np.where(z == LOG_ZERO, LOG_ZERO, (ax + z) % m)
        s = np.where(la == LOG_ZERO, cubes[None, :], s)
        # + B (skip rows with B = 0)
        z2 = t.zech[(s - lb) % m]
        s2 = np.where(z2 == LOG_ZERO, LOG_ZERO, (lb + z2) % m)
        s2 = np.where(s == LOG_ZERO, lb, s2)
        s2 = np.where(lb == LOG_ZERO, s, s2)
        nonzero = s2 != LOG_ZERO
        n_units = nonzero.sum(axis=1)
        n_odd = (nonzero & (s2 & 1).astype(bool)).sum(axis=1)
        total = n_units - 2 * n_odd
        # x = 0 contributes chi(B)
        lbf = lb[:, 0]
        total += np.where(lbf == LOG_ZERO, 0, 1 - 2 * (lbf & 1))
        out[lo:hi] = total
    return out


def fiber_trace_ap(p, a0, b0):
    """a = p - #affine points of z^2 = x^3 + a0 x + b0 over F_p."""
    t = field_tables(p, 1)
    return -_chi_cubic_sum(t, t.log_of_int(a0), t.log_of_int(b0))


def infinity_fiber_trace(fam):
    """Trace at the good place y = infinity, via v = 1/y, u = v^{2e}x,
    w = v^{3e}z: the fiber at v = 0 is z^2 = x^3 + a~(0) x + b~(0)."""
    e = fam.e
    a_inf = fam.a[4 * e] if len(fam.a) > 4 * e else 0
    b_inf = fam.b[6 * e]  # leading coefficient, nonzero for valid families
    return fiber_trace_ap(fam.p, a_inf, b_inf)


def _places_of_degree(fam, j):
    """Places of degree exactly j as (log_rep, reduction, a_v) triples."""
    p = fam.p
    t = field_tables(p, j)
    if j == 1:
        reps = np.array([t.log_of_int(c) for c in range(p)], dtype=np.int64)
    else:
        ts = np.arange(t.m, dtype=np.int64)
        orbit_min = ts.copy()
        cur = ts.copy()
        in_subfield = np.zeros(t.m, dtype=bool)
        for _ in range(1, j):
            cur = (cur * p) % t.m
            orbit_min = np.minimum(orbit_min, cur)
            in_subfield |= cur == ts
        reps = ts[(orbit_min == ts) & ~in_subfield]
    la_all = t.zeval_fp_poly(fam.a, reps)
    lb_all = t.zeval_fp_poly(fam.b, reps)
    ld_all = t.zeval_fp_poly(fam.delta, reps)
    traces = -_chi_cubic_sums_batch(t, la_all, lb_all)
    out = []
    for lr, a_place, ld in zip(reps.tolist(), traces.tolist(), ld_all):
        red = "multiplicative" if ld == LOG_ZERO else "good"
        if red == "multiplicative":
            if a_place not in (1, -1):
                raise AssertionError(f"multiplicative trace {a_place} not +-1")
        elif a_place * a_place > 4 * t.q:
            raise AssertionError("Hasse bound violated")
        out.append((lr, red, a_place))
    return t, out


def _min_poly(t, log_rep):
    """Monic minimal polynomial over F_p of g^log_rep (coefficients as ints)."""
    prod = [0]  # ascending coefficients as logs; starts as the constant 1
    prod = [t.log_of_int(1)]
    cur = log_rep
    for _ in range(t.j):
        neg = t.scalar_zmul(cur, t.log_minus_one) if cur != LOG_ZERO else LOG_ZERO
        new = [LOG_ZERO] * (len(prod) + 1)
        for i, c in enumerate(prod):
            if c != LOG_ZERO:
                new[i + 1] = t.scalar_zadd(new[i + 1], c)
                new[i] = t.scalar_zadd(new[i], t.scalar_zmul(c, neg))
        prod = new
        cur = LOG_ZERO if cur == LOG_ZERO else (cur * t.p) % t.m
    out = []
    for c in prod:
        idx = t.index_of_log(c)
        if idx >= t.p:
            raise AssertionError("minimal polynomial not over F_p")
        out.append(idx)
    return fp.trim(out)


def local_factor(place, p):
    """Ascending coefficients of the place's local Euler factor in T."""
    d = place.degree
    q_v = p**d
    if place.reduction == "good":
        out = [0] * (2 * d + 1)
        out[0] = 1
        out[d] = -place.a_v
        out[2 * d] = q_v
        return out
    out = [0] * (d + 1)
    out[0] = 1
    out[d] = -place.a_v
    return out


def _power_sum_good(a, q, n):
    """alpha^n + beta^n for the quadratic 1 - a T + q T^2."""
    t0, t1 = 2, a
    if n == 0:
        return t0
    for _ in range(n - 1):
        t0, t1 = t1, a * t1 - q * t0
    return t1


def oracle_series_coefficients(fam, K):
    """First K+1 power-series coefficients of L from places of degree <= K.
    These equal the polynomial coefficients a_0..a_K exactly."""
    coeffs, _ = _oracle_coefficients(fam, K, None)
    return coeffs


def oracle_lfunction(fam, collect_places=False):
    """The exact L-polynomial from the Euler product, completed by the
    functional equation."""
    p = fam.p
    m = 2 * fam.d - 4
    K = m // 2 + 1
    cache = {}
    while True:
        places = [] if collect_places else None
        coeffs, eps = _oracle_coefficients(fam, K, places, cache)
        if eps is not None:
            break
        if K >= m:
            raise SignAmbiguity(
                "both functional-equation signs consistent at full depth"
            )
        K += 1
    from .weil import WeilPolynomial, complete_by_functional_equation

    full = complete_by_functional_equation(coeffs, m, p, eps)
    wp = WeilPolynomial(full, p, eps)
    wp.verify_root_moduli()
    if collect_places:
        wp.places = places
    return wp


def _oracle_coefficients(fam, K, places_out, cache=None):
    """First K+1 series coefficients of L, plus the functional-equation sign
    when determined (None if undetermined at this depth)."""
    p = fam.p
    m = 2 * fam.d - 4
    if cache is None:
        cache = {}
    S = [0] * (K + 1)
    a_inf = infinity_fiber_trace(fam)
    for k in range(1, K + 1):
        S[k] += _power_sum_good(a_inf, p, k)
    if places_out is not None:
        places_out.append(PlaceData(1, "good", a_inf, "infinity"))
    for j in range(1, K + 1):
        if j not in cache:
            cache[j] = _places_of_degree(fam, j)
        t, data = cache[j]
        q_v = p**j
        for lr, red, a_v in data:
            if places_out is not None:
                places_out.append(PlaceData(j, red, a_v, _min_poly(t, lr)))
            for k in range(j, K + 1, j):
                n = k // j
                if red == "good":
                    S[k] += j * _power_sum_good(a_v, q_v, n)
                else:
                    S[k] += j * a_v**n
    # L = exp(sum S_k T^k / k), exact over Q
    c = [Fraction(1)] + [Fraction(0)] * K
    for n in range(1, K + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += Fraction(S[k]) * c[n - k]
        c[n] = acc / n
    out = []
    for n, x in enumerate(c):
        if x.denominator != 1:
            raise AssertionError(f"non-integral L coefficient at T^{n}: {x}")
        out.append(int(x))
    # epsilon from any visible coefficient pair (l, m-l) with a_l != 0
    eps = None
    for lo_deg in range(m // 2 - 1, max(m - K, -1) - 1, -1):
        hi_deg = m - lo_deg
        if hi_deg > K:
            continue
        lo, hi = out[lo_deg], out[hi_deg]
        if lo == 0:
            if hi != 0:
                raise AssertionError("functional equation violated by counts")
            continue
        scale = p ** (m - 2 * lo_deg)
        if hi == scale * lo:
            eps = 1
        elif hi == -scale * lo:
            eps = -1
        else:
            raise AssertionError("functional equation violated by counts")
        break
    return out, eps


def surface_point_count(fam, k=1):
    """#{(x,y,z) in F_{p^k}^3 : z^2 = x^3+a(y)x+b(y)} by brute force."""
    t = field_tables(fam.p, k)
    total = 0
    logs = [LOG_ZERO] + list(range(t.m))
    for ly in logs:
        point = np.array([ly], dtype=np.int64)
        la = int(t.zeval_fp_poly(fam.a, point)[0])
        lb = int(t.zeval_fp_poly(fam.b, point)[0])
        total += t.q + _chi_cubic_sum(t, la, lb)
    return total
