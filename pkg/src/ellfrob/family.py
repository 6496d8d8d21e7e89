"""The curve family z^2 = x^3 + a(y)x + b(y) over F_p and its validation.

A family is stored by its integer coefficient lifts (values in [0,p)); all
derived data (discriminant, weights, lattice parameters) is computed once at
construction.  Validation is exact linear algebra over F_p: squarefreeness
via gcd with the derivative, affine smoothness via the resultant-style
elimination explained at `validate`.
"""

import math
from dataclasses import dataclass

from . import fppoly as fp
from .errors import CurveFileError, RejectionExhausted

__all__ = [
    "WeierstrassFamily", "ValidityReport", "validate", "random_family",
    "weighted_params", "parse_curve_file", "format_curve_file", "SplitMix64",
]


class SplitMix64:
    """The published SplitMix64 recurrence; fixed so any implementation
    reproduces the same curve sequence."""

    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = seed & self.MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n):
        """next_u64() % n -- the fixed (documented) reduction."""
        return self.next_u64() % n


class WeierstrassFamily:
    """p plus the coefficient lifts of a(y), b(y), and derived data."""

    def __init__(self, p, a, b):
        self.p = p
        self.a = [c % p for c in fp.trim(a)]
        self.b = [c % p for c in fp.trim(b)]
        self.d = fp.degree(self.b)
        if self.d < 6 or self.d % 6 != 0:
            raise ValueError(f"deg(b) = {self.d} must be a positive multiple of 6")
        self.e = self.d // 6
        # delta = 4a^3 + 27b^2 over F_p, and the same formula on the lifts
        a3 = fp.mul(fp.mul(self.a, self.a, p), self.a, p)
        b2 = fp.mul(self.b, self.b, p)
        self.delta = fp.add(fp.scalar_mul(4, a3, p), fp.scalar_mul(27, b2, p), p)
        self.weights = (self.d // 3, 1, self.d // 2)  # (w_x, w_y, w_z)
        self.surface_degree = self.d
        self.k_lattice = max(2 * self.d - 4, 0)

    @property
    def lifted_a(self):
        return list(self.a)

    @property
    def lifted_b(self):
        return list(self.b)

    def lifted_delta(self):
        """4a^3 + 27b^2 over Z, computed from the canonical lifts."""
        out = {}

        def acc(coeffs, scale):
            for i, c in enumerate(coeffs):
                out[i] = out.get(i, 0) + scale * c

        a, b = self.a, self.b
        a3 = [0] * (3 * len(a) - 2) if a else []
        for i, x in enumerate(a):
            for j, y in enumerate(a):
                for k, z in enumerate(a):
                    a3[i + j + k] += x * y * z
        b2 = [0] * (2 * len(b) - 1) if b else []
        for i, x in enumerate(b):
            for j, y in enumerate(b):
                b2[i + j] += x * y
        acc(a3, 4)
        acc(b2, 27)
        n = max(out) + 1 if out else 0
        return [out.get(i, 0) for i in range(n)]

    def coker_exponent(self):
        return int(math.log(self.k_lattice + 1, self.p) + 1e-9)

    def curve_id(self):
        astr = ",".join(map(str, self.a)) or "0"
        bstr = ",".join(map(str, self.b))
        return f"p{self.p}_d{self.d}_a[{astr}]_b[{bstr}]"

    def __repr__(self):
        return f"WeierstrassFamily(p={self.p}, a={self.a}, b={self.b})"


@dataclass
class ValidityReport:
    p_large_enough: bool
    p_coprime_weights: bool
    b_degree_ok: bool
    a_degree_ok: bool
    delta_squarefree: bool
    delta_degree_ok: bool
    delta_nonzero_at_origin: bool
    affine_smooth: bool
    good_reduction_at_infinity: bool
    ambient_smooth: str = "skipped"  # "pass" / "fail" / "skipped"

    def is_valid(self):
        checks = [
            self.p_large_enough, self.p_coprime_weights, self.b_degree_ok,
            self.a_degree_ok, self.delta_squarefree, self.delta_degree_ok,
            self.delta_nonzero_at_origin, self.affine_smooth,
            self.good_reduction_at_infinity,
        ]
        if self.ambient_smooth == "fail":
            return False
        return all(checks)

    def failures(self):
        out = [
            name
            for name, ok in [
                ("p <= 3", self.p_large_enough),
                ("p divides a weight or e", self.p_coprime_weights),
                ("deg(b) not a multiple of 6 with unit lead", self.b_degree_ok),
                ("deg(a) > d/2", self.a_degree_ok),
                ("discriminant not squarefree", self.delta_squarefree),
                ("deg(delta) != 2d", self.delta_degree_ok),
                ("discriminant vanishes at 0", self.delta_nonzero_at_origin),
                ("affine surface not smooth", self.affine_smooth),
                ("bad reduction at infinity", self.good_reduction_at_infinity),
            ]
            if not ok
        ]
        if self.ambient_smooth == "fail":
            out.append("ambient projective surface not smooth")
        return out


def validate(fam, check_ambient_smooth=False):
    """Run every family condition independently and report.

    Affine smoothness: a singular point of z^2 = Q(x,y) forces z = 0,
    Q = Q_x = 0, so y0 is a root of delta = 4a^3+27b^2 and x0 is the double
    root -3b/(2a) of the cubic (a(y0) = 0 would force b(y0) = 0, i.e. a
    triple root, excluded by squarefreeness).  Adding Q_y = a'x + b' = 0
    eliminates x0: smooth over the closure iff gcd(delta, 2ab' - 3a'b) = 1.
    """
    p = fam.p
    d = fam.d
    wx, wy, wz = fam.weights
    p_large = p > 3
    p_coprime = all(w % p != 0 for w in (wx, wz)) and fam.e % p != 0
    b_ok = fp.degree(fam.b) == d and d % 6 == 0 and fam.b[-1] % p != 0
    a_ok = fp.degree(fam.a) <= d // 2
    delta = fam.delta
    sqfree = fp.is_squarefree(delta, p) if delta else False
    deg_ok = fp.degree(delta) == 2 * d
    at0 = bool(delta) and delta[0] != 0
    # gcd(delta, 2ab' - 3a'b) over F_p; T == 0 identically means every root
    # of delta is a singular point of the surface
    t = fp.trim(
        fp.sub(
            fp.scalar_mul(2, fp.mul(fam.a, fp.derivative(fam.b, p), p), p),
            fp.scalar_mul(3, fp.mul(fp.derivative(fam.a, p), fam.b, p), p),
            p,
        )
    )
    if not delta:
        smooth = False
    elif not t:
        smooth = fp.degree(delta) == 0
    else:
        smooth = fp.degree(fp.gcd(delta, t, p)) == 0
    # good reduction at infinity: delta~(0) = coeff of y^{2d} in delta != 0
    good_inf = deg_ok and delta[2 * d] != 0
    ambient = "skipped"
    if check_ambient_smooth:
        ambient = _ambient_smooth_check(fam)
    return ValidityReport(
        p_large_enough=p_large,
        p_coprime_weights=p_coprime,
        b_degree_ok=b_ok,
        a_degree_ok=a_ok,
        delta_squarefree=sqfree,
        delta_degree_ok=deg_ok,
        delta_nonzero_at_origin=at0,
        affine_smooth=smooth,
        good_reduction_at_infinity=good_inf,
        ambient_smooth=ambient,
    )


def _ambient_smooth_check(fam):
    """Smoothness of the projective surface z^6 = x^6 + a(y)x^2 + b(y), d = 6.

    Larger d reports "skipped".  Derivation (F = Z^6 - X^6 - A(Y,T)X^2 -
    B(Y,T) in P^3, with A, B the degree-4/6 homogenisations; p > 3 so the
    Euler relation recovers F from the partials):

      F_Z = 6Z^5 forces Z = 0 at any singular point.
      X = 0 branch: B_Y = B_T = 0, i.e. the binary sextic B has a repeated
        root; with deg(b) = 6 exactly that means b itself is not squarefree.
      X != 0 branch (u := X^2): 3u^2 + A = 0, A_Y u + B_Y = 0,
        A_T u + B_T = 0.  Nothing at T = 0 since A(Y,0) = 0 (deg a <= 3) and
        b_6 != 0.  On T = 1: if a'(y) != 0, eliminating u = -b'/a' leaves
          P1 := a(a')^2 + 3(b')^2 = 0  and  P2 := 2ab' - 3a'b = 0;
        if a'(y) = b'(y) = 0 the system collapses to delta(y) = 0.
    """
    p, d = fam.p, fam.d
    if d != 6:
        return "skipped"
    a, b = fam.a, fam.b
    da, db = fp.derivative(a, p), fp.derivative(b, p)
    if not fp.is_squarefree(b, p):
        return "fail"
    if not fp.trim(a):
        return "pass"  # 3u^2 = 0 forces X = 0; nothing further
    delta = fam.delta
    if not fp.trim(da):
        # a a nonzero constant: need b'(y) = 0 and delta(y) = 0 together
        if db and fp.degree(fp.gcd(db, delta, p)) > 0:
            return "fail"
        return "pass"
    p1 = fp.add(
        fp.mul(a, fp.mul(da, da, p), p),
        fp.scalar_mul(3, fp.mul(db, db, p), p),
        p,
    )
    p2 = fp.sub(
        fp.scalar_mul(2, fp.mul(a, db, p), p),
        fp.scalar_mul(3, fp.mul(da, b, p), p),
        p,
    )
    g = fp.gcd(p1, p2, p) if fp.trim(p2) else fp.monic(p1, p)
    # keep only the roots of g where a' != 0 (the a' = 0 points are handled
    # by the collapsed condition below)
    while fp.degree(g) > 0:
        h = fp.gcd(g, da, p)
        if fp.degree(h) == 0:
            break
        g = fp.divmod_poly(g, h, p)[0]
    if fp.degree(g) > 0:
        return "fail"
    common = fp.gcd(fp.gcd(da, db, p), delta, p)
    if fp.degree(common) > 0:
        return "fail"
    return "pass"


def random_family(p, d, seed, max_attempts=10000):
    """Deterministic rejection sampling of a valid family via SplitMix64."""
    if d % 6 != 0 or d <= 0:
        raise ValueError("d must be a positive multiple of 6")
    if p <= 3:
        raise ValueError("p must exceed 3")
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        a = [rng.below(p) for _ in range(d // 2 + 1)]
        b = [rng.below(p) for _ in range(d)] + [1 + rng.below(p - 1)]
        fam = WeierstrassFamily(p, a, b)
        if validate(fam).is_valid():
            return fam
    raise RejectionExhausted(f"no valid family in {max_attempts} attempts")


def weighted_params(fam):
    """(w_x, w_y, w_z, surface_degree, k_lattice, coker_exponent)."""
    wx, wy, wz = fam.weights
    return (wx, wy, wz, fam.surface_degree, fam.k_lattice, fam.coker_exponent())


def parse_curve_file(text):
    """Parse the line-oriented curve format: `p N` / `a c0 c1 ...` / `b ...`."""
    p = a = b = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        key = parts[0]
        try:
            values = [int(v) for v in parts[1:]]
        except ValueError:
            raise CurveFileError(lineno, f"non-integer token in {key!r} line")
        if key == "p":
            if len(values) != 1:
                raise CurveFileError(lineno, "p line needs exactly one integer")
            p = values[0]
        elif key == "a":
            a = values
        elif key == "b":
            b = values
        else:
            raise CurveFileError(lineno, f"unknown key {key!r}")
        if key in ("a", "b") and p is None:
            raise CurveFileError(lineno, "p must come before coefficient lines")
        if key in ("a", "b") and any(not (0 <= v < p) for v in values):
            raise CurveFileError(lineno, f"{key} coefficients must lie in [0, p)")
    if p is None or a is None or b is None:
        missing = [k for k, v in (("p", p), ("a", a), ("b", b)) if v is None]
        raise CurveFileError(0, f"missing line(s): {', '.join(missing)}")
    return WeierstrassFamily(p, a, b)


def format_curve_file(fam):
    return "p {}\na {}\nb {}\n".format(
        fam.p,
        " ".join(map(str, fam.a)) if fam.a else "0",
        " ".join(map(str, fam.b)),
    )
