"""Weil polynomials: recovery from p-adic approximations, functional
equation, root-modulus verification, analytic rank.

For weight 2 the reciprocal roots satisfy gamma -> p^2/gamma, giving
a_{m-l} = eps * p^{m-2l} * a_l with eps = a_m / p^m.  Coefficients are
recovered from approximations via centered lifts against the bound
|a_l| <= binom(m, l) p^l (all reciprocal roots have modulus p).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InsufficientPrecision,
    NoConsistentSign,
    RootModulusFailure,
    WeilBoundViolation,
)

__all__ = [
    "WeilPolynomial", "ApproxCoefficient", "recover_weil_polynomial",
    "complete_by_functional_equation", "analytic_rank",
]


class WeilPolynomial:
    """Integer polynomial L(T) of even degree m with |reciprocal roots| = p."""

    def __init__(self, coeffs, p, epsilon):
        if coeffs[0] != 1:
            raise ValueError("L(0) must be 1")
        self.coeffs = [int(c) for c in coeffs]
        self.p = p
        self.degree = len(coeffs) - 1
        self.epsilon = epsilon
        self.analytic_rank = analytic_rank(self.coeffs, p)

    def verify_root_moduli(self, rel_tol=1e-6):
        """All complex reciprocal roots must have |gamma| = p (relative)."""
        for r in self.reciprocal_roots():
            if abs(abs(r) - self.p) > rel_tol * self.p:
                raise RootModulusFailure(
                    f"reciprocal root {r} has modulus {abs(r)} != {self.p}"
                )

    def reciprocal_roots(self):
        """Polished complex reciprocal roots gamma_i (L = prod(1 - gamma T))."""
        m, p = self.degree, self.p
        # roots S of sum b_l S^l with b_l = a_l / p^l lie on |S| = 1 when the
        # Weil bound holds; gamma = p / S
        b = [self.coeffs[i] / float(p) ** i for i in range(m + 1)]
        roots = np.roots(list(reversed(b)))
        out = []
        coeffs_desc = list(reversed(b))
        dcoeffs = np.polyder(np.array(coeffs_desc))
        for r in roots:
            # Newton polish against the exact coefficients
            for _ in range(30):
                f = np.polyval(coeffs_desc, r)
                df = np.polyval(dcoeffs, r)
                if df == 0:
                    break
                step = f / df
                r = r - step
                if abs(step) < 1e-14 * max(1.0, abs(r)):
                    break
            out.append(p / r)
        return out

    def functional_equation_holds(self):
        m, p, a = self.degree, self.p, self.coeffs
        return all(
            a[m - l] == self.epsilon * p ** (m - 2 * l) * a[l]
            for l in range(m // 2 + 1)
        )

    def __eq__(self, other):
        return (
            isinstance(other, WeilPolynomial)
            and self.coeffs == other.coeffs
            and self.p == other.p
        )

    def __repr__(self):
        return f"WeilPolynomial(p={self.p}, coeffs={self.coeffs})"


def analytic_rank(coeffs, p):
    """Largest r with (1 - pT)^r | L(T), by exact integer division.

    The candidate quotient q_j = a_j + p q_{j-1} always has integer
    coefficients; divisibility holds iff the top term closes up.
    """
    rank = 0
    cur = list(coeffs)
    while len(cur) > 1:
        n = len(cur) - 1
        q = [0] * n
        q[0] = cur[0]
        for j in range(1, n):
            q[j] = cur[j] + p * q[j - 1]
        if cur[n] + p * q[n - 1] != 0:
            break
        rank += 1
        cur = q
    return rank


def complete_by_functional_equation(partial, m, p, eps):
    """Fill coefficients above m/2 via a_{m-l} = eps p^{m-2l} a_l; any
    overlap with the supplied values must agree."""
    if len(partial) <= m // 2:
        raise ValueError("need coefficients at least up to degree m/2")
    full = [None] * (m + 1)
    for l, v in enumerate(partial[: m + 1]):
        full[l] = v
    for l in range(m // 2):
        want = eps * p ** (m - 2 * l) * full[l]
        if full[m - l] is not None and full[m - l] != want:
            raise NoConsistentSign(
                f"coefficient {m - l} disagrees with the functional equation"
            )
        full[m - l] = want
    return full


@dataclass
class ApproxCoefficient:
    """b_l known as num / p^shift, guaranteed modulo p^guarantee."""

    num: int
    shift: int
    guarantee: int


def recover_weil_polynomial(approx, m, p):
    """Integer L from normalized approximations b_l ~ a_l / p^l.

    approx[l] covers l = 0..K with K >= m/2 + 1.  Lifts each a_l to the
    unique integer within the Weil bound, determines the sign from the
    first usable pair, fills the rest, cross-checks every redundant
    coefficient, and verifies root moduli.
    """
    K = len(approx) - 1
    if K < m // 2 + 1:
        raise InsufficientPrecision("need normalized coefficients up to m/2 + 1")
    lifted = []
    for l, ap in enumerate(approx):
        if l > m:
            break
        bound = math.comb(m, l) * p**l
        # a_l = b_l * p^l = num * p^(l - shift), known modulo p^(l + guarantee)
        mod_exp = l + ap.guarantee
        if p**mod_exp <= 2 * bound:
            raise InsufficientPrecision(
                f"coefficient {l}: modulus p^{mod_exp} below Weil bound {bound}"
            )
        shift = ap.shift - l
        if shift > 0:
            modulus = p ** (mod_exp + shift)
            num = ap.num % modulus
            if num % p**shift != 0:
                raise InsufficientPrecision(
                    f"coefficient {l}: denominator p^{shift} does not cancel"
                )
            residue = (num // p**shift) % p**mod_exp
        else:
            residue = (ap.num * p ** (-shift)) % p**mod_exp
        modulus = p**mod_exp
        a_l = residue if 2 * residue <= modulus else residue - modulus
        if abs(a_l) > bound:
            raise WeilBoundViolation(
                f"coefficient {l}: |{a_l}| exceeds binom({m},{l})*p^{l} = {bound}"
            )
        lifted.append(a_l)
    if lifted[0] != 1:
        raise WeilBoundViolation(f"constant term {lifted[0]} != 1")
    # sign from the first pair (l, m-l) with both values lifted and a_l != 0
    eps = None
    for l in range(m // 2 - 1, -1, -1):
        if m - l >= len(lifted):
            continue
        lo, hi = lifted[l], lifted[m - l]
        if lo == 0:
            if hi != 0:
                raise NoConsistentSign("zero/nonzero coefficient pair")
            continue
        scale = p ** (m - 2 * l)
        if hi == scale * lo:
            eps = 1
        elif hi == -scale * lo:
            eps = -1
        else:
            raise NoConsistentSign(
                f"pair ({l},{m - l}): {hi} is not +-{scale}*{lo}"
            )
        break
    if eps is None:
        # all visible pairs vanish; both signs complete consistently
        raise NoConsistentSign("no nonzero coefficient pair determines the sign")
    full = complete_by_functional_equation(lifted, m, p, eps)
    wp = WeilPolynomial(full, p, eps)
    wp.verify_root_moduli()
    return wp
