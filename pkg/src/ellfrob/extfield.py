"""Finite fields F_p and F_{p^k} for the counting oracle.

PrimeField wraps plain ints mod p.  ExtField represents F_{p^k} as
F_p[y]/(modulus) with elements as int tuples; the modulus is verified
irreducible at construction.  Only the oracle touches extension fields, so
the element type stays simple; the oracle's hot loops use the vectorised
tables in oracle.py instead.
"""

from . import fppoly as fp

__all__ = ["PrimeField", "ExtField", "ExtElement"]


class PrimeField:
    """F_p, p an odd prime > 3."""

    def __init__(self, p):
        if p <= 3 or not _is_prime(p):
            raise ValueError("p must be a prime greater than 3")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __repr__(self):
        return f"PrimeField({self.p})"


class ExtField:
    """F_{p^k} = F_p[y]/(modulus), modulus monic irreducible of degree k."""

    def __init__(self, p, k, modulus=None):
        if not _is_prime(p):
            raise ValueError("p must be prime")
        if k < 1:
            raise ValueError("degree must be at least 1")
        if modulus is None:
            modulus = fp.first_irreducible(p, k)
        modulus = fp.trim([c % p for c in modulus])
        if fp.degree(modulus) != k or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not fp.is_irreducible(modulus, p):
            raise ValueError("modulus is not irreducible")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k

    def __call__(self, coeffs):
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        _, r = fp.divmod_poly([c % self.p for c in coeffs], self.modulus, self.p)
        return ExtElement(self, tuple(r))

    def zero(self):
        return ExtElement(self, ())

    def one(self):
        return ExtElement(self, (1,))

    def gen(self):
        """The class of y."""
        return self([0, 1])

    def elements(self):
        """All p^k elements, in base-p counter order."""
        for idx in range(self.order):
            coeffs, t = [], idx
            for _ in range(self.k):
                coeffs.append(t % self.p)
                t //= self.p
            yield ExtElement(self, tuple(fp.trim(coeffs)))

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and (other.p, other.k, other.modulus) == (self.p, self.k, self.modulus)
        )

    def __repr__(self):
        return f"ExtField(p={self.p}, k={self.k})"


class ExtElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(fp.trim(list(coeffs)))

    def _wrap(self, coeffs):
        return ExtElement(self.field, tuple(coeffs))

    def __add__(self, other):
        return self._wrap(fp.add(list(self.coeffs), list(other.coeffs), self.field.p))

    def __sub__(self, other):
        return self._wrap(fp.sub(list(self.coeffs), list(other.coeffs), self.field.p))

    def __neg__(self):
        return self._wrap(fp.neg(list(self.coeffs), self.field.p))

    def __mul__(self, other):
        f = self.field
        prod = fp.mul(list(self.coeffs), list(other.coeffs), f.p)
        return self._wrap(fp.divmod_poly(prod, f.modulus, f.p)[1])

    def __pow__(self, n):
        f = self.field
        if n < 0:
            return self.inverse() ** (-n)
        return self._wrap(
            fp.divmod_poly(
                fp.pow_mod(list(self.coeffs), n, f.modulus, f.p), f.modulus, f.p
            )[1]
        )

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.order - 2)

    def frobenius(self):
        return self ** self.field.p

    def is_zero(self):
        return not self.coeffs

    def chi(self):
        """Quadratic character: 0 on zero, else +-1 via x^((q-1)/2)."""
        if not self.coeffs:
            return 0
        r = self ** ((self.field.order - 1) // 2)
        return 1 if r == self.field.one() else -1

    def __eq__(self, other):
        return isinstance(other, ExtElement) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExtElement({list(self.coeffs)})"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
