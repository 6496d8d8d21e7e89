"""Precision-tracked p-adic integers.

A scalar is a residue known modulo p^prec ("zealous" arithmetic with an
explicit absolute precision per value).  Every operation propagates the
precision it can actually prove:

  add/sub       min of the operand precisions
  mul           min(v(x) + prec(y), v(y) + prec(x), prec(x) + prec(y))
  unit inverse  same precision as the input
  div by p^v    exact digit shift, lowers absolute precision by v

Valuations are capped at the precision: a value that is 0 mod p^N is only
known to be divisible by p^N.
"""

from .errors import InexactDivision, NonUnitError

__all__ = ["PadicScalar", "Zp"]


class PadicScalar:
    """Element of Z_p known modulo p^prec."""

    __slots__ = ("p", "prec", "value")

    def __init__(self, p, value, prec):
        if prec < 0:
            raise ValueError("precision must be nonnegative")
        self.p = p
        self.prec = prec
        self.value = value % (p ** prec) if prec > 0 else 0

    # -- helpers ------------------------------------------------------------

    def valuation(self):
        """v_p(value), capped at prec (a value 0 mod p^prec has valuation prec)."""
        if self.value == 0:
            return self.prec
        v = 0
        x = self.value
        p = self.p
        while x % p == 0:
            x //= p
            v += 1
        return min(v, self.prec)

    def is_unit(self):
        return self.prec > 0 and self.value % self.p != 0

    def lift(self):
        """Canonical integer lift in [0, p^prec)."""
        return self.value

    def lift_centered(self):
        """Integer lift in (-p^prec/2, p^prec/2]."""
        m = self.p ** self.prec
        v = self.value
        return v - m if 2 * v > m else v

    def at_prec(self, prec):
        """Truncate (never extend) to absolute precision prec."""
        if prec > self.prec:
            raise ValueError("cannot increase known precision")
        return PadicScalar(self.p, self.value, prec)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        if isinstance(other, int):
            return PadicScalar(self.p, self.value + other, self.prec)
        self._check(other)
        n = min(self.prec, other.prec)
        return PadicScalar(self.p, self.value + other.value, n)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return PadicScalar(self.p, self.value - other, self.prec)
        self._check(other)
        n = min(self.prec, other.prec)
        return PadicScalar(self.p, self.value - other.value, n)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PadicScalar(self.p, -self.value, self.prec)

    def __mul__(self, other):
        if isinstance(other, int):
            # exact integer factor: precision grows by its valuation
            if other == 0:
                return PadicScalar(self.p, 0, self.prec)
            v, n = 0, other
            while n % self.p == 0:
                n //= self.p
                v += 1
            return PadicScalar(self.p, self.value * other, self.prec + v)
        self._check(other)
        vx, vy = self.valuation(), other.valuation()
        n = min(vx + other.prec, vy + self.prec, self.prec + other.prec)
        return PadicScalar(self.p, self.value * other.value, n)

    __rmul__ = __mul__

    def inverse(self):
        if not self.is_unit():
            raise NonUnitError(f"{self!r} is not a unit")
        m = self.p ** self.prec
        return PadicScalar(self.p, pow(self.value, -1, m), self.prec)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def divide_exact_p_power(self, v):
        """Divide by p^v; requires p^v | value, lowers precision by v."""
        if v == 0:
            return self
        if v > self.prec:
            raise InexactDivision("shift exceeds known precision")
        q = self.p ** v
        if self.value % q != 0:
            raise InexactDivision(f"p^{v} does not divide value")
        return PadicScalar(self.p, self.value // q, self.prec - v)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r = PadicScalar(self.p, 1, self.prec)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- comparison / display ------------------------------------------------

    def is_zero(self):
        """True when the value is 0 to its own tracked precision."""
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        """Equality of the residues modulo the smaller of the two precisions."""
        if not isinstance(other, PadicScalar):
            return NotImplemented
        if self.p != other.p:
            return False
        n = min(self.prec, other.prec)
        m = self.p ** n
        return self.value % m == other.value % m

    def __hash__(self):
        raise TypeError("PadicScalar is approximate; not hashable")

    def __repr__(self):
        return f"{self.value} + O({self.p}^{self.prec})"


class Zp:
    """Factory for PadicScalar values at a fixed prime and default precision."""

    def __init__(self, p, prec):
        if p < 3:
            raise ValueError("p must be an odd prime")
        self.p = p
        self.prec = prec

    def __call__(self, n, prec=None):
        return PadicScalar(self.p, n, self.prec if prec is None else prec)

    def zero(self, prec=None):
        return self(0, prec)

    def one(self, prec=None):
        return self(1, prec)

    def from_rational(self, num, den, prec=None):
        """num/den with den a p-adic unit."""
        n = self.prec if prec is None else prec
        m = self.p ** n
        if den % self.p == 0:
            raise NonUnitError("denominator is not a p-adic unit")
        return PadicScalar(self.p, num * pow(den, -1, m), n)
