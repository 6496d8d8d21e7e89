"""Dense univariate polynomials and truncated power series.

Coefficients are duck-typed: anything with +, -, *, unary minus and truthiness
works (ints, fractions.Fraction, PadicScalar).  A Poly carries an explicit
`zero` element so empty/padded polynomials keep the right coefficient type.
Truthiness decides what counts as a (trailing) zero; for PadicScalar that
means "zero to its tracked precision".
"""

__all__ = ["Poly", "TruncSeries"]


def _inv(c):
    inverse = getattr(c, "inverse", None)
    if inverse is not None:
        return inverse()
    return 1 / c


class Poly:
    """Dense polynomial; coeffs ascending, no trailing zeros stored."""

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs, zero):
        n = len(coeffs)
        while n > 0 and not coeffs[n - 1]:
            n -= 1
        self.coeffs = list(coeffs[:n])
        self.zero = zero

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.zero

    def leading(self):
        if not self.coeffs:
            return self.zero
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        raise TypeError("Poly is not hashable")

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.zero)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)], self.zero)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.zero)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly([], self.zero)
            out = [self.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out, self.zero)
        return self.scale(other)

    def scale(self, c):
        return Poly([a * c for a in self.coeffs], self.zero)

    def shift(self, k):
        """Multiply by y^k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly([self.zero] * k + self.coeffs, self.zero)

    def derivative(self):
        if len(self.coeffs) <= 1:
            return Poly([], self.zero)
        return Poly(
            [self.coeffs[i] * i for i in range(1, len(self.coeffs))], self.zero
        )

    def compose_power(self, k):
        """Substitute y -> y^k."""
        if k == 1 or not self.coeffs:
            return self
        out = [self.zero] * (k * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return Poly(out, self.zero)

    def __call__(self, x):
        if not self.coeffs:
            return self.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def divmod_unit(self, other):
        """Euclidean division; the divisor's leading coefficient must be invertible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        inv_lc = _inv(other.leading())
        d = other.degree
        rem = list(self.coeffs)
        if len(rem) < d:
            return Poly([], self.zero), Poly(rem, self.zero)
        q = [self.zero] * (max(len(rem) - d, 0))
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c * inv_lc
            q[i - d] = f
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] = rem[i - d + j] - f * b
        return Poly(q, self.zero), Poly(rem[:d], self.zero)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"({c})*y^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


class TruncSeries:
    """Power series truncated at exclusive order D; all D coefficients stored."""

    __slots__ = ("coeffs", "order", "zero")

    def __init__(self, coeffs, order, zero):
        if len(coeffs) > order:
            coeffs = coeffs[:order]
        self.coeffs = list(coeffs) + [zero] * (order - len(coeffs))
        self.order = order
        self.zero = zero

    @classmethod
    def from_poly(cls, poly, order):
        return cls(poly.coeffs, order, poly.zero)

    def __getitem__(self, i):
        return self.coeffs[i]

    def truncate(self, order):
        if order >= self.order:
            return self
        return TruncSeries(self.coeffs[:order], order, self.zero)

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n)], n, self.zero
        )

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n)], n, self.zero
        )

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order, self.zero)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self.order, other.order)
            out = [self.zero] * n
            for i, a in enumerate(self.coeffs[:n]):
                if not a:
                    continue
                for j in range(n - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
            return TruncSeries(out, n, self.zero)
        return TruncSeries([a * other for a in self.coeffs], self.order, self.zero)

    def derivative(self):
        out = [self.coeffs[i] * i for i in range(1, self.order)]
        return TruncSeries(out, self.order - 1, self.zero)

    def compose_power(self, k):
        """Substitute y -> y^k, keeping the same truncation order."""
        if k == 1:
            return self
        out = [self.zero] * self.order
        for i, c in enumerate(self.coeffs):
            if k * i >= self.order:
                break
            out[k * i] = c
        return TruncSeries(out, self.order, self.zero)

    def inverse(self):
        """Series inverse; the constant term must be invertible."""
        c0 = _inv(self.coeffs[0])
        out = [c0]
        for n in range(1, self.order):
            acc = self.zero
            for i in range(1, n + 1):
                a = self.coeffs[i]
                if a:
                    acc = acc + a * out[n - i]
            out.append(-c0 * acc)
        return TruncSeries(out, self.order, self.zero)

    def to_poly(self):
        return Poly(self.coeffs, self.zero)

    def __repr__(self):
        return f"TruncSeries(order={self.order}, {self.to_poly()!r})"
