"""Polynomial arithmetic over F_p with coefficients as plain int lists.

Coefficients ascending, values in [0, p); the zero polynomial is [].
These are the workhorse routines for family validation, the monomial
lattice, and the counting oracle.
"""

__all__ = [
    "trim", "add", "sub", "neg", "mul", "scalar_mul", "divmod_poly", "gcd",
    "derivative", "evaluate", "pow_mod", "is_squarefree", "is_irreducible",
    "first_irreducible", "degree", "monic",
]


def trim(f):
    n = len(f)
    while n > 0 and f[n - 1] == 0:
        n -= 1
    return f[:n]


def degree(f):
    return len(f) - 1


def add(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = (a + b) % p
    return trim(out)


def neg(f, p):
    return [(-a) % p for a in f]


def sub(f, g, p):
    return add(f, neg(g, p), p)


def scalar_mul(c, f, p):
    c %= p
    if c == 0:
        return []
    return [(c * a) % p for a in f]


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def divmod_poly(f, g, p):
    g = trim(g)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    f = list(trim(f))
    d = degree(g)
    inv_lc = pow(g[-1], -1, p)
    if len(f) <= d:
        return [], f
    q = [0] * (len(f) - d)
    for i in range(len(f) - 1, d - 1, -1):
        c = f[i]
        if c == 0:
            continue
        coef = (c * inv_lc) % p
        q[i - d] = coef
        for j, b in enumerate(g):
            f[i - d + j] = (f[i - d + j] - coef * b) % p
    return trim(q), trim(f[:d])


def monic(f, p):
    f = trim(f)
    if not f:
        return f
    return scalar_mul(pow(f[-1], -1, p), f, p)


def gcd(f, g, p):
    f, g = trim(f), trim(g)
    while g:
        _, r = divmod_poly(f, g, p)
        f, g = g, r
    return monic(f, p)


def derivative(f, p):
    return trim([(i * f[i]) % p for i in range(1, len(f))])


def evaluate(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def pow_mod(base, e, mod, p):
    """base^e modulo the polynomial mod, over F_p."""
    result = [1]
    base = divmod_poly(base, mod, p)[1]
    while e:
        if e & 1:
            result = divmod_poly(mul(result, base, p), mod, p)[1]
        base = divmod_poly(mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def is_squarefree(f, p):
    f = trim(f)
    if not f:
        return False
    return degree(gcd(f, derivative(f, p), p)) == 0


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, p):
    """Rabin's test: x^(p^n) = x mod f, and x^(p^(n/q)) - x coprime to f."""
    f = trim(f)
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    xq = pow_mod(x, p ** n, f, p)
    if trim(sub(xq, x, p)):
        return False
    for q in _prime_factors(n):
        xr = pow_mod(x, p ** (n // q), f, p)
        if degree(gcd(sub(xr, x, p), f, p)) != 0:
            return False
    return True


def first_irreducible(p, n):
    """Lexicographically first monic irreducible of degree n (deterministic)."""
    if n == 1:
        return [0, 1]
    for tail in range(p ** n):
        coeffs = []
        t = tail
        for _ in range(n):
            coeffs.append(t % p)
            t //= p
        f = coeffs + [1]
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible found (unreachable)")
