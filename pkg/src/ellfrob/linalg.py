"""Dense matrices over duck-typed coefficient rings.

charpoly uses the Berkowitz algorithm (division free), so over PadicScalar
each coefficient's reported precision is a provable lower bound.  The p-adic
solver pivots on minimal valuation and verifies leftover rows of
overdetermined systems against the tracked precision.
"""

from .errors import SingularBasisImages

__all__ = ["Matrix", "padic_solve_overdetermined"]


class Matrix:
    """Row-major dense matrix; `zero`/`one` are ring constants for padding."""

    __slots__ = ("rows", "cols", "entries", "zero", "one")

    def __init__(self, entries, zero, one):
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged rows")
        self.zero = zero
        self.one = one

    @classmethod
    def identity(cls, n, zero, one):
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)], zero, one
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            self.zero,
            self.one,
        )

    def __sub__(self, other):
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            self.zero,
            self.one,
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries], self.zero, self.one)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("dimension mismatch")
            cols = list(zip(*other.entries))
            out = []
            for r in self.entries:
                row = []
                for c in cols:
                    acc = self.zero
                    for a, b in zip(r, c):
                        acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return Matrix(out, self.zero, self.one)
        return self.scale(other)

    def scale(self, c):
        return Matrix([[a * c for a in r] for r in self.entries], self.zero, self.one)

    def matvec(self, v):
        out = []
        for r in self.entries:
            acc = self.zero
            for a, b in zip(r, v):
                acc = acc + a * b
            out.append(acc)
        return out

    def transpose(self):
        return Matrix(list(map(list, zip(*self.entries))), self.zero, self.one)

    def trace(self):
        acc = self.zero
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def map(self, f):
        return Matrix([[f(a) for a in r] for r in self.entries], self.zero, self.one)

    def charpoly(self):
        """Coefficients of det(T*I - M), ascending, via Berkowitz (no divisions)."""
        if self.rows != self.cols:
            raise ValueError("charpoly of a non-square matrix")
        n = self.rows
        A = self.entries
        zero, one = self.zero, self.one
        if n == 0:
            return [one]
        poly = [one, -A[0][0]]  # descending coefficients
        for i in range(1, n):
            a = A[i][i]
            R = [A[i][j] for j in range(i)]
            C = [A[j][i] for j in range(i)]
            items = [one, -a]
            vec = C
            for _ in range(i):
                acc = zero
                for r, v in zip(R, vec):
                    acc = acc + r * v
                items.append(-acc)
                vec = [
                    _dot(A, row, vec, i, zero) for row in range(i)
                ]
            new = []
            for r in range(i + 2):
                acc = zero
                for c in range(min(r, len(poly) - 1) + 1):
                    acc = acc + items[r - c] * poly[c]
                new.append(acc)
            poly = new
        return list(reversed(poly))

    def det(self):
        cp = self.charpoly()
        d = cp[0]
        return -d if self.rows % 2 else d

    def __repr__(self):
        return f"Matrix({self.entries!r})"


def _dot(A, row, vec, n, zero):
    acc = zero
    Ar = A[row]
    for j in range(n):
        acc = acc + Ar[j] * vec[j]
    return acc


def padic_solve_overdetermined(columns, targets, zero):
    """Solve sum_j x_j * columns[j] = t for each target vector t.

    All vectors live in the same ambient space (length r >= number of
    columns).  Elimination pivots on the entry of minimal p-adic valuation,
    so precision loss is the least the data allows.  Returns
    (solutions, pivot_valuations, residual_ok) where residual_ok is the
    minimum tracked precision at which every non-pivot row vanished; raises
    SingularBasisImages when the columns are dependent to working precision.
    """
    ncols = len(columns)
    nrows = len(columns[0])
    ntargets = len(targets)
    # augmented working copy: rows of [columns | targets]
    work = [
        [columns[j][i] for j in range(ncols)] + [t[i] for t in targets]
        for i in range(nrows)
    ]
    pivot_rows = []
    used = set()
    pivot_vals = []
    for col in range(ncols):
        best, best_v = None, None
        for i in range(nrows):
            if i in used:
                continue
            e = work[i][col]
            if e.is_zero():
                continue
            v = e.valuation()
            if best is None or v < best_v:
                best, best_v = i, v
                if v == 0:
                    break
        if best is None:
            raise SingularBasisImages(
                f"column {col} has no usable pivot (dependent basis images)"
            )
        pivot_rows.append(best)
        used.add(best)
        pivot_vals.append(best_v)
        inv = work[best][col].divide_exact_p_power(best_v).inverse()
        for i in range(nrows):
            if i == best:
                continue
            e = work[i][col]
            if e.is_zero():
                continue
            # exact: the pivot has minimal valuation in this column
            f = e.divide_exact_p_power(best_v) * inv
            for j in range(col, ncols + ntargets):
                work[i][j] = work[i][j] - f * work[best][j]
    # back substitution on pivot rows (may raise InexactDivision; caller
    # rescales the targets by a power of p and retries)
    solutions = []
    for t in range(ntargets):
        x = [zero] * ncols
        for col in reversed(range(ncols)):
            r = pivot_rows[col]
            acc = work[r][ncols + t]
            for j in range(col + 1, ncols):
                acc = acc - work[r][j] * x[j]
            piv = work[r][col].divide_exact_p_power(pivot_vals[col])
            x[col] = acc.divide_exact_p_power(pivot_vals[col]) * piv.inverse()
        solutions.append(x)
    # leftover rows must have vanished to their tracked precision
    residual_ok = None
    for i in range(nrows):
        if i in used:
            continue
        for j in range(ncols + ntargets):
            e = work[i][j]
            if not e.is_zero():
                raise SingularBasisImages(
                    f"residual row {i} nonzero after elimination: {e!r}"
                )
            residual_ok = e.prec if residual_ok is None else min(residual_ok, e.prec)
    return solutions, pivot_vals, residual_ok
