"""Exact dense matrices over a :mod:`fields` field (raw values in nested lists)."""
import itertools

from . import upoly


class ExactMatrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def from_values(cls, field, rows):
        return cls(field, [[field.coerce(v) for v in r] for r in rows])

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def vstack(cls, mats):
        rows = []
        for m in mats:
            rows.extend(m.rows)
        return cls(mats[0].field, rows, mats[0].ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __add__(self, other):
        F = self.field
        return ExactMatrix(F, [[F.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        F = self.field
        return ExactMatrix(F, [[F.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c):
        F = self.field
        return ExactMatrix(F, [[F.mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        F = self.field
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = F.zero
                for a, b in zip(r, c):
                    if not F.is_zero(a) and not F.is_zero(b):
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(row)
        return ExactMatrix(F, out, other.ncols)

    def apply(self, vec):
        F = self.field
        out = []
        for r in self.rows:
            acc = F.zero
            for a, b in zip(r, vec):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def transpose(self):
        return ExactMatrix(self.field, [list(c) for c in zip(*self.rows)], self.nrows)

    def trace(self):
        F = self.field
        acc = F.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = F.add(acc, self.rows[i][i])
        return acc

    def is_zero(self):
        return all(self.field.is_zero(a) for r in self.rows for a in r)

    # -- elimination ---------------------------------------------------------
    def rref(self):
        """Reduced row echelon form and pivot columns."""
        F = self.field
        A = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, self.nrows) if not F.is_zero(A[i][c])), None)
            if piv is None:
                continue
            A[r], A[piv] = A[piv], A[r]
            inv = F.inv(A[r][c])
            A[r] = [F.mul(inv, a) for a in A[r]]
            for i in range(self.nrows):
                if i != r and not F.is_zero(A[i][c]):
                    f = A[i][c]
                    A[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[i], A[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return ExactMatrix(F, A, self.ncols), pivots

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of {v : M v = 0}, one vector per free column (free entry set to 1)."""
        F = self.field
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [F.zero] * self.ncols
            v[f] = F.one
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(R.rows[i][f])
            basis.append(v)
        return basis

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        F = self.field
        A = [list(r) for r in self.rows]
        n = self.nrows
        d = F.one
        for c in range(n):
            piv = next((i for i in range(c, n) if not F.is_zero(A[i][c])), None)
            if piv is None:
                return F.zero
            if piv != c:
                A[c], A[piv] = A[piv], A[c]
                d = F.neg(d)
            d = F.mul(d, A[c][c])
            inv = F.inv(A[c][c])
            for i in range(c + 1, n):
                if not F.is_zero(A[i][c]):
                    f = F.mul(A[i][c], inv)
                    A[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[i], A[c])]
        return d

    def inverse(self):
        n = self.nrows
        F = self.field
        aug = ExactMatrix(F, [r + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(self.rows)])
        R, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return ExactMatrix(F, [r[n:] for r in R.rows])

    def compound(self, m):
        """m-th compound matrix (matrix of Lambda^m) in the lexicographic basis of m-subsets."""
        F = self.field
        if m == 0:
            return ExactMatrix.identity(F, 1)
        rs = list(itertools.combinations(range(self.nrows), m))
        cs = list(itertools.combinations(range(self.ncols), m))
        out = []
        for I in rs:
            row = []
            for J in cs:
                sub = ExactMatrix(F, [[self.rows[i][j] for j in J] for i in I])
                row.append(sub.det())
            out.append(row)
        return ExactMatrix(F, out, len(cs))

    def __repr__(self):
        F = self.field
        return "ExactMatrix(%s)" % [[F.to_str(a) for a in r] for r in self.rows]


def multiplication_matrix(K, alpha):
    """Matrix of x -> alpha*x on K = B[t]/(m) in the basis 1, t, ..., t^(d-1)."""
    B = K.base
    d = K.degree
    cols = []
    basis = [tuple(B.one if i == j else B.zero for i in range(d)) for j in range(d)]
    for e in basis:
        cols.append(list(K.mul(alpha, e)))
    return ExactMatrix(B, [list(r) for r in zip(*cols)])


def minimal_polynomial(K, alpha):
    """Monic minimal polynomial over the base field of an element of a simple extension."""
    B = K.base
    d = K.degree
    powers = [K.one]
    for _ in range(d):
        powers.append(K.mul(powers[-1], alpha))
    for k in range(1, d + 1):
        M = ExactMatrix(B, [list(r) for r in zip(*powers[:k + 1])])
        ns = M.nullspace()
        if ns:
            v = ns[0]
            return upoly.monic(B, upoly.trim(B, v))
    raise ArithmeticError("no minimal polynomial found")  # unreachable


def characteristic_polynomial(K, alpha):
    """Norm form prod over conjugates (X - sigma(alpha)) = minpoly^(d/deg minpoly)."""
    B = getattr(K, "base", K)
    if not hasattr(K, "base"):
        return [B.neg(alpha), B.one]
    mp = minimal_polynomial(K, alpha)
    out = [B.one]
    for _ in range(K.degree // (len(mp) - 1)):
        out = upoly.mul(B, out, mp)
    return out
