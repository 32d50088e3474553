"""Dense exact linear algebra over a :class:`~formwitt.fields.Field`.

Conventions: vectors are tuples of raw field values; a subspace is the row
space of its basis; a :class:`Matrix` acts on column vectors, so the image of
a subspace under ``g`` is spanned by ``g @ u`` for its basis rows ``u``.
"""

from __future__ import annotations

import itertools

from .errors import InfiniteFieldError, PreconditionError

__all__ = [
    "rref", "nullspace", "solve", "rank", "transpose_rows", "Matrix", "Subspace",
    "enumerate_subspaces", "complement", "simultaneous_complement",
    "complement_containing", "quotient_complement", "coordinates",
]


def rref(F, rows, ncols=None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    mul, sub, inv = F.mul, F.sub, F.inv
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if m[i][c]:
                break
        else:
            continue
        if i != r:
            m[r], m[i] = m[i], m[r]
        row = m[r]
        lead = row[c]
        if lead != F.one:
            s = inv(lead)
            row = m[r] = [mul(s, x) for x in row]
        for i in range(nrows):
            if i != r:
                t = m[i][c]
                if t:
                    other = m[i]
                    m[i] = [sub(x, mul(t, y)) if y else x for x, y in zip(other, row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(x) for x in m[:r]), tuple(pivots)


def rank(F, rows, ncols=None):
    return len(rref(F, rows, ncols)[1])


def transpose_rows(rows, ncols):
    return [tuple(r[j] for r in rows) for j in range(ncols)]


def nullspace(F, rows, ncols=None):
    """Basis of {x : M x = 0} with one free variable set to 1 per vector."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, piv = rref(F, rows, ncols)
    free = [j for j in range(ncols) if j not in piv]
    out = []
    for f in free:
        x = [F.zero] * ncols
        x[f] = F.one
        for row, p in zip(red, piv):
            x[p] = F.neg(row[f])
        out.append(tuple(x))
    return out


def solve(F, rows, rhs, ncols=None):
    """One solution of M x = rhs with free variables zero, or None."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    red, piv = rref(F, aug, ncols + 1)
    if piv and piv[-1] == ncols:
        return None
    x = [F.zero] * ncols
    for row, p in zip(red, piv):
        x[p] = row[ncols]
    return tuple(x)


def coordinates(F, basis, v):
    """Coefficients c with sum c_i basis[i] == v, or None if v is outside the span."""
    n = len(v)
    return solve(F, transpose_rows(basis, n), v, len(basis))


def combine(F, coeffs, vectors, n):
    out = [F.zero] * n
    for c, vec in zip(coeffs, vectors):
        if c:
            out = [F.add(o, F.mul(c, x)) for o, x in zip(out, vec)]
    return tuple(out)


class Matrix:
    """An immutable matrix over a field (row-major raw values)."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else (ncols or 0)
        if any(len(r) != self.ncols for r in rows):
            raise PreconditionError("ragged matrix")

    @classmethod
    def identity(cls, F, n):
        return cls(F, [[F.one if i == j else F.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, F, m, n=None):
        n = m if n is None else n
        return cls(F, [[F.zero] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, F, cols, nrows):
        cols = list(cols)
        return cls(F, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def coerce(cls, F, data):
        return cls(F, [[F.coerce(x) for x in r] for r in data])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def T(self):
        return Matrix(self.field, transpose_rows(self.rows, self.ncols), self.nrows)

    def columns(self):
        return transpose_rows(self.rows, self.ncols)

    def conj(self):
        c = self.field.conj
        return Matrix(self.field, [[c(x) for x in r] for r in self.rows], self.ncols)

    def __matmul__(self, other):
        F = self.field
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise PreconditionError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            return Matrix(F, [[_dot(F, r, c) for c in cols] for r in self.rows], other.ncols)
        return self.apply(other)

    def apply(self, v):
        if len(v) != self.ncols:
            raise PreconditionError("vector length mismatch")
        return tuple(_dot(self.field, r, v) for r in self.rows)

    def __add__(self, other):
        F = self.field
        return Matrix(F, [[F.add(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        F = self.field
        return Matrix(F, [[F.sub(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c):
        F = self.field
        return Matrix(F, [[F.mul(c, x) for x in r] for r in self.rows], self.ncols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def rank(self):
        return rank(self.field, self.rows, self.ncols)

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self):
        F, n = self.field, self.nrows
        if self.ncols != n:
            raise PreconditionError("only square matrices have inverses")
        aug = [r + tuple(F.one if i == j else F.zero for j in range(n)) for i, r in enumerate(self.rows)]
        red, piv = rref(F, aug, 2 * n)
        if len(piv) < n or piv[n - 1] != n - 1:
            raise ZeroDivisionError("singular matrix")
        return Matrix(F, [r[n:] for r in red], n)

    def to_json(self):
        return {"rows": [[self.field.to_json_value(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, F, d):
        rows = d["rows"] if isinstance(d, dict) else d
        return cls.coerce(F, rows)

    def __repr__(self):
        fmt = self.field.format
        return "Matrix(" + "; ".join(" ".join(fmt(x) for x in r) for r in self.rows) + ")"


def _dot(F, a, b):
    add, mul = F.add, F.mul
    s = F.zero
    for x, y in zip(a, b):
        if x and y:
            s = add(s, mul(x, y))
    return s


class Subspace:
    """Row space of a set of vectors, stored in RREF."""

    __slots__ = ("field", "n", "basis", "pivots")

    def __init__(self, field, n, vectors=()):
        self.field = field
        self.n = n
        vectors = [tuple(v) for v in vectors]
        if any(len(v) != n for v in vectors):
            raise PreconditionError(f"vectors must have length {n}")
        self.basis, self.pivots = rref(field, vectors, n)

    @classmethod
    def zero(cls, F, n):
        return cls(F, n)

    @classmethod
    def full(cls, F, n):
        return cls(F, n, Matrix.identity(F, n).rows)

    @classmethod
    def _from_rref(cls, F, n, basis, pivots):
        s = object.__new__(cls)
        s.field, s.n, s.basis, s.pivots = F, n, basis, pivots
        return s

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, v):
        """v minus its component along the pivot coordinates; zero iff v is inside."""
        F = self.field
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            t = v[p]
            if t:
                v = [F.sub(x, F.mul(t, y)) if y else x for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v):
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def coords(self, v):
        """Coefficients of v on the RREF basis (v must lie inside)."""
        return tuple(v[p] for p in self.pivots)

    def _check(self, other):
        if self.n != other.n or self.field != other.field:
            raise PreconditionError("subspaces live in different ambient spaces")

    def __le__(self, other):
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __lt__(self, other):
        return self <= other and self.dim < other.dim

    def __add__(self, other):
        self._check(other)
        return Subspace(self.field, self.n, self.basis + other.basis)

    def __and__(self, other):
        """Intersection by the Zassenhaus stacked-kernel method."""
        self._check(other)
        F, n = self.field, self.n
        if not self.basis or not other.basis:
            return Subspace.zero(F, n)
        zero = (F.zero,) * n
        rows = [b + b for b in self.basis] + [b + zero for b in other.basis]
        red, piv = rref(F, rows, 2 * n)
        return Subspace(F, n, [r[n:] for r, p in zip(red, piv) if p >= n])

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.n == other.n
                and self.field == other.field and self.basis == other.basis)

    def __hash__(self):
        return hash((self.n, self.basis))

    @property
    def sort_key(self):
        return (self.dim, self.basis)

    def elements(self):
        F = self.field
        if not F.is_finite:
            raise InfiniteFieldError("cannot enumerate a subspace over Q")
        for coeffs in itertools.product(F.elements(), repeat=self.dim):
            yield combine(F, coeffs, self.basis, self.n)

    def image(self, g):
        return Subspace(self.field, self.n, [g.apply(b) for b in self.basis])

    def conj(self):
        c = self.field.conj
        return Subspace(self.field, self.n, [[c(x) for x in b] for b in self.basis])

    def to_json(self):
        return [[self.field.to_json_value(x) for x in b] for b in self.basis]

    @classmethod
    def from_json(cls, F, n, rows):
        return cls(F, n, [[F.coerce(x) for x in r] for r in rows])

    def __repr__(self):
        fmt = self.field.format
        return "<" + ", ".join("(" + ",".join(fmt(x) for x in b) + ")" for b in self.basis) + ">"


def enumerate_subspaces(F, n, dim=None):
    """Every subspace of F^n (of one dimension if given), in (dim, RREF) order."""
    if not F.is_finite:
        raise InfiniteFieldError("subspace enumeration needs a finite field")
    dims = range(n + 1) if dim is None else [dim]
    out = []
    for d in dims:
        for piv in itertools.combinations(range(n), d):
            free = [(i, j) for i, p in enumerate(piv) for j in range(p + 1, n) if j not in piv]
            for vals in itertools.product(F.elements(), repeat=len(free)):
                rows = [[F.zero] * n for _ in range(d)]
                for i, p in enumerate(piv):
                    rows[i][p] = F.one
                for (i, j), x in zip(free, vals):
                    rows[i][j] = x
                out.append(Subspace._from_rref(F, n, tuple(tuple(r) for r in rows), piv))
    out.sort(key=lambda s: s.sort_key)
    return out


def complement(A, V=None):
    """Deterministic complement of A inside V: V-basis rows at non-pivot coordinates."""
    F, n = A.field, A.n
    if V is None:
        V = Subspace.full(F, n)
    if not A <= V:
        raise PreconditionError("complement: A is not inside V")
    coords = [V.coords(a) for a in A.basis]
    _, piv = rref(F, coords, V.dim)
    return Subspace(F, n, [V.basis[j] for j in range(V.dim) if j not in piv])


def simultaneous_complement(A, B, V=None):
    """A subspace L of V with A + L = V = B + L and A, B meeting L trivially.

    Mod out A & B, pair the i-th kept basis vector of A with the i-th of B and
    take the graph u + f(u); then adjoin a complement of A + B in V.
    """
    F, n = A.field, A.n
    if V is None:
        V = Subspace.full(F, n)
    if A.dim != B.dim:
        raise PreconditionError("simultaneous complement needs dim A == dim B")
    if not (A <= V and B <= V):
        raise PreconditionError("A and B must lie inside V")
    C = A & B
    a_rest = complement(C, A).basis
    b_rest = complement(C, B).basis
    graph = [tuple(F.add(x, y) for x, y in zip(u, w)) for u, w in zip(a_rest, b_rest)]
    S = A + B
    L = Subspace(F, n, list(graph) + list(complement(S, V).basis))
    return L


def quotient_complement(A, B, V, N):
    """Common complement of the images of A, B in V/N, lifted to contain N.

    Needs N inside V and meeting A and B trivially.
    """
    F, n = A.field, A.n
    Cb = complement(N, V).basis
    frame = list(N.basis) + list(Cb)
    k = len(N.basis)

    def project(S):
        out = []
        for b in S.basis:
            c = coordinates(F, frame, b)
            out.append(c[k:])
        return Subspace(F, len(Cb), out)

    m = len(Cb)
    Lbar = simultaneous_complement(project(A), project(B), Subspace.full(F, m))
    lifted = [combine(F, row, Cb, n) for row in Lbar.basis]
    return Subspace(F, n, lifted + list(N.basis))


def complement_containing(A, B, V, must_contain):
    """Common complement of A and B inside V built around ``must_contain``.

    Requires ``must_contain & A == must_contain & B``.  A complement N of that
    intersection inside ``must_contain`` is quotiented out, the two-subspace
    complement is taken in V/N and lifted back.  The result L satisfies
    A + L = V = B + L with trivial intersections and contains N; when
    ``must_contain`` meets A trivially this means it contains all of it.
    """
    F, n = A.field, A.n
    K = must_contain
    if A.dim != B.dim:
        raise PreconditionError("complement_containing needs dim A == dim B")
    if not (A <= V and B <= V and K <= V):
        raise PreconditionError("A, B and must_contain must lie inside V")
    C0 = K & A
    if C0 != K & B:
        raise PreconditionError("must_contain meets A and B differently")
    N = complement(C0, K)
    L = quotient_complement(A, B, V, N)
    zero = Subspace.zero(F, n)
    if not ((A & L) == zero and (B & L) == zero and A + L == V and B + L == V and N <= L):
        raise PreconditionError("complement_containing: no valid complement")  # unreachable
    return L
