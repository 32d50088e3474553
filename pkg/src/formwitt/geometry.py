"""Formed spaces: kernel, radical, orthogonality, isotropy and buildings."""

from __future__ import annotations

from fractions import Fraction

from .errors import CertificationError, InfiniteFieldError, PreconditionError
from .fields import Field
from .forms import FormClass, FormParams, from_classical, pullback
from .linalg import (Matrix, Subspace, enumerate_subspaces, nullspace,
                     rref, solve, transpose_rows)

__all__ = [
    "FormedSpace", "PartialIsometry", "kernel", "radical",
    "orthogonal_complement", "is_isotropic", "is_isometry", "building",
    "relative_building", "coxeter_space", "vectors_matrix",
]


def vectors_matrix(F, vectors, n):
    """The n x k matrix whose columns are the given vectors."""
    return Matrix.from_columns(F, vectors, n)


class FormedSpace:
    """F^n with a form class; kernel and radical are computed once."""

    def __init__(self, form: FormClass):
        self.form = form
        self.n = form.n
        self.field = form.field
        self._kernel = None
        self._radical = None

    @property
    def params(self) -> FormParams:
        return self.form.params

    def omega(self, v, w):
        return self.form.omega(v, w)

    def q(self, v, w):
        return self.form.q(v, w)

    def Q(self, v):
        return self.params.lam.reduce(self.form.q(v, v))

    def full(self):
        return Subspace.full(self.field, self.n)

    def zero(self):
        return Subspace.zero(self.field, self.n)

    def subspace(self, vectors):
        F = self.field
        return Subspace(F, self.n, [[F.raw(x) for x in v] for v in vectors])

    @property
    def kernel(self):
        if self._kernel is None:
            F = self.field
            self._kernel = Subspace(F, self.n, nullspace(F, self.form.omega_rows, self.n))
        return self._kernel

    @property
    def radical(self):
        if self._radical is None:
            self._radical = _radical(self)
        return self._radical

    def perp(self, U):
        return orthogonal_complement(self, U)

    def vector_perp(self, v):
        return orthogonal_complement(self, Subspace(self.field, self.n, [v]))

    def __eq__(self, other):
        return isinstance(other, FormedSpace) and self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def __repr__(self):
        return f"FormedSpace(n={self.n}, {self.form!r})"

    def to_json(self, subspaces=None):
        d = self.form.to_json()
        if subspaces:
            d["subspaces"] = {k: S.to_json() for k, S in subspaces.items()}
        return d

    @classmethod
    def from_json(cls, d):
        return cls(FormClass.from_json(d))

    def named_subspaces(self, d):
        return {k: Subspace.from_json(self.field, self.n, rows)
                for k, rows in (d.get("subspaces") or {}).items()}


def _radical(E):
    F, K = E.field, E.kernel
    core = E.params.core
    if not F.is_finite or not K.dim:
        # char != 2 here (Q only), where Q vanishes on the kernel
        return K
    # v -> q(v, v) mod core is additive on K; take its kernel over the prime field
    P = F.prime_field
    gens = [tuple(F.mul(x, c) for c in k) for k in K.basis for x in F.basis()]
    cols = [tuple(F.coords(core.reduce(E.form.q(g, g)))) for g in gens]
    # rows: coordinate index; columns: generators
    rows = transpose_rows(cols, F.k)
    null = nullspace(P, rows, len(gens))
    vecs = []
    for coeffs in null:
        v = [F.zero] * E.n
        for c, g in zip(coeffs, gens):
            if c:
                cf = F.from_coords([c] + [0] * (F.k - 1))
                v = [F.add(a, F.mul(cf, b)) for a, b in zip(v, g)]
        vecs.append(v)
    return Subspace(F, E.n, vecs)


def kernel(E: FormedSpace) -> Subspace:
    return E.kernel


def radical(E: FormedSpace) -> Subspace:
    return E.radical


def orthogonal_complement(E: FormedSpace, U: Subspace) -> Subspace:
    """All v with omega(v, u) = 0 for u in U."""
    F = E.field
    if not U.basis:
        return E.full()
    om = E.form.omega_rows
    # omega(v, u) = sum_j sigma(v_j) (Omega u)_j
    rows = [tuple(_dot(F, r, u) for r in om) for u in U.basis]
    null = nullspace(F, rows, E.n)
    return Subspace(F, E.n, [[F.conj(x) for x in v] for v in null])


def _dot(F, a, b):
    s = F.zero
    for x, y in zip(a, b):
        if x and y:
            s = F.add(s, F.mul(x, y))
    return s


def is_isotropic(E: FormedSpace, U: Subspace) -> bool:
    """True iff q restricted to U is the zero class.

    Checks omega on basis pairs and q(u, u) in core(Lambda) on basis vectors,
    so that Q also vanishes on every multiple; the cross-term identity covers sums.
    """
    B = U.basis
    core = E.params.core
    for i, u in enumerate(B):
        if core.reduce(E.form.q(u, u)):
            return False
        for w in B[i + 1:]:
            if E.omega(u, w):
                return False
    return True


def is_isometry(f: Matrix, E: FormedSpace, E2: FormedSpace | None = None) -> bool:
    """True iff f: E -> E2 pulls the form of E2 back to that of E."""
    E2 = E if E2 is None else E2
    if f.shape != (E2.n, E.n):
        return False
    return pullback(f, E2.form) == E.form


class PartialIsometry:
    """An injective map from span(domain) to span(images), certified isometric."""

    def __init__(self, space: FormedSpace, domain, images, certify=True):
        F = space.field
        self.space = space
        self.domain_basis = tuple(tuple(F.raw(x) for x in v) for v in domain)
        self.images = tuple(tuple(F.raw(x) for x in v) for v in images)
        if len(self.domain_basis) != len(self.images):
            raise PreconditionError("domain and image lists differ in length")
        self.domain = Subspace(F, space.n, self.domain_basis)
        self.codomain = Subspace(F, space.n, self.images)
        if certify:
            self.certify()

    @property
    def dim(self):
        return len(self.domain_basis)

    def certify(self):
        if self.domain.dim != self.dim:
            raise PreconditionError("domain vectors are linearly dependent")
        if self.codomain.dim != self.dim:
            raise PreconditionError("the map is not injective")
        if not self.preserves_form():
            raise PreconditionError("the map does not preserve the form")

    def preserves_form(self):
        E, F, n = self.space, self.space.field, self.space.n
        if not self.dim:
            return True
        D = vectors_matrix(F, self.domain_basis, n)
        I = vectors_matrix(F, self.images, n)
        return pullback(D, E.form) == pullback(I, E.form)

    def __call__(self, v):
        """Image of a vector of the domain."""
        F = self.space.field
        c = solve(F, transpose_rows(self.domain_basis, self.space.n), list(v), self.dim)
        if c is None:
            raise PreconditionError("vector outside the domain")
        out = [F.zero] * self.space.n
        for ci, w in zip(c, self.images):
            if ci:
                out = [F.add(o, F.mul(ci, x)) for o, x in zip(out, w)]
        return tuple(out)

    def restrict(self, vectors):
        return PartialIsometry(self.space, vectors, [self(v) for v in vectors], certify=False)

    def __repr__(self):
        fmt = self.space.field.format
        pairs = ", ".join("(" + ",".join(map(fmt, u)) + ")->(" + ",".join(map(fmt, w)) + ")"
                          for u, w in zip(self.domain_basis, self.images))
        return f"PartialIsometry[{pairs}]"


def building(E: FormedSpace):
    """Isotropic subspaces strictly containing the radical, sorted by (dim, RREF)."""
    if not E.field.is_finite:
        raise InfiniteFieldError("buildings are enumerated over finite fields only")
    R = E.radical
    return [W for W in enumerate_subspaces(E.field, E.n)
            if R < W and W != E.full() and is_isotropic(E, W)]


def relative_building(E: FormedSpace, U: Subspace):
    """Members W of the building with W + U^perp = E."""
    if not (E.radical <= U and is_isotropic(E, U)):
        raise PreconditionError("U must be isotropic and contain the radical")
    Up = E.perp(U)
    full = E.full()
    return [W for W in building(E) if W + Up == full]


def group_by_dim(subspaces):
    out = {}
    for S in subspaces:
        out.setdefault(S.dim, []).append(S)
    return out


_COXETER_ENTRY = {2: Fraction(0), 3: Fraction(-1), "inf": Fraction(-2)}


def _coxeter_label(label):
    if label in (2, 3):
        return label
    if isinstance(label, str) and label.lower() in ("inf", "infinity", "∞"):
        return "inf"
    if label is None or label == 0:
        return "inf"
    raise PreconditionError(f"Coxeter label {label!r} is not rational; use 2, 3 or inf")


def coxeter_matrix(vertices, edges):
    """Rational matrix 2 on the diagonal and -2cos(pi/m) off it (labels 2, 3, inf)."""
    C = [[Fraction(2) if i == j else Fraction(0) for j in range(vertices)] for i in range(vertices)]
    for e in edges:
        i, j = int(e[0]), int(e[1])
        lab = _coxeter_label(e[2] if len(e) > 2 else 3)
        if i == j or not (0 <= i < vertices and 0 <= j < vertices):
            raise PreconditionError(f"bad Coxeter edge {e!r}")
        C[i][j] = C[j][i] = _COXETER_ENTRY[lab]
    return C


def coxeter_space(vertices, edges):
    """The formed space over Q with parameters (id, 1, 0) whose omega is the Coxeter matrix."""
    Q = Field.rationals()
    params = FormParams.make(Q, 1, "zero")
    C = coxeter_matrix(vertices, edges)
    q = from_classical("Quadratic", {"Q": [C[i][i] / 2 for i in range(vertices)], "B": C}, params)
    E = FormedSpace(q)
    if E.form.omega_rows != tuple(tuple(r) for r in C):
        raise CertificationError("Coxeter lift does not reproduce the matrix")
    return E


def subspace_from_rows(E, rows):
    F = E.field
    red, _ = rref(F, [[F.coerce(x) for x in r] for r in rows], E.n)
    return Subspace(F, E.n, red)
