"""Constructive Witt extension, its relative version and isotropic transport.

Every extension is built by following the inductive proof (base case inside
the kernel, reduction along a hyperplane H of U, then Cases 1, 2.1, 2.2.1 and
2.2.2) and the result is re-certified before it is returned.
"""

from __future__ import annotations

from .errors import CertificationError, HypothesisError, PreconditionError
from .geometry import FormedSpace, PartialIsometry, is_isometry, is_isotropic
from .linalg import (Matrix, Subspace, complement, complement_containing,
                     quotient_complement, simultaneous_complement, solve,
                     transpose_rows)

__all__ = [
    "Isometry", "ExtensionProblem", "extend_by_identity", "witt_extend",
    "relative_witt_extend", "isotropic_transport",
]


class Isometry:
    """An invertible matrix preserving the form of ``space``; certified on construction."""

    __slots__ = ("space", "matrix", "case_trace")

    def __init__(self, space: FormedSpace, matrix: Matrix, case_trace=(), certify=True):
        self.space = space
        self.matrix = matrix
        self.case_trace = tuple(case_trace)
        if certify:
            if matrix.shape != (space.n, space.n) or not matrix.is_invertible():
                raise CertificationError("matrix is not invertible")
            if not is_isometry(matrix, space):
                raise CertificationError("matrix does not preserve the form")

    @classmethod
    def identity(cls, space):
        return cls(space, Matrix.identity(space.field, space.n), certify=False)

    def __call__(self, v):
        return self.matrix.apply(v)

    def __matmul__(self, other):
        return Isometry(self.space, self.matrix @ other.matrix)

    def inverse(self):
        return Isometry(self.space, self.matrix.inverse())

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Isometry({self.matrix!r})"

    def to_json(self):
        return {"matrix": self.matrix.to_json()["rows"], "certified": True,
                "case_trace": list(self.case_trace)}


class ExtensionProblem:
    """A partial isometry f: U -> W of a formed space, optionally with a fixed subspace A."""

    def __init__(self, space: FormedSpace, domain, images, fix: Subspace | None = None,
                 codomain: Subspace | None = None):
        self.space = space
        try:
            self.f = PartialIsometry(space, domain, images)
        except PreconditionError as exc:
            raise HypothesisError("isometry", f"f is not a bijective isometry: {exc}") from None
        if codomain is not None and codomain != self.f.codomain:
            raise HypothesisError("codomain", "W is not the span of the given images")
        self.fix = fix

    @property
    def U(self):
        return self.f.domain

    @property
    def W(self):
        return self.f.codomain

    def check_kernel(self, condition="kernel"):
        K = self.space.kernel
        UK = self.U & K
        img = Subspace(self.space.field, self.space.n, [self.f(v) for v in UK.basis])
        if img != self.W & K:
            raise HypothesisError(condition, "f(U ∩ K(E)) differs from W ∩ K(E)")

    def check_relative(self):
        """Raise HypothesisError naming the first failing condition (1), (2) or (3)."""
        E, A = self.space, self.fix
        UA = self.U & A
        if UA != self.W & A or any(tuple(self.f(v)) != tuple(v) for v in UA.basis):
            raise HypothesisError("(1)", "condition (1): U∩A = W∩A with f = id there fails")
        Ap = E.perp(A)
        F = E.field
        for u in self.f.domain_basis:
            d = tuple(F.sub(x, y) for x, y in zip(self.f(u), u))
            if d not in Ap:
                raise HypothesisError("(2)", "condition (2): f(u) - u must lie in A^perp")
        self.check_kernel("(3)")

    def to_json(self):
        F = self.space.field
        d = {"space": self.space.to_json(),
             "U": [[F.to_json_value(x) for x in v] for v in self.f.domain_basis],
             "W": self.W.to_json(),
             "images": [[F.to_json_value(x) for x in v] for v in self.f.images]}
        if self.fix is not None:
            d["fix"] = self.fix.to_json()
        return d

    @classmethod
    def from_json(cls, d):
        space = FormedSpace.from_json(d["space"])
        F, n = space.field, space.n
        vec = lambda rows: [[F.coerce(x) for x in r] for r in rows]  # noqa: E731
        W = Subspace(F, n, vec(d["W"])) if d.get("W") is not None else None
        fix = Subspace(F, n, vec(d["fix"])) if d.get("fix") is not None else None
        return cls(space, vec(d["U"]), vec(d["images"]), fix=fix, codomain=W)


def _sub(F, u, v):
    return tuple(F.sub(x, y) for x, y in zip(u, v))


def _lin(F, pairs, n):
    out = [F.zero] * n
    for c, v in pairs:
        if c:
            out = [F.add(o, F.mul(c, x)) for o, x in zip(out, v)]
    return tuple(out)


def _from_images(E, sources, targets):
    """The matrix g with g(s_i) = t_i for a basis s of E."""
    F, n = E.field, E.n
    S = Matrix.from_columns(F, sources, n)
    T = Matrix.from_columns(F, targets, n)
    try:
        return T @ S.inverse()
    except ZeroDivisionError:
        raise CertificationError("extension sources do not form a basis") from None


def extend_by_identity(f: PartialIsometry, C: Subspace) -> PartialIsometry:
    """f ⊕ id_C, under C ⊆ A^perp ∩ B^perp (or C ⊆ (a-b)^perp when A, B are lines)."""
    E, F = f.space, f.space.field
    A, B = f.domain, f.codomain
    zero = E.zero()
    if (A & C) != zero or (B & C) != zero:
        raise PreconditionError("C must meet both A and B trivially")
    if not C <= (E.perp(A) & E.perp(B)):
        if f.dim != 1:
            raise PreconditionError("C is not orthogonal to A and B")
        diff = _sub(F, f.domain_basis[0], f.images[0])
        if not C <= E.vector_perp(diff):
            raise PreconditionError("C is not orthogonal to a - b")
    g = PartialIsometry(E, f.domain_basis + C.basis, f.images + C.basis, certify=False)
    if not g.preserves_form():
        raise CertificationError("f ⊕ id failed to certify")
    return g


def _extend(E, dom, img, trace):
    """Matrix of an isometry of E sending dom[i] to img[i]; follows the inductive proof."""
    F, n = E.field, E.n
    K = E.kernel
    full = E.full()
    U = Subspace(F, n, dom)
    if U <= K:
        trace.append("base")
        W = Subspace(F, n, img)
        L = simultaneous_complement(U, W, full)
        return _from_images(E, list(dom) + list(L.basis), list(img) + list(L.basis))

    f = PartialIsometry(E, dom, img, certify=False)
    UK = U & K
    basis = list(UK.basis) + list(complement(UK, U).basis)
    Hb, a = basis[:-1], basis[-1]
    trace.append("H-reduction")
    h = _extend(E, Hb, [f(x) for x in Hb], trace)
    hinv = h.inverse()
    b = hinv.apply(f(a))
    x = _sub(F, b, a)
    Hs = Subspace(F, n, Hb)
    P = E.vector_perp(x)

    if P == full:
        trace.append("1")
        M = quotient_complement(Subspace(F, n, [a]), Subspace(F, n, [b]), full, Hs)
        g = _from_images(E, list(M.basis) + [a], list(M.basis) + [b])
    elif a not in P:
        trace.append("2.1")
        g = _from_images(E, list(P.basis) + [a], list(P.basis) + [b])
    else:
        trace.append("2.2")
        if E.params.lam.reduce(E.form.q(x, x)):
            raise CertificationError("Case 2.2 reached with Q(b - a) != 0")
        L = complement_containing(Hs + Subspace(F, n, [a]), Hs + Subspace(F, n, [b]), P, K)
        M = Hs + L
        Mp = E.perp(M)
        v = simultaneous_complement(Mp & E.vector_perp(a), Mp & E.vector_perp(b), Mp).basis[0]
        om, conj, mul, div = E.omega, F.conj, F.mul, F.div
        if v not in P:
            trace.append("2.2.1")
            d = div(om(a, v), om(b, v))
            c = div(mul(F.sub(F.one, mul(d, conj(d))), E.form.q(v, v)), mul(conj(d), om(v, x)))
            gv = _lin(F, [(c, x), (d, v)], n)
            g = _from_images(E, list(M.basis) + [a, v], list(M.basis) + [b, gv])
        else:
            trace.append("2.2.2")
            z = next(e for e in full.basis if e not in P)
            d = div(F.sub(om(a, z), om(b, z)), om(b, v))
            num = F.add(mul(mul(d, conj(d)), E.form.q(v, v)), mul(d, om(z, v)))
            c = F.neg(div(num, om(z, x)))
            gz = _lin(F, [(F.one, z), (c, x), (d, v)], n)
            g = _from_images(E, list(M.basis) + [a, z], list(M.basis) + [b, gz])
    return h @ g


def _certify_extension(E, g, dom, img, trace):
    iso = Isometry(E, g, trace)
    for u, w in zip(dom, img):
        if g.apply(u) != tuple(w):
            raise CertificationError("extension does not agree with f")
    return iso


def witt_extend(problem: ExtensionProblem) -> Isometry:
    """A certified isometry of E extending f; ``case_trace`` records the proof path."""
    problem.check_kernel()
    E, f = problem.space, problem.f
    trace = []
    g = _extend(E, f.domain_basis, f.images, trace)
    return _certify_extension(E, g, f.domain_basis, f.images, trace)


def relative_witt_extend(problem: ExtensionProblem) -> Isometry:
    """A certified isometry extending f and fixing ``problem.fix`` pointwise."""
    E, f, A = problem.space, problem.f, problem.fix
    if A is None:
        return witt_extend(problem)
    problem.check_relative()
    A0 = complement(problem.U & A, A)
    dom = f.domain_basis + A0.basis
    img = f.images + A0.basis
    fbar = PartialIsometry(E, dom, img, certify=False)
    if not fbar.preserves_form() or fbar.domain.dim != len(dom):
        raise CertificationError("f ⊕ id on U ⊕ A0 failed to certify")
    trace = ["relative"]
    g = _extend(E, dom, img, trace)
    iso = _certify_extension(E, g, dom, img, trace)
    if any(g.apply(v) != tuple(v) for v in A.basis):
        raise CertificationError("relative extension moves A")
    return iso


def transport_map(E: FormedSpace, U: Subspace, W1: Subspace, W2: Subspace):
    """An isomorphism W1 -> W2, identity on R(E) and congruent to id modulo U^perp."""
    F, n = E.field, E.n
    R = E.radical
    Up = E.perp(U)
    X1 = complement(R, W1 & Up).basis
    X2 = complement(R, W2 & Up).basis
    Y1 = complement(W1 & Up, W1).basis
    dom = list(R.basis) + list(X1) + list(Y1)
    img = list(R.basis) + list(X2)
    stack = list(W2.basis) + list(Up.basis)
    cols = transpose_rows(stack, n)
    k = W2.dim
    for y in Y1:
        c = solve(F, cols, list(y), len(stack))
        img.append(_lin(F, zip(c[:k], W2.basis), n))
    return dom, img


def isotropic_transport(E: FormedSpace, U: Subspace, W1: Subspace, W2: Subspace) -> Isometry:
    """A certified isometry with g(W1) = W2 that fixes U pointwise."""
    R = E.radical
    full = E.full()
    for name, S in (("U", U), ("W1", W1), ("W2", W2)):
        if not is_isotropic(E, S):
            raise HypothesisError("isotropic", f"{name} is not isotropic")
        if not R <= S:
            raise HypothesisError("radical", f"{name} does not contain R(E)")
    if W1.dim != W2.dim:
        raise HypothesisError("dimension", "W1 and W2 differ in dimension")
    Up = E.perp(U)
    if W1 + Up != full or W2 + Up != full:
        raise HypothesisError("transversal", "W_i + U^perp must be all of E")
    dom, img = transport_map(E, U, W1, W2)
    g = relative_witt_extend(ExtensionProblem(E, dom, img, fix=U))
    if W1.image(g.matrix) != W2:
        raise CertificationError("transport does not send W1 to W2")
    return g
