"""(sigma, eps, Lambda)-quadratic forms as classes of sesquilinear matrices.

A sesquilinear matrix ``M`` encodes ``q(v, w) = sigma(v)^T M w`` (first
argument conjugated).  A form is the class of ``M`` modulo

    X = { f : f(w, v) = -eps sigma(f(v, w)),  f(v, v) in Lambda for all v },

stored through a canonical upper-triangular representative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import PreconditionError, UnliftableError
from .fields import (AdditiveSubgroup, Field, lambda_max, lambda_min,
                     norm_one_elements)
from .linalg import Matrix

__all__ = [
    "FormParams", "FormClass", "FormKind", "x_membership", "omega_of", "Q_of",
    "q_value", "form_equal", "eq1_defect", "classify", "scale_form",
    "from_classical", "pullback", "enumerate_forms", "hyperbolic_form",
    "euclidean_form", "roster_params", "sesq",
]


@dataclass(frozen=True)
class FormParams:
    """A validated tuple (field, eps, Lambda) with Lambda_min <= Lambda <= Lambda_max."""

    field: Field
    eps: object
    lam: AdditiveSubgroup

    def __post_init__(self):
        F = self.field
        if self.lam.field != F:
            raise PreconditionError("Lambda lives in a different field")
        if F.norm(self.eps) != F.one:
            raise PreconditionError("eps * sigma(eps) must be 1")
        if not lambda_min(F, self.eps) <= self.lam:
            raise PreconditionError(f"Lambda = {self.lam.describe()} does not contain Lambda_min")
        if not self.lam <= lambda_max(F, self.eps):
            raise PreconditionError(f"Lambda = {self.lam.describe()} is not inside Lambda_max")

    @classmethod
    def make(cls, field, eps, lam="min"):
        """Build params; ``lam`` may be a subgroup or one of "min", "max", "zero", "full", "fixed"."""
        eps = field.raw(eps)
        if isinstance(lam, str):
            if lam == "min":
                lam = lambda_min(field, eps)
            elif lam == "max":
                lam = lambda_max(field, eps)
            else:
                lam = AdditiveSubgroup.from_json(field, lam)
        return cls(field, eps, lam)

    @property
    def core(self):
        return self.lam.core()

    def __repr__(self):
        F = self.field
        return f"FormParams({F.name}, eps={F.format(self.eps)}, Lambda={self.lam.describe()})"

    def to_json(self):
        return {"field": self.field.to_json(), "epsilon": self.field.to_json_value(self.eps),
                "lambda": self.lam.to_json()}

    @classmethod
    def from_json(cls, d):
        F = Field.from_json(d["field"])
        eps = F.coerce(d.get("epsilon", 1))
        lam = d.get("lambda")
        if lam is None:
            lo, hi = lambda_min(F, eps), lambda_max(F, eps)
            if lo != hi:
                raise PreconditionError("Lambda is not determined by (field, eps); give \"lambda\"")
            lam = lo
        elif isinstance(lam, str) and lam in ("min", "max"):
            return cls.make(F, eps, lam)
        else:
            lam = AdditiveSubgroup.from_json(F, lam)
        return cls(F, eps, lam)


def roster_params(field, intermediate=True):
    """Every admissible (eps, Lambda) over a finite field.

    With ``intermediate=False`` only Lambda_min and Lambda_max are produced.
    """
    out = []
    for eps in norm_one_elements(field):
        lo, hi = lambda_min(field, eps), lambda_max(field, eps)
        if lo == hi:
            out.append(FormParams(field, eps, lo))
            continue
        if not intermediate:
            out += [FormParams(field, eps, lo), FormParams(field, eps, hi)]
            continue
        from .linalg import enumerate_subspaces
        for S in enumerate_subspaces(field.prime_field, field.k):
            lam = AdditiveSubgroup(field, S.basis)
            if lo <= lam <= hi:
                out.append(FormParams(field, eps, lam))
    return out


def sesq(F, rows, v, w):
    """sigma(v)^T M w for a raw row tuple M."""
    add, mul, conj = F.add, F.mul, F.conj
    s = F.zero
    for vi, row in zip(v, rows):
        if vi:
            t = F.zero
            for m, wj in zip(row, w):
                if m and wj:
                    t = add(t, mul(m, wj))
            if t:
                s = add(s, mul(conj(vi), t))
    return s


def _canonical(params, rows):
    F = params.field
    eps, conj, add, mul = params.eps, F.conj, F.add, F.mul
    core = params.core
    n = len(rows)
    out = []
    for i in range(n):
        r = []
        for j in range(n):
            if j < i:
                r.append(F.zero)
            elif j == i:
                r.append(core.reduce(rows[i][i]))
            else:
                r.append(add(rows[i][j], mul(eps, conj(rows[j][i]))))
        out.append(tuple(r))
    return tuple(out)


class FormClass:
    """A form, held as its canonical representative ``T``.

    ``T`` is upper triangular with ``T_ij = M_ij + eps sigma(M_ji)`` above the
    diagonal and ``T_ii`` the core-reduced ``M_ii``; two classes are equal iff
    their representatives agree entry-wise.
    """

    __slots__ = ("params", "n", "rows", "_omega")

    def __init__(self, params, matrix):
        if isinstance(matrix, Matrix):
            rows = matrix.rows
        else:
            rows = tuple(tuple(params.field.raw(x) for x in r) for r in matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise PreconditionError("a form needs a square matrix")
        self.params = params
        self.n = n
        self.rows = _canonical(params, rows)
        self._omega = None

    @classmethod
    def _trusted(cls, params, rows):
        q = object.__new__(cls)
        q.params, q.n, q.rows, q._omega = params, len(rows), rows, None
        return q

    @classmethod
    def zero(cls, params, n):
        F = params.field
        return cls._trusted(params, tuple((F.zero,) * n for _ in range(n)))

    @property
    def field(self):
        return self.params.field

    @property
    def matrix(self):
        return Matrix(self.field, self.rows, self.n)

    @property
    def omega_rows(self):
        if self._omega is None:
            F, eps = self.field, self.params.eps
            T = self.rows
            self._omega = tuple(
                tuple(F.add(T[i][j], F.mul(eps, F.conj(T[j][i]))) for j in range(self.n))
                for i in range(self.n))
        return self._omega

    def q(self, v, w):
        return sesq(self.field, self.rows, v, w)

    def omega(self, v, w):
        return sesq(self.field, self.omega_rows, v, w)

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, FormClass) and self.params == other.params
                and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        fmt = self.field.format
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows)
        return f"FormClass[{body}]"

    def to_json(self):
        return {"params": self.params.to_json(),
                "matrix": [[self.field.to_json_value(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, d):
        params = FormParams.from_json(d["params"])
        F = params.field
        return cls(params, [[F.coerce(x) for x in r] for r in d["matrix"]])


def x_membership(params, M):
    """True iff M lies in X(E, sigma, eps, Lambda).

    Checks the skew condition entry-wise and the diagonal against
    core(Lambda); for skew M the latter is equivalent to M(v, v) in Lambda
    for every vector v.
    """
    F = params.field
    rows = M.rows if isinstance(M, Matrix) else M
    eps, core = params.eps, params.core
    n = len(rows)
    for i in range(n):
        for j in range(i, n):
            if rows[j][i] != F.neg(F.mul(eps, F.conj(rows[i][j]))):
                return False
        if rows[i][i] not in core:
            return False
    return True


def omega_of(q):
    """Matrix of omega_q(v, w) = q(v, w) + eps sigma(q(w, v))."""
    return Matrix(q.field, q.omega_rows, q.n)


def q_value(q, v):
    """Raw q(v, v) on the canonical representative."""
    return sesq(q.field, q.rows, v, v)


def Q_of(q, v):
    """Q_q(v) as the reduced representative of q(v, v) + Lambda."""
    return q.params.lam.reduce(q_value(q, v))


def form_equal(q1, q2):
    if q1.params != q2.params or q1.n != q2.n:
        raise PreconditionError("forms have different parameters or dimension")
    return x_membership(q1.params, q1.matrix - q2.matrix)


def eq1_defect(q, v, w):
    """Q(v + w) - Q(v) - Q(w) - omega(v, w) reduced mod Lambda (always 0)."""
    F = q.field
    s = tuple(F.add(x, y) for x, y in zip(v, w))
    d = F.sub(F.sub(F.sub(q_value(q, s), q_value(q, v)), q_value(q, w)), q.omega(v, w))
    return q.params.lam.reduce(d)


class FormKind(str, Enum):
    HERMITIAN = "Hermitian"
    ALTERNATING = "Alternating"
    QUADRATIC = "Quadratic"
    MOD_LAMBDA_QUADRATIC = "ModLambdaQuadratic"


def classify(params):
    F = params.field
    if not F.has_trivial_involution:
        return FormKind.HERMITIAN
    if F.characteristic != 2:
        # eps decides; Lambda is forced by it
        return FormKind.QUADRATIC if params.eps == F.one else FormKind.ALTERNATING
    if params.lam.is_full:
        return FormKind.ALTERNATING
    if params.lam.is_zero:
        return FormKind.QUADRATIC
    return FormKind.MOD_LAMBDA_QUADRATIC


def scale_form(q, a):
    """Multiply by a != 0: lands in Form(E, sigma, a sigma(a)^-1 eps, a Lambda)."""
    F = q.field
    a = F.raw(a)
    if not a:
        raise PreconditionError("scale_form needs a nonzero scalar")
    p = q.params
    eps2 = F.mul(F.mul(a, F.inv(F.conj(a))), p.eps)
    params2 = FormParams(F, eps2, p.lam.scaled(a))
    return FormClass(params2, q.matrix.scale(a))


def _lift_diagonal(params, w):
    """Some a with a + eps sigma(a) = w (first in code order)."""
    F, eps = params.field, params.eps
    if not F.is_finite:
        if eps == F.one:
            return w / 2
        if w:
            raise UnliftableError("diagonal of an eps = -1 form over Q must vanish")
        return F.zero
    for a in F.elements():
        if F.add(a, F.mul(eps, F.conj(a))) == w:
            return a
    raise UnliftableError(f"no a with a + eps sigma(a) = {F.format(w)}")


def from_classical(kind, data, params):
    """Lift a classical form to a FormClass.

    ``kind`` is a :class:`FormKind` matching ``classify(params)``.  For
    Hermitian/Alternating, ``data`` is the matrix of omega; for the quadratic
    kinds it is ``{"Q": [Q(x_1), ...], "B": B_Q matrix}`` (only i < j entries
    of ``B`` are read).
    """
    kind = FormKind(kind)
    if kind != classify(params):
        raise PreconditionError(f"{kind.value} data does not match {classify(params).value} params")
    F = params.field
    if kind in (FormKind.HERMITIAN, FormKind.ALTERNATING):
        om = data.rows if isinstance(data, Matrix) else tuple(tuple(F.raw(x) for x in r) for r in data)
        n = len(om)
        for i in range(n):
            for j in range(n):
                if om[i][j] != F.mul(params.eps, F.conj(om[j][i])):
                    raise PreconditionError("omega is not eps-Hermitian")
        if F.has_trivial_involution and F.characteristic == 2 and any(om[i][i] for i in range(n)):
            raise UnliftableError("omega must be alternating when sigma = id in characteristic 2")
        rows = [[F.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                rows[i][j] = om[i][j]
            rows[i][i] = _lift_diagonal(params, om[i][i])
        return FormClass(params, rows)
    Qs = [F.raw(x) for x in data["Q"]]
    B = data.get("B")
    n = len(Qs)
    rows = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Qs[i]
        for j in range(i + 1, n):
            rows[i][j] = F.raw(B[i][j]) if B is not None else F.zero
    return FormClass(params, rows)


def pullback(f, q):
    """f^* q with matrix sigma(f)^T M f, for f: F^m -> F^n given as an n x m Matrix."""
    if f.nrows != q.n:
        raise PreconditionError(f"cannot pull a rank-{q.n} form back along a {f.shape} map")
    M = f.conj().T @ q.matrix @ f
    return FormClass(q.params, M)


def enumerate_forms(params, n):
    """All forms on F^n, one canonical representative each."""
    F = params.field
    reps = params.core.coset_representatives()
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for diag in itertools.product(reps, repeat=n):
        for off in itertools.product(F.elements(), repeat=len(upper)):
            rows = [[F.zero] * n for _ in range(n)]
            for i, d in enumerate(diag):
                rows[i][i] = d
            for (i, j), x in zip(upper, off):
                rows[i][j] = x
            yield FormClass._trusted(params, tuple(tuple(r) for r in rows))


def hyperbolic_form(params, n):
    """q_H(v, w) = sum sigma(v_{2i-1}) w_{2i} on F^n, n even."""
    if n % 2:
        raise PreconditionError("the hyperbolic form needs even dimension")
    F = params.field
    rows = [[F.zero] * n for _ in range(n)]
    for i in range(0, n, 2):
        rows[i][i + 1] = F.one
    return FormClass(params, rows)


def euclidean_form(params, n):
    return FormClass(params, Matrix.identity(params.field, n))
