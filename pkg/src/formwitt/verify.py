"""Brute-force oracles and the named verification checks.

Everything here works by enumeration over tiny finite fields and is kept
independent of the constructive code paths it is used to audit: isometry
groups are found by backtracking over matrix columns, form classes are
counted through their (omega, Q) data on every vector, and X-membership is
tested on all vectors rather than on a basis.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dc_field

from networkx.utils import UnionFind

from .errors import (BudgetExceeded, CertificationError, FormError,
                     HypothesisError, InfiniteFieldError, PreconditionError)
from .fields import (AdditiveSubgroup, lambda_max, lambda_min,
                     lambda_table_row, named_field, norm_one_elements)
from .forms import (FormClass, FormParams, classify, enumerate_forms,
                    euclidean_form, hyperbolic_form, roster_params, sesq)
from .geometry import FormedSpace, is_isotropic
from .linalg import Matrix, Subspace, enumerate_subspaces
from .witt import (ExtensionProblem, Isometry, relative_witt_extend,
                   transport_map, witt_extend)

__all__ = [
    "DEFAULT_BUDGET", "GroupCensus", "enumerate_isometries", "orbit_partition",
    "classical_identification_report", "x_member_bruteforce",
    "form_classes_bruteforce", "partial_isometries", "CheckResult",
    "CHECK_NAMES", "run_checks", "group_order_formula",
]

DEFAULT_BUDGET = 1 << 20


# -- small vector helpers ------------------------------------------------

def all_vectors(F, n):
    return list(itertools.product(F.elements(), repeat=n))


class _Echelon:
    """Incremental independence test for a growing list of vectors."""

    __slots__ = ("F", "rows")

    def __init__(self, F, rows=()):
        self.F = F
        self.rows = list(rows)  # (pivot, normalized row)

    def reduce(self, v):
        F = self.F
        v = list(v)
        for p, r in self.rows:
            t = v[p]
            if t:
                v = [F.sub(x, F.mul(t, y)) for x, y in zip(v, r)]
        return v

    def extended(self, v):
        """A new echelon with v added, or None if v is dependent."""
        F = self.F
        w = self.reduce(v)
        for p, x in enumerate(w):
            if x:
                inv = F.inv(x)
                w = [F.mul(inv, y) for y in w]
                return _Echelon(F, self.rows + [(p, w)])
        return None


def _functional(F, om, x):
    """Row vector r with omega(x, y) = r . y."""
    n = len(om)
    cx = [F.conj(c) for c in x]
    out = []
    for j in range(n):
        s = F.zero
        for i in range(n):
            if cx[i] and om[i][j]:
                s = F.add(s, F.mul(cx[i], om[i][j]))
        out.append(s)
    return out


def _apply(F, r, y):
    s = F.zero
    for a, b in zip(r, y):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


# -- isometry groups -----------------------------------------------------

def _backtrack(F, om, core_reduce, qform, targets_diag, targets_off, candidates, k):
    """Yield lists of k independent vectors x_j with the prescribed pullback data.

    ``targets_diag[j]`` is the wanted core-reduced q(x_j, x_j) and
    ``targets_off[i][j]`` (i < j) the wanted omega(x_i, x_j).
    """
    pools = [[x for x in candidates if core_reduce(qform(x)) == targets_diag[j]] for j in range(k)]

    def rec(j, chosen, funcs, ech):
        if j == k:
            yield list(chosen)
            return
        for x in pools[j]:
            if any(_apply(F, funcs[i], x) != targets_off[i][j] for i in range(j)):
                continue
            e2 = ech.extended(x)
            if e2 is None:
                continue
            chosen.append(x)
            funcs.append(_functional(F, om, x))
            yield from rec(j + 1, chosen, funcs, e2)
            chosen.pop()
            funcs.pop()

    yield from rec(0, [], [], _Echelon(F))


@dataclass
class GroupCensus:
    """Every bijective isometry of a formed space, as sorted matrices."""

    space: FormedSpace
    elements: list
    _index: set = dc_field(default=None, repr=False)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, g):
        if self._index is None:
            self._index = {m.rows for m in self.elements}
        rows = g.matrix.rows if isinstance(g, Isometry) else g.rows
        return rows in self._index

    def isometries(self):
        """Elements wrapped as certified :class:`Isometry` values."""
        return [Isometry(self.space, m) for m in self.elements]

    def check_closure(self):
        """Identity, products and inverses all stay inside (full check)."""
        I = Matrix.identity(self.space.field, self.space.n)
        if I not in self:
            return False
        for g in self.elements:
            if g.inverse() not in self:
                return False
            for h in self.elements:
                if (g @ h) not in self:
                    return False
        return True

    def fixing(self, A: Subspace):
        return [g for g in self.elements if all(g.apply(v) == v for v in A.basis)]


def enumerate_isometries(E: FormedSpace, budget=DEFAULT_BUDGET) -> GroupCensus:
    """All invertible g with pullback(g, q) = q, by column-wise backtracking."""
    F, n = E.field, E.n
    if not F.is_finite:
        raise InfiniteFieldError("isometry groups are enumerated over finite fields only")
    need = F.order ** (n * n)
    if need > budget:
        raise BudgetExceeded(need, budget)
    T = E.form.rows
    core = E.params.core
    qrows = E.form.rows
    cands = [v for v in all_vectors(F, n) if any(v)]
    mats = []
    for cols in _backtrack(F, E.form.omega_rows, core.reduce, lambda x: sesq(F, qrows, x, x),
                           [T[j][j] for j in range(n)], T, cands, n):
        mats.append(Matrix.from_columns(F, cols, n))
    mats.sort(key=lambda m: m.rows)
    return GroupCensus(E, mats)


def partial_isometries(E: FormedSpace, U: Subspace, W: Subspace):
    """Every bijective isometry U -> W, as image lists for the RREF basis of U."""
    F, n = E.field, E.n
    if U.dim != W.dim:
        return
    core = E.params.core
    ub = U.basis
    diag = [core.reduce(E.form.q(u, u)) for u in ub]
    off = [[E.omega(ub[i], ub[j]) for j in range(len(ub))] for i in range(len(ub))]
    cands = [w for w in W.elements() if any(w)]
    qrows = E.form.rows
    yield from _backtrack(F, E.form.omega_rows, core.reduce, lambda x: sesq(F, qrows, x, x),
                          diag, off, cands, U.dim)


def orbit_partition(census: GroupCensus, subspaces):
    """Orbits of the census on a group-stable list of subspaces.

    Returns a list of (orbit, (dim, dim of intersection with R(E))) with each
    orbit sorted and orbits ordered by their least member.
    """
    subspaces = list(subspaces)
    index = set(subspaces)
    uf = UnionFind(subspaces)
    for g in census.elements:
        for S in subspaces:
            T = S.image(g)
            if T not in index:
                raise PreconditionError("subspace list is not stable under the group")
            uf.union(S, T)
    R = census.space.radical
    orbits = []
    for block in uf.to_sets():
        orb = sorted(block, key=lambda s: s.sort_key)
        orbits.append((orb, (orb[0].dim, (orb[0] & R).dim)))
    orbits.sort(key=lambda o: o[0][0].sort_key)
    return orbits


def isotropic_subspaces(E):
    return [S for S in enumerate_subspaces(E.field, E.n) if is_isotropic(E, S)]


# -- classical group orders ----------------------------------------------

def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def gl_order(q, n):
    return _prod(q ** n - q ** i for i in range(n))


def group_order_formula(label, q, n):
    """Order of a classical group over GF(q) (for U_n, q is the fixed-field order)."""
    if label == "GL":
        return gl_order(q, n)
    if label == "Sp":
        m = n // 2
        return q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    if label == "U":
        return q ** (n * (n - 1) // 2) * _prod(q ** i - (-1) ** i for i in range(1, n + 1))
    if label in ("O+", "O-"):
        m = n // 2
        s = -1 if label == "O+" else 1
        return 2 * q ** (m * (m - 1)) * (q ** m + s) * _prod(q ** (2 * i) - 1 for i in range(1, m))
    if label == "O":
        m = (n - 1) // 2
        return 2 * q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    if label == "O(deg)":
        # Q(v) = L(v)^2 with L a nonzero functional: the stabilizer of L
        return q ** (n - 1) * gl_order(q, n - 1)
    raise PreconditionError(f"no order formula for {label}")


def _is_square(F, a):
    return any(F.mul(x, x) == a for x in F.elements())


def classical_label(E: FormedSpace, which: str):
    """(label, q) of the classical group of a hyperbolic or Euclidean space."""
    F, n, params = E.field, E.n, E.params
    kind = classify(params).value
    if kind == "Hermitian":
        q0 = int(round(F.order ** 0.5))
        # U_n sits inside GL_n, so equal orders mean equal groups (only GF(4), n = 1)
        if not E.form.is_zero() or group_order_formula("U", q0, n) == gl_order(F.order, n):
            return "U", q0
    if E.form.is_zero():
        return "GL", F.order
    if kind == "Alternating":
        return "Sp", F.order
    if which == "hyperbolic":
        return "O+", F.order
    if F.characteristic == 2:
        return "O(deg)", F.order
    if n % 2:
        return "O", F.order
    m = n // 2
    minus_one = F.neg(F.one)
    sign = F.one if m % 2 == 0 else minus_one
    return ("O+" if _is_square(F, sign) else "O-"), F.order


def classical_identification_report(params: FormParams, n: int, budget=DEFAULT_BUDGET):
    """Group orders of the hyperbolic (n even) and Euclidean forms, with labels and formula checks."""
    out = {}
    forms = [("euclidean", euclidean_form(params, n))]
    if n % 2 == 0:
        forms.insert(0, ("hyperbolic", hyperbolic_form(params, n)))
    for which, q in forms:
        E = FormedSpace(q)
        census = enumerate_isometries(E, budget)
        label, qq = classical_label(E, which)
        expected = group_order_formula(label, qq, n)
        iso = isotropic_subspaces(E)
        table = [{"dim": inv[0], "dim_radical": inv[1], "size": len(orb)}
                 for orb, inv in orbit_partition(census, iso)]
        out[which] = {"order": census.order, "label": f"{label}_{n}", "formula_order": expected,
                      "matches_formula": census.order == expected, "orbit_table": table}
    return out


# -- brute-force oracles for forms ---------------------------------------

def x_member_bruteforce(params: FormParams, rows):
    """Definitional X-membership: skewness and f(v, v) in Lambda on every vector."""
    F = params.field
    n = len(rows)
    vecs = all_vectors(F, n)
    lam, eps = params.lam, params.eps
    for v in vecs:
        if sesq(F, rows, v, v) not in lam:
            return False
    # skewness is biadditive, so testing basis pairs covers all pairs
    e = [tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)]
    for v in e:
        for w in e:
            if sesq(F, rows, w, v) != F.neg(F.mul(eps, F.conj(sesq(F, rows, v, w)))):
                return False
    return True


def chi_signature(params, rows, vecs):
    """(omega matrix, Q on every vector mod Lambda) for a raw sesquilinear matrix."""
    F, eps = params.field, params.eps
    n = len(rows)
    om = tuple(tuple(F.add(rows[i][j], F.mul(eps, F.conj(rows[j][i]))) for j in range(n))
               for i in range(n))
    Q = tuple(params.lam.reduce(sesq(F, rows, v, v)) for v in vecs)
    return om, Q


def form_classes_bruteforce(params: FormParams, n: int):
    """Number of distinct (omega, Q) signatures over all n x n matrices."""
    F = params.field
    vecs = all_vectors(F, n)
    seen = set()
    for entries in itertools.product(F.elements(), repeat=n * n):
        rows = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        seen.add(chi_signature(params, rows, vecs))
    return len(seen)


def classical_count(params: FormParams, n: int):
    """Size of the classical target of the form-class bijection (Herm, Alt or Quad) over GF(q)."""
    F = params.field
    kind = classify(params).value
    if kind == "Hermitian":
        q0 = int(round(F.order ** 0.5))
        return q0 ** (n * n)
    q = F.order
    if kind == "Alternating":
        return q ** (n * (n - 1) // 2)
    if kind == "Quadratic":
        return q ** (n * (n + 1) // 2)
    return None


# -- check plumbing ------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    detail: str = ""
    seconds: float = 0.0
    failures: list = dc_field(default_factory=list)

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "detail": self.detail, "seconds": round(self.seconds, 3),
                "failures": [str(f) for f in self.failures[:10]]}


class _Tally:
    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failures = []
        self.notes = []
        self.t0 = time.perf_counter()

    def ok(self, cond, what):
        self.cases += 1
        if not cond:
            self.failures.append(what)

    def result(self):
        return CheckResult(self.name, not self.failures, self.cases, "; ".join(self.notes),
                           time.perf_counter() - self.t0, self.failures)


def _fmt_params(p):
    return repr(p)


# default per-check dimension caps, keyed by field order
CAPS = {
    "eq1": {2: 3, 3: 2, 4: 2, 5: 2, 9: 1},
    "prop27": {2: 2, 3: 2, 4: 2, 5: 2, 9: 2},
    "thm1-counts": {2: 3, 3: 2, 4: 2, 5: 2, 9: 2},
    "witt-exhaustive": {2: 3, 3: 2, 4: 2, 5: 2, 9: 2},
    "transitivity": {2: 3, 3: 2, 4: 2, 5: 2, 9: 2},
    "lemma36": {2: 3, 3: 2, 4: 2, 5: 2, 9: 2},
    "lemma38": {2: 3, 3: 2, 4: 2, 5: 2, 9: 2},
    "prop29": {2: 2, 3: 2, 4: 2, 5: 2, 9: 2},
}


def _dims(name, F, max_dim):
    cap = CAPS[name].get(F.order, 1)
    return range(1, min(max_dim, cap) + 1)


def check_eq1(fields, max_dim=3, dims=None):
    t = _Tally("eq1")
    for F in fields:
        for n in (dims or _dims("eq1", F, max_dim)):
            vecs = all_vectors(F, n)
            for params in roster_params(F):
                lam = params.lam
                for q in enumerate_forms(params, n):
                    Qv = {v: sesq(F, q.rows, v, v) for v in vecs}
                    for v in vecs:
                        for w in vecs:
                            s = tuple(F.add(x, y) for x, y in zip(v, w))
                            d = F.sub(F.sub(F.sub(Qv[s], Qv[v]), Qv[w]), q.omega(v, w))
                            t.ok(not lam.reduce(d), (q, v, w))
            t.notes.append(f"{F.name} n={n}")
    return t.result()


def check_prop27(fields, max_dim=2, dims=None):
    """chi injective; omega alone decides when Lambda = Lambda_max; Q alone when Lambda != F."""
    t = _Tally("prop27")
    for F in fields:
        for n in (dims or _dims("prop27", F, max_dim)):
            vecs = all_vectors(F, n)
            for params in roster_params(F):
                is_max = params.lam == lambda_max(F, params.eps)
                not_full = not params.lam.is_full
                seen = {}
                for q in enumerate_forms(params, n):
                    om, Q = chi_signature(params, q.rows, vecs)
                    t.ok((om, Q) not in seen, ("chi collision", q, seen.get((om, Q))))
                    seen[(om, Q)] = q
                    zero = q.is_zero()
                    if is_max and not any(any(r) for r in om):
                        t.ok(zero, ("omega = 0 but q != 0", q))
                    if not_full and not any(Q):
                        t.ok(zero, ("Q = 0 but q != 0", q))
            t.notes.append(f"{F.name} n={n}")
    return t.result()


def check_thm1_counts(fields, max_dim=3, dims=None):
    """|Form| equals the brute-force class count and the classical count."""
    t = _Tally("thm1-counts")
    for F in fields:
        for n in (dims or _dims("thm1-counts", F, max_dim)):
            if F.order ** (n * n) > (1 << 14):
                continue
            for params in roster_params(F):
                canon = sum(1 for _ in enumerate_forms(params, n))
                brute = form_classes_bruteforce(params, n)
                expect = classical_count(params, n)
                t.ok(canon == brute, ("canonical vs brute force", params, n, canon, brute))
                if expect is not None:
                    t.ok(canon == expect, ("classical count", params, n, canon, expect))
            t.notes.append(f"{F.name} n={n}")
    return t.result()


def check_prop29(fields, max_dim=2, dims=None):
    """Intermediate Lambda over a perfect field of char 2 gives the same X as Lambda = 0."""
    t = _Tally("prop29")
    for F in fields:
        if F.characteristic != 2 or not F.has_trivial_involution:
            t.notes.append(f"{F.name}: not applicable")
            continue
        zero = FormParams(F, F.one, AdditiveSubgroup.zero(F))
        inter = [p for p in roster_params(F) if not p.lam.is_zero and not p.lam.is_full]
        for n in (dims or _dims("prop29", F, max_dim)):
            mats = [tuple(tuple(e[i * n:(i + 1) * n]) for i in range(n))
                    for e in itertools.product(F.elements(), repeat=n * n)]
            X0 = {m for m in mats if x_member_bruteforce(zero, m)}
            for p in inter:
                Xl = {m for m in mats if x_member_bruteforce(p, m)}
                t.ok(Xl == X0, ("X differs", p, n))
            t.notes.append(f"{F.name} n={n}: {len(inter)} intermediate Lambda")
    return t.result()


def check_propA1(fields, **_):
    """Computed (Lambda_min, Lambda_max) against the closed-form table rows."""
    t = _Tally("propA1")
    for F in fields:
        for eps in norm_one_elements(F):
            key, emin, emax = lambda_table_row(F, eps)
            got = (lambda_min(F, eps), lambda_max(F, eps))
            t.ok(got == (emin, emax), (F.name, F.format(eps), key, "got",
                                       got[0].describe(), got[1].describe(),
                                       "table", emin.describe(), emax.describe()))
    return t.result()


def _spaces(F, n, all_forms=True):
    for params in roster_params(F):
        if all_forms:
            for q in enumerate_forms(params, n):
                yield FormedSpace(q)
        else:
            if n % 2 == 0:
                yield FormedSpace(hyperbolic_form(params, n))
            yield FormedSpace(euclidean_form(params, n))


@dataclass
class WittStats:
    extended: int = 0
    rejected: int = 0
    failures: list = dc_field(default_factory=list)
    cases: dict = dc_field(default_factory=dict)


def witt_exhaustive_space(E, stats, census=None, subspaces=None):
    """Run witt_extend on every bijective isometry between subspaces of E."""
    K = E.kernel
    subs = subspaces if subspaces is not None else enumerate_subspaces(E.field, E.n)
    by_dim = {}
    for S in subs:
        by_dim.setdefault(S.dim, []).append(S)
    for d, group in by_dim.items():
        for U in group:
            UK = U & K
            for W in group:
                WK = W & K
                if UK.dim != WK.dim:
                    stats.rejected += sum(1 for _ in partial_isometries(E, U, W))
                    continue
                for imgs in partial_isometries(E, U, W):
                    f_img = Subspace(E.field, E.n, [_image_of(E, U, imgs, v) for v in UK.basis])
                    if f_img != WK:
                        stats.rejected += 1
                        continue
                    try:
                        g = witt_extend(ExtensionProblem(E, U.basis, imgs))
                    except FormError as exc:
                        stats.failures.append((E.form, U, imgs, repr(exc)))
                        continue
                    if census is not None and g not in census:
                        stats.failures.append((E.form, U, imgs, "output not in census"))
                    stats.extended += 1
                    for c in g.case_trace:
                        stats.cases[c] = stats.cases.get(c, 0) + 1


def _image_of(E, U, imgs, v):
    F = E.field
    out = [F.zero] * E.n
    for c, w in zip(U.coords(v), imgs):
        if c:
            out = [F.add(o, F.mul(c, x)) for o, x in zip(out, w)]
    return tuple(out)


def check_witt_exhaustive(fields, max_dim=3, dims=None, with_census=False):
    t = _Tally("witt-exhaustive")
    stats = WittStats()
    for F in fields:
        for n in (dims or _dims("witt-exhaustive", F, max_dim)):
            subs = enumerate_subspaces(F, n)
            for E in _spaces(F, n):
                census = enumerate_isometries(E) if with_census else None
                witt_exhaustive_space(E, stats, census, subs)
            t.notes.append(f"{F.name} n={n}")
    t.cases = stats.extended
    t.failures = stats.failures
    t.notes.append(f"{stats.extended} extended, {stats.rejected} kernel-violating maps skipped, "
                   f"cases {dict(sorted(stats.cases.items()))}")
    return t.result()


def transitivity_space(E, t, census=None):
    census = census or enumerate_isometries(E)
    iso = isotropic_subspaces(E)
    orbits = orbit_partition(census, iso)
    R = E.radical
    invariants = {(S.dim, (S & R).dim) for S in iso}
    pure = all(len({(S.dim, (S & R).dim) for S in orb}) == 1 for orb, _ in orbits)
    t.ok(pure and len(orbits) == len(invariants), ("orbits differ from invariant classes", E.form))


def check_transitivity(fields, max_dim=3, dims=None, all_forms=True):
    t = _Tally("transitivity")
    for F in fields:
        for n in (dims or _dims("transitivity", F, max_dim)):
            for E in _spaces(F, n, all_forms):
                transitivity_space(E, t)
            t.notes.append(f"{F.name} n={n}")
    return t.result()


def fixes_subspace_space(E, t, census=None, subspaces=None):
    census = census or enumerate_isometries(E)
    F = E.field
    for A in (subspaces or enumerate_subspaces(F, E.n)):
        Ap = E.perp(A)
        for g in census.fixing(A):
            moved = Ap.image(g) == Ap
            mod = all(tuple(F.sub(x, y) for x, y in zip(g.apply(e), e)) in Ap
                      for e in E.full().basis)
            t.ok(moved and mod, ("fixing-A", E.form, A, g))


def check_lemma36(fields, max_dim=3, dims=None):
    t = _Tally("lemma36")
    for F in fields:
        for n in (dims or _dims("lemma36", F, max_dim)):
            subs = enumerate_subspaces(F, n)
            for E in _spaces(F, n):
                fixes_subspace_space(E, t, subspaces=subs)
            t.notes.append(f"{F.name} n={n}")
    return t.result()


def perp_meet_space(E, t, subspaces=None):
    subs = subspaces or enumerate_subspaces(E.field, E.n)
    full, R = E.full(), E.radical
    perps = {S: E.perp(S) for S in subs}
    for U in subs:
        if not is_isotropic(E, U):
            continue
        for W in subs:
            if W + perps[U] == full:
                t.ok((U & perps[W]) <= R, ("perp-meet", E.form, U, W))


def check_lemma38(fields, max_dim=3, dims=None):
    t = _Tally("lemma38")
    for F in fields:
        for n in (dims or _dims("lemma38", F, max_dim)):
            subs = enumerate_subspaces(F, n)
            for E in _spaces(F, n):
                perp_meet_space(E, t, subs)
            t.notes.append(f"{F.name} n={n}")
    return t.result()


CHECKS = {
    "eq1": check_eq1,
    "prop27": check_prop27,
    "thm1-counts": check_thm1_counts,
    "witt-exhaustive": check_witt_exhaustive,
    "transitivity": check_transitivity,
    "lemma36": check_lemma36,
    "lemma38": check_lemma38,
    "prop29": check_prop29,
    "propA1": check_propA1,
}
CHECK_NAMES = tuple(CHECKS)


def selection_fields(name, sigma=None):
    """Fields selected by a shorthand; both involutions when sigma is omitted."""
    if sigma is not None:
        return [named_field(name, sigma)]
    out = [named_field(name)]
    try:
        out.append(named_field(name, "frobenius"))
    except PreconditionError:
        pass
    return out


def run_checks(fields, max_dim, budget=DEFAULT_BUDGET, names=None):
    """Run the named checks; BudgetExceeded if max_dim is beyond the enumeration budget."""
    for F in fields:
        need = F.order ** (max_dim * max_dim)
        if need > budget:
            raise BudgetExceeded(need, budget)
    out = []
    for name in (names or CHECK_NAMES):
        if name not in CHECKS:
            raise PreconditionError(f"unknown check {name!r}")
        out.append(CHECKS[name](fields, max_dim=max_dim))
    return out


# -- relative Witt and its converse -------------------------------------

def relative_exhaustive_space(E, A, census, t, subspaces):
    """Every problem satisfying (1)-(3) for this A extends fixing A; returns counts."""
    F = E.field
    fixing = census.fixing(A)
    by_dim = {}
    for S in subspaces:
        by_dim.setdefault(S.dim, []).append(S)
    n_ok = n_rej = 0
    for group in by_dim.values():
        for U in group:
            for W in group:
                if (U & A) != (W & A):
                    continue
                for imgs in partial_isometries(E, U, W):
                    try:
                        prob = ExtensionProblem(E, U.basis, imgs, fix=A)
                        prob.check_relative()
                    except HypothesisError:
                        n_rej += 1
                        continue
                    try:
                        g = relative_witt_extend(prob)
                        t.ok(g in census and all(g(v) == v for v in A.basis), ("relative", U, imgs))
                    except FormError as exc:
                        t.ok(False, ("relative failed", E.form, A, U, imgs, repr(exc)))
                    n_ok += 1
    fixes_subspace_space(E, t, census, [A])
    return n_ok, n_rej, len(fixing)


def converse_space(E, U, census):
    """For W1, W2 in the relative building of U and every isomorphism f: W1 -> W2 fixing R(E):
    f extends to an isometry fixing U iff f = id mod U^perp.  Returns (checked, witnesses, mismatches)."""
    F, n = E.field, E.n
    R = E.radical
    Up = E.perp(U)
    full = E.full()
    fixing = census.fixing(U)
    cands = [W for W in isotropic_subspaces(E)
             if R <= W and W + Up == full]
    checked = witnesses = 0
    mismatches = []
    for W1 in cands:
        ext = list(R.basis) + complement_basis(R, W1)
        for W2 in cands:
            if W2.dim != W1.dim:
                continue
            wel = [w for w in W2.elements()]
            free = ext[R.dim:]
            for imgs in itertools.product(wel, repeat=len(free)):
                full_imgs = list(R.basis) + list(imgs)
                if Subspace(F, n, full_imgs).dim != W1.dim:
                    continue
                checked += 1
                mod_id = all(tuple(F.sub(a, b) for a, b in zip(y, x)) in Up
                             for x, y in zip(ext, full_imgs))
                extends = any(all(g.apply(x) == tuple(y) for x, y in zip(ext, full_imgs))
                              for g in fixing)
                if extends != mod_id:
                    mismatches.append((W1, W2, imgs))
                if not mod_id:
                    witnesses += 1
    return checked, witnesses, mismatches


def complement_basis(R, W):
    from .linalg import complement
    return list(complement(R, W).basis)


def transport_exhaustive_space(E, U, t):
    """isotropic_transport certifies for every pair in the relative building of U."""
    from .witt import isotropic_transport
    R = E.radical
    Up = E.perp(U)
    full = E.full()
    cands = [W for W in isotropic_subspaces(E) if R <= W and W + Up == full]
    for W1 in cands:
        for W2 in cands:
            if W1.dim == W2.dim:
                try:
                    g = isotropic_transport(E, U, W1, W2)
                    t.ok(W1.image(g.matrix) == W2, ("transport", W1, W2))
                except FormError as exc:
                    t.ok(False, ("transport failed", W1, W2, repr(exc)))


__all__ += ["relative_exhaustive_space", "converse_space", "transport_exhaustive_space",
            "witt_exhaustive_space", "transitivity_space", "fixes_subspace_space", "perp_meet_space",
            "isotropic_subspaces", "selection_fields", "classical_label", "transport_map",
            "CertificationError"]
