from fractions import Fraction

import pytest

from formwitt.errors import InfiniteFieldError, PreconditionError
from formwitt.fields import named_field
from formwitt.forms import FormClass, FormParams, enumerate_forms, euclidean_form, hyperbolic_form
from formwitt.geometry import (FormedSpace, PartialIsometry, building, coxeter_space,
                               is_isometry, is_isotropic, relative_building)
from formwitt.linalg import Matrix, Subspace, enumerate_subspaces
from formwitt.verify import all_vectors

from strategies import PARAMS


def space(name, eps, lam, n, kind="hyperbolic", sigma="id"):
    F = named_field(name, sigma)
    p = FormParams.make(F, F.coerce(eps), lam)
    return FormedSpace(hyperbolic_form(p, n) if kind == "hyperbolic" else euclidean_form(p, n))


def span(E, *vs):
    return E.subspace(vs)


def _kernel_bruteforce(E):
    vs = all_vectors(E.field, E.n)
    return {v for v in vs if all(E.omega(w, v) == 0 for w in vs)}


def _radical_bruteforce(E):
    """Kernel vectors all of whose multiples have Q = 0.

    When Lambda is closed under norms this is just Q(v) = 0; otherwise
    {v : Q(v) = 0} need not be a subspace and the multiples matter.
    """
    F = E.field
    return {v for v in _kernel_bruteforce(E)
            if all(E.Q(tuple(F.mul(c, x) for x in v)) == 0 for c in F.nonzero())}


def _isotropic_bruteforce(E, U):
    els = list(U.elements())
    return all(E.Q(u) == 0 for u in els) and all(E.omega(u, w) == 0 for u in els for w in els)


def test_kernel_examples():
    for E in (space("gf3", -1, "full", 2), space("gf4", 1, "min", 2, sigma="frobenius")):
        assert E.kernel.dim == 0
    eu = space("gf2", 1, "zero", 2, "euclidean")
    assert eu.kernel == eu.full() and not eu.form.is_zero()
    C = coxeter_space(2, [(0, 1, "inf")])
    assert C.kernel == Subspace(C.field, 2, [[Fraction(1), Fraction(1)]])


def test_radical_examples():
    eu = space("gf2", 1, "zero", 2, "euclidean")
    assert eu.radical == span(eu, (1, 1))
    F = named_field("gf4")
    Z = FormedSpace(FormClass.zero(FormParams.make(F, 1, "full"), 2))
    assert Z.radical == Z.full() == Z.kernel


def test_kernel_and_radical_against_bruteforce():
    for p in PARAMS:
        n = 2 if p.field.order <= 5 else 1
        for q in enumerate_forms(p, n):
            E = FormedSpace(q)
            assert set(E.kernel.elements()) == _kernel_bruteforce(E)
            assert set(E.radical.elements()) == _radical_bruteforce(E)
            if p.lam.is_closed():
                assert set(E.radical.elements()) == {v for v in _kernel_bruteforce(E) if E.Q(v) == 0}
            if p.field.characteristic != 2:
                assert E.radical == E.kernel


def test_perp_examples():
    E = space("gf2", 1, "full", 4)
    e = Matrix.identity(E.field, 4).rows
    assert E.perp(E.zero()) == E.full()
    assert E.perp(E.full()) == E.zero()
    assert E.perp(span(E, e[0])) == span(E, e[0], e[2], e[3])


def test_perp_symmetry_and_kernel_containment():
    for p in PARAMS:
        n = 2 if p.field.order <= 4 else 1
        for q in enumerate_forms(p, n):
            E = FormedSpace(q)
            vs = all_vectors(E.field, n)
            for v in vs:
                for w in vs:
                    assert (E.omega(v, w) == 0) == (E.omega(w, v) == 0)
            for U in enumerate_subspaces(E.field, n):
                Up = E.perp(U)
                assert E.kernel <= Up
                want = {v for v in vs if all(E.omega(v, u) == 0 for u in U.basis)}
                assert set(Up.elements()) == want
                if is_isotropic(E, U):
                    assert U <= Up


def test_isotropic_examples():
    E = space("gf2", 1, "full", 4)
    e = Matrix.identity(E.field, 4).rows
    assert is_isotropic(E, E.zero())
    assert is_isotropic(E, span(E, e[0], e[2]))
    assert not is_isotropic(E, span(E, e[0], e[1]))
    H = space("gf2", 1, "zero", 2)
    assert not is_isotropic(H, span(H, (1, 1)))


def test_isotropic_against_bruteforce():
    for p in PARAMS:
        F = p.field
        n = 3 if F.order == 2 else (2 if F.order <= 5 else 1)
        subs = enumerate_subspaces(F, n)
        for q in enumerate_forms(p, n):
            E = FormedSpace(q)
            for U in subs:
                assert is_isotropic(E, U) == _isotropic_bruteforce(E, U)


def test_is_isometry_examples():
    E = space("gf2", 1, "full", 2)
    F = E.field
    assert is_isometry(Matrix.identity(F, 2), E)
    assert is_isometry(Matrix(F, [[0, 1], [1, 0]]), E)
    H = space("gf2", 1, "zero", 2)
    assert not is_isometry(Matrix(F, [[1, 1], [0, 1]]), H)
    assert not is_isometry(Matrix.identity(F, 3), H)


def test_building_examples():
    E = space("gf2", 1, "full", 4)
    B = building(E)
    assert sum(1 for W in B if W.dim == 2) == 15 == (2 + 1) * (2 ** 2 + 1)
    assert sum(1 for W in B if W.dim == 1) == 15
    H = space("gf2", 1, "zero", 2)
    assert building(H) == sorted([span(H, (1, 0)), span(H, (0, 1))], key=lambda S: S.sort_key)
    F3 = named_field("gf3")
    aniso = FormedSpace(euclidean_form(FormParams.make(F3, 1, "zero"), 2))  # x^2 + y^2 over GF(3)
    assert building(aniso) == []
    with pytest.raises(InfiniteFieldError):
        building(coxeter_space(2, [(0, 1, 3)]))


def test_building_is_sorted():
    E = space("gf2", 1, "zero", 4)
    B = building(E)
    assert B == sorted(B, key=lambda S: S.sort_key)


def test_relative_building():
    E = space("gf2", 1, "full", 4)
    U = span(E, (1, 0, 0, 0))
    rel = relative_building(E, U)
    full = E.full()
    assert rel and all(W + E.perp(U) == full for W in rel)
    assert span(E, (0, 1, 0, 0)) in rel and span(E, (0, 1, 1, 0)) in rel
    with pytest.raises(PreconditionError):
        relative_building(E, span(E, (1, 0, 0, 0), (0, 1, 0, 0)))


def test_perp_meet_inclusion_gf2_4():
    for kind in ("full", "zero"):
        E = space("gf2", 1, kind, 4)
        subs = enumerate_subspaces(E.field, 4)
        perps = {S: E.perp(S) for S in subs}
        for U in subs:
            if is_isotropic(E, U):
                for W in subs:
                    if W + perps[U] == E.full():
                        assert (U & perps[W]) <= E.radical


def test_partial_isometry_certification():
    E = space("gf2", 1, "zero", 2)
    f = PartialIsometry(E, [(1, 0)], [(0, 1)])
    assert f((1, 0)) == (0, 1)
    with pytest.raises(PreconditionError):
        PartialIsometry(E, [(1, 0)], [(1, 1)])
    with pytest.raises(PreconditionError):
        PartialIsometry(E, [(1, 0), (1, 0)], [(1, 0), (0, 1)])


def test_coxeter_a2():
    C = coxeter_space(2, [(0, 1, 3)])
    assert C.kernel.dim == 0
    assert C.form.omega_rows == ((2, -1), (-1, 2))


def test_space_json_round_trip():
    E = space("gf4", 1, "min", 2, sigma="frobenius")
    subs = {"W": span(E, (1, 0))}
    d = E.to_json(subs)
    E2 = FormedSpace.from_json(d)
    assert E2 == E and E2.named_subspaces(d) == subs
