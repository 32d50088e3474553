import itertools

import pytest

from formwitt.errors import BudgetExceeded, InfiniteFieldError
from formwitt.fields import named_field
from formwitt.forms import (FormParams, enumerate_forms, euclidean_form,
                            hyperbolic_form, roster_params)
from formwitt.geometry import FormedSpace, coxeter_space, is_isometry
from formwitt.linalg import Matrix
from formwitt.verify import (CHECK_NAMES, GroupCensus, check_eq1, check_lemma38,
                             check_prop27, check_prop29, check_propA1,
                             check_thm1_counts, check_transitivity,
                             check_witt_exhaustive, classical_identification_report,
                             enumerate_isometries, form_classes_bruteforce,
                             group_order_formula, isotropic_subspaces,
                             orbit_partition, run_checks, selection_fields)


def space(name, eps, lam, n, kind="hyperbolic", sigma="id"):
    F = named_field(name, sigma)
    p = FormParams.make(F, F.coerce(eps), lam)
    return FormedSpace(hyperbolic_form(p, n) if kind == "hyperbolic" else euclidean_form(p, n))


def _naive_group(E):
    F, n = E.field, E.n
    out = []
    for flat in itertools.product(range(F.order), repeat=n * n):
        g = Matrix(F, [list(flat[i * n:(i + 1) * n]) for i in range(n)])
        if g.is_invertible() and is_isometry(g, E):
            out.append(g.rows)
    return sorted(out)


def test_census_matches_naive_filter():
    for name in ("gf2", "gf3", "gf4"):
        F = named_field(name)
        for p in roster_params(F):
            for q in enumerate_forms(p, 2 if F.order <= 3 else 1):
                E = FormedSpace(q)
                assert [m.rows for m in enumerate_isometries(E).elements] == _naive_group(E)
    F = named_field("gf4", "frobenius")
    for p in roster_params(F):
        for q in enumerate_forms(p, 2):
            E = FormedSpace(q)
            assert [m.rows for m in enumerate_isometries(E).elements] == _naive_group(E)


@pytest.mark.parametrize("args,order", [
    (("gf2", 1, "full", 2), 6),
    (("gf3", -1, "full", 2), 24),
    (("gf2", 1, "zero", 2), 2),
    (("gf4", 1, "min", 1, "euclidean", "frobenius"), 3),
    (("gf2", 1, "full", 4), 720),
])
def test_group_orders(args, order):
    assert enumerate_isometries(space(*args)).order == order


def test_census_closure():
    for args in (("gf2", 1, "full", 2), ("gf3", -1, "full", 2), ("gf2", 1, "zero", 4)):
        assert enumerate_isometries(space(*args)).check_closure()
    bad = GroupCensus(space("gf2", 1, "full", 2), [Matrix.identity(named_field("gf2"), 2),
                                                    Matrix(named_field("gf2"), [[1, 1], [0, 1]]),
                                                    Matrix(named_field("gf2"), [[0, 1], [1, 0]])])
    assert not bad.check_closure()


def test_budget_and_infinite_field():
    with pytest.raises(BudgetExceeded):
        enumerate_isometries(space("gf3", -1, "full", 4), budget=1000)
    with pytest.raises(InfiniteFieldError):
        enumerate_isometries(coxeter_space(2, [(0, 1, 3)]))
    with pytest.raises(BudgetExceeded):
        run_checks(selection_fields("gf2"), 9)


def test_lagrangians_form_one_orbit():
    E = space("gf2", 1, "full", 4)
    census = enumerate_isometries(E)
    lag = [S for S in isotropic_subspaces(E) if S.dim == 2]
    orbits = orbit_partition(census, lag)
    assert len(lag) == 15 and len(orbits) == 1


def test_orbit_examples():
    E = space("gf2", 1, "zero", 2, "euclidean")
    census = enumerate_isometries(E)
    iso = isotropic_subspaces(E)
    orbits = orbit_partition(census, iso)
    invs = [inv for _, inv in orbits]
    assert len(invs) == len(set(invs))
    R = E.radical
    assert all((S.dim, (S & R).dim) == inv for orb, inv in orbits for S in orb)
    single = orbit_partition(census, [E.zero()])
    assert len(single) == 1


def test_group_order_formulas():
    assert group_order_formula("Sp", 2, 2) == 6
    assert group_order_formula("Sp", 3, 2) == 24
    assert group_order_formula("Sp", 2, 4) == 720
    assert group_order_formula("U", 2, 1) == 3
    assert group_order_formula("GL", 2, 2) == 6
    assert group_order_formula("O+", 2, 2) == 2
    assert group_order_formula("O+", 2, 4) == 72
    assert group_order_formula("O-", 3, 2) == 8


def test_classical_report_examples():
    F2, F4 = named_field("gf2"), named_field("gf4", "frobenius")
    r = classical_identification_report(FormParams.make(F2, 1, "full"), 2)
    assert r["hyperbolic"]["label"] == "Sp_2" and r["hyperbolic"]["order"] == 6
    assert r["euclidean"]["label"] == "GL_2" and r["euclidean"]["order"] == 6
    u = classical_identification_report(FormParams.make(F4, 1, "min"), 1)
    assert u["euclidean"]["label"] == "U_1" and u["euclidean"]["order"] == 3
    # in char 2 the Hermitian Euclidean form is zero, so its group is GL_n
    assert classical_identification_report(FormParams.make(F4, 1, "min"), 2)["euclidean"]["label"] == "GL_2"
    for F in (F2, named_field("gf3"), F4):
        for p in roster_params(F):
            for n in (1, 2):
                for rep in classical_identification_report(p, n).values():
                    assert rep["matches_formula"], (p, n, rep)


def test_form_counts_bruteforce():
    F = named_field("gf2")
    for n in (1, 2):
        for lam, want in (("zero", 2 ** (n * (n + 1) // 2)), ("full", 2 ** (n * (n - 1) // 2))):
            p = FormParams.make(F, 1, lam)
            assert form_classes_bruteforce(p, n) == want == sum(1 for _ in enumerate_forms(p, n))


def test_quick_checks_pass():
    gf2 = selection_fields("gf2")
    for check in (check_eq1, check_prop27, check_thm1_counts, check_transitivity, check_lemma38):
        res = check(gf2, max_dim=2)
        assert res.passed, res.failures[:3]
    assert check_witt_exhaustive(gf2, max_dim=2, with_census=True).passed
    assert check_prop29(selection_fields("gf4", "id")).passed


def test_lambda_table_check_reports_rows():
    good = check_propA1([named_field(n, s) for n, s in
                         (("gf2", "id"), ("gf3", "id"), ("gf4", "id"), ("gf4", "frobenius"), ("gf5", "id"))])
    assert good.passed and good.cases == 9
    gf9 = check_propA1(selection_fields("gf9"))
    # the literal table row for eps != -1 over GF(9) disagrees with the definition
    assert gf9.cases == 6 and len(gf9.failures) == 3


def test_selection_and_names():
    assert [F.name for F in selection_fields("gf9")] == ["GF(3^2)", "GF(3^2)/frob"]
    assert len(selection_fields("gf5")) == 1
    assert "witt-exhaustive" in CHECK_NAMES and len(CHECK_NAMES) == 9
