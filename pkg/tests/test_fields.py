from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from formwitt.errors import FieldMismatchError, PreconditionError
from formwitt.fields import (AdditiveSubgroup, Field, coset_reduce, field_arithmetic,
                             hilbert90_solve, involve, is_irreducible, lambda_max,
                             lambda_min, named_field, norm_one_elements, subgroup_validate)

from strategies import field_and_elements


def test_arithmetic_examples():
    F5 = named_field("gf5")
    assert field_arithmetic(F5(3), F5(4), "add") == F5(2)
    F4 = named_field("gf4")
    x = F4([0, 1])
    assert x * x == F4([1, 1])
    Q = Field.rationals()
    assert Q(Fraction(2, 3)) * Q(Fraction(3, 4)) == Q(Fraction(1, 2))


def test_arithmetic_errors(gf4, gf9):
    with pytest.raises(ZeroDivisionError):
        field_arithmetic(gf4(1), gf4(0), "div")
    with pytest.raises(FieldMismatchError):
        field_arithmetic(gf4(1), gf9(1), "add")


def test_involve_examples(gf4f, gf9f):
    i = gf9f([0, 1])
    assert involve(i) == gf9f([0, 2])
    assert involve(named_field("gf5")(3)) == named_field("gf5")(3)
    x = gf4f([0, 1])
    assert involve(x) == gf4f([1, 1])


def test_field_spec_validation():
    with pytest.raises(PreconditionError):
        Field.extension(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2
    with pytest.raises(PreconditionError):
        Field.prime(4)
    with pytest.raises(PreconditionError):
        Field.extension(2, 3, None, "frobenius")
    assert is_irreducible((1, 1, 1), 2)


def test_norm_one_examples(gf2, gf9f):
    assert norm_one_elements(named_field("gf5")) == [1, 4]
    assert norm_one_elements(gf2) == [1]
    brute = [a for a in gf9f.nonzero() if gf9f.mul(a, gf9f._power(a, 3)) == 1]
    assert norm_one_elements(gf9f) == brute and len(brute) == 4


def test_hilbert90_examples(gf9f, gf4f):
    minus_one = gf9f.coerce(-1)
    assert hilbert90_solve(gf9f, minus_one) == gf9f.coerce([0, 1])
    assert hilbert90_solve(gf9f, 1) == 1
    x = gf4f.coerce([0, 1])
    assert hilbert90_solve(gf4f, x) == x


def test_hilbert90_all_norm_one(roster):
    for F in roster:
        if F.has_trivial_involution:
            with pytest.raises(PreconditionError):
                hilbert90_solve(F, 1)
            continue
        for eps in norm_one_elements(F):
            a = hilbert90_solve(F, eps)
            assert a and F.mul(F.inv(a), F.conj(a)) == eps


def _brute_min(F, eps):
    return {F.sub(a, F.mul(eps, F.conj(a))) for a in F.elements()}


def _brute_max(F, eps):
    return {a for a in F.elements() if F.add(a, F.mul(eps, F.conj(a))) == 0}


def test_lambda_against_definitions(roster):
    for F in roster:
        for eps in norm_one_elements(F):
            lo, hi = lambda_min(F, eps), lambda_max(F, eps)
            assert lo.members == _brute_min(F, eps)
            assert hi.members == _brute_max(F, eps)
            assert lo <= hi
            if not (F.characteristic == 2 and F.has_trivial_involution):
                assert lo == hi


def test_lambda_table_examples(gf2, gf9f):
    F5 = named_field("gf5")
    assert lambda_min(F5, 1).is_zero and lambda_max(F5, 1).is_zero
    assert lambda_min(gf2, 1).is_zero and lambda_max(gf2, 1).is_full
    fixed = AdditiveSubgroup.fixed_field(gf9f)
    minus_one = gf9f.coerce(-1)
    assert lambda_min(gf9f, minus_one) == fixed == lambda_max(gf9f, minus_one)


def test_lambda_for_eps_not_minus_one(gf9f):
    # the corrected closed form (1 - eps) F^sigma; the table's (1 + eps) F^sigma is checked in acceptance
    fixed = gf9f.fixed_elements()
    for eps in norm_one_elements(gf9f):
        if eps in (gf9f.coerce(-1), 1):
            continue
        c = gf9f.sub(1, eps)
        want = AdditiveSubgroup.span(gf9f, [gf9f.mul(c, t) for t in fixed])
        assert lambda_max(gf9f, eps) == want
    i = gf9f.coerce([0, 1])
    assert lambda_max(gf9f, 1) == AdditiveSubgroup.span(gf9f, [i])


def test_rationals_lambda():
    Q = Field.rationals()
    assert lambda_min(Q, 1).is_zero and lambda_max(Q, 1).is_zero
    assert lambda_min(Q, -1).is_full
    assert norm_one_elements(Q) == [1, -1]


def test_subgroup_validate_examples(gf4):
    lam = AdditiveSubgroup.span(gf4, [1])
    assert subgroup_validate(gf4, 1, lam)
    assert not lam.is_closed()
    F5 = named_field("gf5")
    assert not subgroup_validate(F5, 1, AdditiveSubgroup.full(F5))
    for F in (gf4, F5):
        assert subgroup_validate(F, 1, lambda_min(F, 1))


def test_intermediate_subgroups_gf4(gf4):
    # brute force over the five subgroups of GF(4): the three lines sit strictly between 0 and F
    ok = [lam for lam in _subgroups(gf4) if subgroup_validate(gf4, 1, lam)]
    assert len(ok) == 5
    assert sum(1 for lam in ok if not lam.is_zero and not lam.is_full) == 3


def _subgroups(F):
    from formwitt.linalg import enumerate_subspaces
    return [AdditiveSubgroup(F, S.basis) for S in enumerate_subspaces(F.prime_field, F.k)]


def test_coset_reduce_examples(gf4):
    lam = AdditiveSubgroup.span(gf4, [1])
    assert coset_reduce(gf4.coerce([1, 1]), lam) == gf4.coerce([0, 1])
    assert coset_reduce(3, AdditiveSubgroup.zero(gf4)) == 3
    assert coset_reduce(3, AdditiveSubgroup.full(gf4)) == 0
    assert coset_reduce(gf4([1, 1]), lam) == gf4([0, 1])


def test_coset_reduce_exhaustive(roster):
    for F in roster:
        for lam in _subgroups(F):
            for a in F.elements():
                r = lam.reduce(a)
                assert F.sub(r, a) in lam
                assert lam.reduce(r) == r
                for x in lam.members:
                    assert lam.reduce(F.add(a, x)) == r


def test_core_is_largest_closed(roster):
    for F in roster:
        norms = {F.norm(c) for c in F.nonzero()}
        for lam in _subgroups(F):
            core = lam.core()
            assert core <= lam and core.is_closed()
            for other in _subgroups(F):
                if other <= lam and all(F.mul(n, x) in other for n in norms for x in other.members):
                    assert other <= core


def test_json_round_trip(roster):
    for F in roster:
        assert Field.from_json(F.to_json()) == F
        for a in F.elements():
            assert F.coerce(F.to_json_value(a)) == a
        lam = lambda_max(F, 1)
        assert AdditiveSubgroup.from_json(F, lam.to_json()) == lam


@given(field_and_elements(3))
def test_field_axioms(fe):
    F, (a, b, c) = fe
    add, mul = F.add, F.mul
    assert add(a, b) == add(b, a) and mul(a, b) == mul(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert F.sub(add(a, b), b) == a
    if b:
        assert mul(F.div(a, b), b) == a


@given(field_and_elements(2))
def test_involution_is_automorphism(fe):
    F, (a, b) = fe
    c = F.conj
    assert c(c(a)) == a
    assert c(F.add(a, b)) == F.add(c(a), c(b))
    assert c(F.mul(a, b)) == F.mul(c(a), c(b))


@given(st.integers(-50, 50), st.integers(1, 50))
def test_rational_coercion(num, den):
    Q = Field.rationals()
    assert Q.coerce(f"{num}/{den}") == Fraction(num, den)
    assert Q.coerce(Q.to_json_value(Fraction(num, den))) == Fraction(num, den)
